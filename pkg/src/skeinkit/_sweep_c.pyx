# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sweep kernel: int64 coefficients with overflow detection.

Same program contract as skeinkit._sweep_py (see its docstring).  All
coefficient arithmetic checks for int64 overflow and raises OverflowError,
upon which the caller re-runs the sweep on the arbitrary-precision Python
kernel — so using this kernel never changes results, only speed.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

cdef extern from *:
    bint __builtin_add_overflow(long long, long long, long long*) nogil
    bint __builtin_sub_overflow(long long, long long, long long*) nogil

KERNEL_NAME = "c"


cdef class _Packed:
    """base exponent + owned int64 coefficient buffer (steps of A^2)."""
    cdef long long base
    cdef long long* co
    cdef Py_ssize_t n

    def __dealloc__(self):
        if self.co != NULL:
            free(self.co)


cdef _Packed _make(long long base, Py_ssize_t n):
    cdef _Packed p = _Packed.__new__(_Packed)
    p.base = base
    p.n = n
    p.co = <long long*> malloc((n if n > 0 else 1) * sizeof(long long))
    if p.co == NULL:
        raise MemoryError()
    return p


cdef _Packed _mul_delta(_Packed src, int times):
    """src * (-A^2 - A^-2)^times; always returns a fresh owned buffer."""
    cdef _Packed cur = src
    cdef _Packed out
    cdef Py_ssize_t j, n
    cdef long long v
    cdef int k
    for k in range(times):
        n = cur.n
        out = _make(cur.base - 2, n + 2)
        for j in range(n + 2):
            v = 0
            if j < n:
                if __builtin_sub_overflow(v, cur.co[j], &v):
                    raise OverflowError("int64 overflow in sweep kernel")
            if j >= 2:
                if __builtin_sub_overflow(v, cur.co[j - 2], &v):
                    raise OverflowError("int64 overflow in sweep kernel")
            out.co[j] = v
        cur = out
    if cur is src:     # times == 0: caller expects an owned copy
        out = _make(src.base, src.n)
        memcpy(out.co, src.co, src.n * sizeof(long long))
        return out
    return cur


cdef _Packed _add(_Packed a, _Packed b):
    """a + b with base alignment (bases are congruent mod 2)."""
    cdef long long lo = a.base if a.base < b.base else b.base
    cdef long long ha = a.base + 2 * a.n
    cdef long long hb = b.base + 2 * b.n
    cdef long long hi = ha if ha > hb else hb
    cdef Py_ssize_t n = <Py_ssize_t> ((hi - lo) >> 1)
    cdef _Packed out = _make(lo, n)
    cdef Py_ssize_t off, m
    cdef long long v
    memset(out.co, 0, n * sizeof(long long))
    off = <Py_ssize_t> ((a.base - lo) >> 1)
    for m in range(a.n):
        out.co[off + m] = a.co[m]
    off = <Py_ssize_t> ((b.base - lo) >> 1)
    for m in range(b.n):
        if __builtin_add_overflow(out.co[off + m], b.co[m], &v):
            raise OverflowError("int64 overflow in sweep kernel")
        out.co[off + m] = v
    return out


def run(program):
    """Execute a sweep program; return (base, [coeffs]) packed in A^2 steps."""
    cdef _Packed init = _make(0, 1)
    init.co[0] = 1
    cdef dict states = {b"": init}
    cdef dict nxt
    cdef bytes key, new_key
    cdef Py_ssize_t w0, nkeep, nclose, w4, i, j, k, m, lo_i, hi_i
    cdef int branch, loops
    cdef long long shift
    cdef unsigned char* p = NULL
    cdef long long* ci = NULL
    cdef long long* cj = NULL
    cdef long long* keepv = NULL
    cdef long long* rankv = NULL
    cdef unsigned char* kb = NULL
    cdef _Packed cur, widened
    cdef object got, value, closures, keep, rank, step_data

    for step_data in program:
        w0 = step_data[0]
        closures = step_data[1]
        keep = step_data[2]
        rank = step_data[3]
        nclose = len(closures)
        nkeep = len(keep)
        w4 = w0 + 4
        ci = <long long*> malloc((nclose if nclose else 1) * sizeof(long long))
        cj = <long long*> malloc((nclose if nclose else 1) * sizeof(long long))
        keepv = <long long*> malloc((nkeep if nkeep else 1) * sizeof(long long))
        rankv = <long long*> malloc(w4 * sizeof(long long))
        p = <unsigned char*> malloc(w4)
        kb = <unsigned char*> malloc(nkeep if nkeep else 1)
        if ci == NULL or cj == NULL or keepv == NULL or rankv == NULL \
                or p == NULL or kb == NULL:
            free(ci); free(cj); free(keepv); free(rankv); free(p); free(kb)
            raise MemoryError()
        try:
            for k in range(nclose):
                ci[k] = closures[k][0]
                cj[k] = closures[k][1]
            for k in range(nkeep):
                keepv[k] = keep[k]
            for k in range(w4):
                rankv[k] = rank[k]

            nxt = {}
            for key, value in states.items():
                cur = <_Packed> value
                for branch in range(2):
                    for m in range(w0):
                        p[m] = <unsigned char> key[m]
                    if branch == 0:      # A: (a b)(c d), weight +1
                        p[w0] = <unsigned char> (w0 + 1)
                        p[w0 + 1] = <unsigned char> w0
                        p[w0 + 2] = <unsigned char> (w0 + 3)
                        p[w0 + 3] = <unsigned char> (w0 + 2)
                        shift = 1
                    else:                # B: (a d)(b c), weight -1
                        p[w0] = <unsigned char> (w0 + 3)
                        p[w0 + 1] = <unsigned char> (w0 + 2)
                        p[w0 + 2] = <unsigned char> (w0 + 1)
                        p[w0 + 3] = <unsigned char> w0
                        shift = -1
                    loops = 0
                    for k in range(nclose):
                        i = <Py_ssize_t> ci[k]
                        j = <Py_ssize_t> cj[k]
                        if p[i] == <unsigned char> j:
                            loops += 1
                        else:
                            p[p[i]] = p[j]
                            p[p[j]] = p[i]
                    for k in range(nkeep):
                        kb[k] = <unsigned char> rankv[p[keepv[k]]]
                    new_key = PyBytes_FromStringAndSize(<char*> kb, nkeep)
                    widened = _mul_delta(cur, loops)
                    widened.base += shift
                    got = nxt.get(new_key)
                    if got is None:
                        nxt[new_key] = widened
                    else:
                        nxt[new_key] = _add(<_Packed> got, widened)
            states = nxt
        finally:
            free(ci); free(cj); free(keepv); free(rankv); free(p); free(kb)
            ci = cj = keepv = rankv = NULL
            p = kb = NULL

    if not states:
        return 0, []
    if len(states) != 1 or b"" not in states:
        raise AssertionError("sweep ended with open strand-ends")
    cur = <_Packed> states[b""]
    lo_i = 0
    hi_i = cur.n
    while lo_i < hi_i and cur.co[lo_i] == 0:
        lo_i += 1
    while hi_i > lo_i and cur.co[hi_i - 1] == 0:
        hi_i -= 1
    return cur.base + 2 * lo_i, [cur.co[m] for m in range(lo_i, hi_i)]
