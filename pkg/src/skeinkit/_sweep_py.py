"""Pure-Python sweep kernel (arbitrary-precision coefficients).

States of the pairing sweep are perfect matchings of the currently open
strand-ends, encoded as a bytes partner array P (P[P[i]] == i).  Each state
carries a packed polynomial (base exponent, coefficient list in steps of
A^2) — all coefficients at a given step share exponent parity, so the
half-steps are always empty.

The kernel consumes a *program*: per crossing a tuple

    (width_in, closures, keep, rank)

where the four new ends sit at indices width_in..width_in+3 (tuple-position
order a, b, c, d), the A-branch pairs (a b)(c d) with weight A, the B-branch
pairs (a d)(b c) with weight A^-1, ``closures`` lists index pairs to merge
in the extended frame, and ``keep``/``rank`` re-pack the survivors.

This module is deliberately free of package imports; the compiled kernel
(_sweep_c) implements the same contract with int64 coefficients.
"""

KERNEL_NAME = "py"


def _mul_delta(base, co, times):
    """Multiply packed (base, co) by (-A^2 - A^-2)^times."""
    for _ in range(times):
        n = len(co)
        out = [0] * (n + 2)
        for j in range(n + 2):
            v = 0
            if j < n:
                v -= co[j]
            if j >= 2:
                v -= co[j - 2]
            out[j] = v
        base -= 2
        co = out
    return base, co


def _accumulate(acc, key, base, co):
    """acc[key] += (base, co), aligning bases (always congruent mod 2)."""
    got = acc.get(key)
    if got is None:
        acc[key] = (base, co)
        return
    b2, c2 = got
    lo = min(base, b2)
    hi = max(base + 2 * len(co), b2 + 2 * len(c2))
    out = [0] * ((hi - lo) // 2)
    o1 = (base - lo) // 2
    for j, v in enumerate(co):
        out[o1 + j] += v
    o2 = (b2 - lo) // 2
    for j, v in enumerate(c2):
        out[o2 + j] += v
    acc[key] = (lo, out)


def _strip(base, co):
    i = 0
    while i < len(co) and co[i] == 0:
        i += 1
    if i == len(co):
        return 0, []
    j = len(co)
    while co[j - 1] == 0:
        j -= 1
    return base + 2 * i, co[i:j]


def run(program):
    """Execute a sweep program; return the packed bracket (base, coeffs).

    The empty diagram gives (0, [1]).
    """
    states = {b"": (0, [1])}
    for w0, closures, keep, rank in program:
        nxt = {}
        for key, (base, co) in states.items():
            for fresh, shift in (
                ((w0 + 1, w0, w0 + 3, w0 + 2), 1),      # A: (ab)(cd)
                ((w0 + 3, w0 + 2, w0 + 1, w0), -1),     # B: (ad)(bc)
            ):
                p = list(key)
                p.extend(fresh)
                loops = 0
                for i, j in closures:
                    x, y = p[i], p[j]
                    if x == j:
                        loops += 1
                    else:
                        p[x] = y
                        p[y] = x
                new_key = bytes(rank[p[i]] for i in keep)
                b2, c2 = base + shift, co
                if loops:
                    b2, c2 = _mul_delta(b2, list(c2), loops)
                _accumulate(nxt, new_key, b2, list(c2))
        states = {k: _strip(b, c) for k, (b, c) in nxt.items()}
        states = {k: (b, c) for k, (b, c) in states.items() if c}
    if not states:
        return 0, []
    if len(states) != 1 or b"" not in states:
        raise AssertionError("sweep ended with open strand-ends")
    return states[b""]


def replay_circles(program, branches):
    """Circle count of one fully-smoothed state.

    ``branches`` maps the program step index to 'A' or 'B'.  Uses the same
    surgery bookkeeping as :func:`run`, so equality with an independent
    circle count validates the kernel's merging logic.
    """
    p: list[int] = []
    circles = 0
    for step, (w0, closures, keep, rank) in enumerate(program):
        if branches[step] == "A":
            p = p + [w0 + 1, w0, w0 + 3, w0 + 2]
        else:
            p = p + [w0 + 3, w0 + 2, w0 + 1, w0]
        for i, j in closures:
            x, y = p[i], p[j]
            if x == j:
                circles += 1
            else:
                p[x] = y
                p[y] = x
        p = [rank[p[i]] for i in keep]
    return circles
