"""Exact Laurent-polynomial arithmetic in the framing variable A.

Everything downstream (bracket sums, quantum coefficients, stable series)
is built on two types:

* :class:`LaurentPoly` — an immutable sparse polynomial in A and A^-1 with
  integer coefficients.
* :class:`RationalFn` — a formal quotient of two of them, kept unreduced
  (no gcd is ever computed; equality is by cross-multiplication).

plus the *q-presentation* (:class:`QPresentation`, :func:`to_q`), which
factors a polynomial supported on even powers of A into

    sign * A^quarter_shift * (c_0 + c_1 A^-2 + c_2 A^-4 + ...),   c_0 > 0,

so that with q = A^-4 the steps of A^-2 are half-integer steps in q.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Mapping, Union

from .errors import DegreeError, ExactnessError

_Scalar = Union[int, "LaurentPoly"]


def _normalized(items: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    acc: dict[int, int] = {}
    for e, c in items:
        if c:
            acc[e] = acc.get(e, 0) + c
    return tuple(sorted((e, c) for e, c in acc.items() if c))


@dataclasses.dataclass(frozen=True, slots=True)
class LaurentPoly:
    """Sparse Laurent polynomial over the integers.

    ``terms`` is a tuple of (exponent, coefficient) pairs, strictly
    increasing in exponent, with no zero coefficients.  Any iterable of
    pairs may be passed in; it is normalized on construction.
    """

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", _normalized(self.terms))

    # -- constructors -------------------------------------------------

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> "LaurentPoly":
        return cls(tuple(d.items()))

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls(((exp, coeff),))

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls(((0, c),))

    # -- basic queries -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exp: int) -> int:
        for e, c in self.terms:
            if e == exp:
                return c
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def min_degree(self) -> int:
        """Lowest exponent with a nonzero coefficient."""
        if not self.terms:
            raise DegreeError("degree of the zero polynomial is undefined")
        return self.terms[0][0]

    def max_degree(self) -> int:
        if not self.terms:
            raise DegreeError("degree of the zero polynomial is undefined")
        return self.terms[-1][0]

    def support(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.terms)

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other: _Scalar) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(((0, other),))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: _Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(tuple(acc.items()))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: _Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: _Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: _Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(tuple(acc.items()))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            # Only units (+-A^e) can be inverted; that covers framing factors.
            if len(self.terms) == 1 and abs(self.terms[0][1]) == 1:
                e, c = self.terms[0]
                return LaurentPoly(((e * n, c if n % 2 else 1),))
            raise ExactnessError("negative power of a non-unit polynomial")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by A^k."""
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms))

    def mirror(self) -> "LaurentPoly":
        """Substitute A -> A^-1."""
        return LaurentPoly(tuple((-e, c) for e, c in self.terms))

    # -- rendering ------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.terms):
            mag = abs(c)
            if c < 0:
                out.append("-")
            elif i:
                out.append("+")
            if e == 0:
                out.append(str(mag))
            else:
                var = "A" if e == 1 else f"A^{e}"
                out.append(var if mag == 1 else f"{mag}*{var}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"<LaurentPoly {self}>"


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
A = LaurentPoly.monomial(1, 1)


def monomial(coeff: int, exp: int) -> LaurentPoly:
    return LaurentPoly.monomial(coeff, exp)


def exact_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return r with p == q*r, or raise ExactnessError if no such r exists.

    Division proceeds from the low-degree end; the quotient exists iff
    every step divides exactly and the remainder reaches zero.
    """
    if q.is_zero:
        raise ExactnessError("division by the zero polynomial")
    if p.is_zero:
        return ZERO
    qd = dict(q.terms)
    q_min = q.min_degree()
    q_lead = qd[q_min]
    e_max = p.max_degree() - q.max_degree()
    rem = dict(p.terms)
    out: dict[int, int] = {}
    while rem:
        r_min = min(rem)
        e = r_min - q_min
        c, m = divmod(rem[r_min], q_lead)
        if m or e > e_max:
            raise ExactnessError(f"{q} does not divide {p} exactly")
        out[e] = c
        for qe, qc in qd.items():
            k = qe + e
            v = rem.get(k, 0) - qc * c
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly(tuple(out.items()))


@dataclasses.dataclass(frozen=True, slots=True, eq=False)
class RationalFn:
    """Unreduced quotient num/den of Laurent polynomials (den != 0).

    No common factors are cancelled, ever; equality compares
    num1*den2 == num2*den1.
    """

    num: LaurentPoly
    den: LaurentPoly = ONE

    def __post_init__(self):
        if self.den.is_zero:
            raise ExactnessError("zero denominator")

    @classmethod
    def of(cls, x: Union[int, LaurentPoly, "RationalFn"]) -> "RationalFn":
        if isinstance(x, RationalFn):
            return x
        if isinstance(x, int):
            return cls(LaurentPoly.constant(x))
        return cls(x)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = RationalFn.of(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __add__(self, other):
        other = RationalFn.of(other)
        if self.den == other.den:
            # keep the shared denominator instead of squaring it; long
            # chains of additions stay flat when terms are aligned
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFn.of(other))

    def __rsub__(self, other):
        return RationalFn.of(other) + (-self)

    def __mul__(self, other):
        other = RationalFn.of(other)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalFn":
        if self.num.is_zero:
            raise ExactnessError("reciprocal of zero")
        return RationalFn(self.den, self.num)

    def min_degree(self) -> int:
        """d(num) - d(den): the leading low-end exponent of the expansion."""
        if self.num.is_zero:
            raise DegreeError("degree of the zero rational function is undefined")
        return self.num.min_degree() - self.den.min_degree()

    def truncate(self, k: int) -> LaurentPoly:
        return truncate(self, k)

    def to_poly(self) -> LaurentPoly:
        """Exact quotient as a polynomial (raises if den does not divide num)."""
        return exact_divide(self.num, self.den)

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"<RationalFn {self}>"


def truncate(r: RationalFn, k: int) -> LaurentPoly:
    """First k degree-slots of the low-end power-series expansion of r.

    Returns the terms with exponents in [d(r), d(r)+k).  Each division step
    must be exact over the integers or ExactnessError is raised.
    """
    if k <= 0 or r.num.is_zero:
        return ZERO
    den = dict(r.den.terms)
    d_min = r.den.min_degree()
    lead = den[d_min]
    rem = dict(r.num.terms)
    d0 = min(rem) - d_min
    out: dict[int, int] = {}
    while rem:
        e = min(rem) - d_min
        if e >= d0 + k:
            break
        c, m = divmod(rem[min(rem)], lead)
        if m:
            raise ExactnessError(
                "series expansion leaves the integer coefficient ring")
        out[e] = c
        for de, dc in den.items():
            key = de + e
            v = rem.get(key, 0) - dc * c
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return LaurentPoly(tuple(out.items()))


@dataclasses.dataclass(frozen=True, slots=True)
class QPresentation:
    """A Laurent polynomial on even A-powers, rewritten around q = A^-4.

    value = sign * A^quarter_shift * sum_i coeffs[i] * A^(-2i)

    Steps of A^-2 are half-integer steps of q, so ``coeffs`` reads off the
    coefficient list in increasing half-powers of q starting at the lowest
    q-degree term, which sits at q-exponent -quarter_shift/4.  By
    construction coeffs[0] > 0 and the last entry is nonzero.
    """

    sign: int
    quarter_shift: int
    coeffs: tuple[int, ...]

    @property
    def min_halfq(self) -> int:
        """q-exponent of the first coefficient, in halves of q."""
        return -self.quarter_shift // 2

    def coeff_at_halfq(self, h: int) -> int:
        i = h - self.min_halfq
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    @property
    def is_q_integral(self) -> bool:
        """True when all terms land on integer powers of q."""
        if not self.coeffs:
            return True
        if self.min_halfq % 2:
            return False
        return all(c == 0 for c in self.coeffs[1::2])

    def q_coeffs(self) -> tuple[int, list[int]]:
        """(lowest integer q-exponent, coefficient list in steps of q)."""
        if not self.is_q_integral:
            raise ExactnessError("series has genuine half-integer q-powers")
        return self.min_halfq // 2, list(self.coeffs[0::2])

    def as_poly(self) -> LaurentPoly:
        terms = [(self.quarter_shift - 2 * i, self.sign * c)
                 for i, c in enumerate(self.coeffs)]
        return LaurentPoly(tuple(terms))


def to_q(p: LaurentPoly) -> QPresentation:
    """Factor p into its q-presentation.  Requires even support.

    The zero polynomial maps to QPresentation(1, 0, ()).
    """
    if p.is_zero:
        return QPresentation(1, 0, ())
    if any(e % 2 for e, _ in p.terms):
        raise ExactnessError(
            "polynomial has odd A-exponents; no q-presentation exists")
    top = p.max_degree()
    lead = p.coeff(top)
    sign = 1 if lead > 0 else -1
    span = (top - p.min_degree()) // 2
    coeffs = tuple(sign * p.coeff(top - 2 * i) for i in range(span + 1))
    return QPresentation(sign, top, coeffs)
