"""Loop values, vertex weights, and twist-region coefficients.

These are the exact Laurent-polynomial scalars attached to closed strand
diagrams: the n-colored unknot value delta(n), its running products,
the triangle evaluation theta(a, b, c), the twist eigenvalue gamma(a, b, c),
and the coefficient list for resolving an m-fold twist region on n parallel
strands through intermediate colors.

Conventions (variable A, loop value delta(1) = -A^2 - A^-2):

    delta(n)  = (-1)^n * (A^(2n+2) - A^(-2n-2)) / (A^2 - A^-2)
    gamma(a, b, c) = (-1)^((a+b-c)/2) * A^(a + b - c + (a^2 + b^2 - c^2)/2)

theta is returned as an unreduced ratio of products of delta-factorials.
"""

from __future__ import annotations

import functools

from .errors import AdmissibilityError
from .poly import LaurentPoly, ONE, RationalFn


@functools.lru_cache(maxsize=None)
def delta(n: int) -> LaurentPoly:
    """Value of an unknotted loop colored n.  delta(-1) = 0, delta(0) = 1."""
    if n < -1:
        raise AdmissibilityError(f"delta({n}) is not defined")
    if n == -1:
        return LaurentPoly()
    sign = -1 if n % 2 else 1
    return LaurentPoly(tuple((2 * n - 4 * j, sign) for j in range(n + 1)))


@functools.lru_cache(maxsize=None)
def delta_factorial(n: int) -> LaurentPoly:
    """Running product delta(1)*...*delta(n); empty product for n <= 0."""
    if n < -1:
        raise AdmissibilityError(f"delta_factorial({n}) is not defined")
    if n <= 0:
        return ONE
    return delta_factorial(n - 1) * delta(n)


def admissible(a: int, b: int, c: int) -> bool:
    """Parity + triangle test for a color triple meeting at a vertex."""
    if a < 0 or b < 0 or c < 0:
        return False
    if (a + b + c) % 2:
        return False
    return abs(a - b) <= c <= a + b


def admissible_colors(a: int, b: int) -> list[int]:
    """All c with (a, b, c) admissible: |a-b|, |a-b|+2, ..., a+b."""
    if a < 0 or b < 0:
        raise AdmissibilityError("colors must be non-negative")
    return list(range(abs(a - b), a + b + 1, 2))


def _split(a: int, b: int, c: int) -> tuple[int, int, int]:
    if not admissible(a, b, c):
        raise AdmissibilityError(f"({a}, {b}, {c}) is not an admissible triple")
    return (b + c - a) // 2, (a + c - b) // 2, (a + b - c) // 2


def theta(a: int, b: int, c: int) -> RationalFn:
    """Evaluation of the two-vertex theta diagram with edge colors a, b, c.

    With x = (b+c-a)/2, y = (a+c-b)/2, z = (a+b-c)/2:

        theta = delta_factorial(x+y+z) * delta_factorial(x-1)
                * delta_factorial(y-1) * delta_factorial(z-1)
              / (delta_factorial(y+z-1) * delta_factorial(z+x-1)
                 * delta_factorial(x+y-1))
    """
    x, y, z = _split(a, b, c)
    num = (delta_factorial(x + y + z) * delta_factorial(x - 1)
           * delta_factorial(y - 1) * delta_factorial(z - 1))
    den = (delta_factorial(y + z - 1) * delta_factorial(z + x - 1)
           * delta_factorial(x + y - 1))
    return RationalFn(num, den)


def gamma(a: int, b: int, c: int) -> LaurentPoly:
    """Twist eigenvalue: a positive half-twist on colors (a, b) fusing to c.

    gamma(n, n, 0)^(-w) is the framing correction for an n-colored diagram
    of writhe w.
    """
    x = (a + b - c)
    if x % 2 or not admissible(a, b, c):
        raise AdmissibilityError(f"({a}, {b}, {c}) is not an admissible triple")
    sign = -1 if (x // 2) % 2 else 1
    exp = x + (a * a + b * b - c * c) // 2
    return LaurentPoly.monomial(sign, exp)


def twist_coefficients(n: int, m: int) -> list[RationalFn]:
    """Coefficients resolving m negative half-twists on two n-colored bands.

    Entry j (0 <= j <= n) multiplies the projector through color 2j:

        gamma(n, n, 2j)^m * delta(2j) / theta(n, n, 2j)

    (For a positive twist region pass m < 0.)  The j = n entry dominates the
    low-degree end for m >= 1; see the degree tests.
    """
    if n < 0:
        raise AdmissibilityError("strand color must be non-negative")
    out = []
    for j in range(n + 1):
        g = gamma(n, n, 2 * j) ** m
        th = theta(n, n, 2 * j)
        out.append(RationalFn(g * delta(2 * j) * th.den, th.num))
    return out
