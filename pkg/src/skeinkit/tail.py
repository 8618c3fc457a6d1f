"""Stable coefficient series of the colored invariants.

Two Laurent series in q "agree to order n" (written here as dot_eq)
when, after each is normalized by a sign and a power of q to start with
a positive constant term, all coefficients of q^e for e < n coincide.
As the color grows, the low-end coefficients of the reduced colored
invariant of an adequate link freeze one by one; the resulting limit
series is the *tail* (and, at the other end of the polynomial, the
*head* — computed here as the tail of the mirror).

This module provides the comparison, the extraction of verified stable
coefficients, and a per-color verification harness used by the CLI.
"""

from __future__ import annotations

import dataclasses
import time
from typing import Union

from .diagram import PDCode
from .errors import BudgetError, StabilizationError
from .jones import reduced_colored
from .poly import LaurentPoly, QPresentation, to_q


@dataclasses.dataclass(frozen=True, slots=True)
class QSeries:
    """A normalized q-series: sign * q^(shift/2) * sum coeffs[i] q^(step*i/2).

    ``coeffs[0]`` is positive and ``coeffs[-1]`` nonzero; ``step_halves``
    is 2 when all exponents are whole powers of q (every knot), 1 when
    half-powers occur (even component count).  ``shift_halves`` is the
    factored-out lowest exponent, in half-power units.
    """

    sign: int
    shift_halves: int
    step_halves: int
    coeffs: tuple[int, ...]

    def coefficient(self, i: int) -> int:
        """i-th normalized coefficient (0 beyond the end of the series)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def in_halves(self) -> "QSeries":
        """The same series re-expressed with step 1 (interior zeros)."""
        if self.step_halves == 1:
            return self
        co = [0] * (2 * len(self.coeffs) - 1)
        co[::2] = self.coeffs
        return QSeries(self.sign, self.shift_halves, 1, tuple(co))


def normalize(p: Union[LaurentPoly, QPresentation]) -> QSeries:
    """Factor out sign and leading power so the series starts with +c, c > 0.

    Accepts an A-polynomial (converted through its q-presentation) or a
    ready q-presentation.  Rejects zero.
    """
    q = to_q(p) if isinstance(p, LaurentPoly) else p
    lo = q.min_halfq
    halves = list(q.coeffs)  # dense in half-q steps starting at lo
    step = 2 if all(c == 0 for c in halves[1::2]) and lo % 2 == 0 else 1
    co = halves[::step]
    while co and co[-1] == 0:
        co.pop()
    sign = 1 if co[0] > 0 else -1
    return QSeries(sign * q.sign, lo, step, tuple(sign * c for c in co))


def dot_eq(p1, p2, n: int) -> tuple[bool, int | None]:
    """Do the normalized series agree below exponent n (in q-units)?

    Returns (verdict, first_mismatch): the verdict covers coefficients
    of q^e for 0 <= e < n after normalization; first_mismatch is the
    offset of the earliest disagreement anywhere in the two series
    (None when they are identical), measured in steps of the finer of
    the two series — whole powers of q when both are q-integral.
    """
    s1, s2 = normalize(p1), normalize(p2)
    if s1.step_halves != s2.step_halves:
        s1, s2 = s1.in_halves(), s2.in_halves()
    length = max(len(s1.coeffs), len(s2.coeffs))
    mismatch = None
    for i in range(length):
        if s1.coefficient(i) != s2.coefficient(i):
            mismatch = i
            break
    # units per q: one step when integral (step 2 halves), two otherwise
    per_q = 2 // s1.step_halves
    ok = mismatch is None or mismatch >= n * per_q
    return ok, mismatch


def tail_extract(d: PDCode, k: int, side: str = "tail") -> list[int]:
    """First k verified-stable coefficients of the tail (or head).

    Computes the reduced invariant at colors k and k+1 and confirms
    they agree below q^k before reporting anything; a disagreement
    raises StabilizationError with the witness.  The head is the tail
    of the mirrored polynomial (q -> 1/q).
    """
    if k < 1:
        raise ValueError("need k >= 1 coefficients")
    if side not in ("tail", "head"):
        raise ValueError(f"side must be 'tail' or 'head', not {side!r}")

    def series_at(color_dim: int) -> LaurentPoly:
        p = reduced_colored(d, color_dim)
        return p.mirror() if side == "head" else p

    jk, jk1 = series_at(k), series_at(k + 1)
    ok, mismatch = dot_eq(jk, jk1, k)
    if not ok:
        raise StabilizationError(k, mismatch,
                                 detail=f"{side} coefficients beyond this "
                                        f"offset are not stable")
    return list(normalize(jk).coeffs[:k])


@dataclasses.dataclass(frozen=True, slots=True)
class StabilizationRecord:
    """One comparison J_N vs J_{N+1}."""

    color: int
    verdict: bool
    mismatch: int | None  # first differing offset anywhere, if any
    seconds: float

    def as_dict(self) -> dict:
        return {"color": self.color, "verdict": self.verdict,
                "mismatch": self.mismatch,
                "seconds": round(self.seconds, 3)}


@dataclasses.dataclass(frozen=True, slots=True)
class StabilizationReport:
    """Verdicts of J_N ≐_N J_{N+1} for N = 2..Nmax-1."""

    records: tuple[StabilizationRecord, ...]
    complete: bool

    @property
    def all_true(self) -> bool:
        return self.complete and all(r.verdict for r in self.records)

    def as_dict(self) -> dict:
        return {"complete": self.complete,
                "all_stable": self.all_true,
                "records": [r.as_dict() for r in self.records]}


def stabilization_check(d: PDCode, n_max: int) -> StabilizationReport:
    """Compare consecutive colors up to n_max.

    Each record says whether the reduced invariants at colors N and N+1
    agree below q^N.  A budget overrun stops the scan and flags the
    report incomplete rather than raising.
    """
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    records = []
    complete = True
    prev = None
    for color in range(2, n_max + 1):
        t0 = time.monotonic()
        try:
            cur = reduced_colored(d, color)
        except BudgetError:
            complete = False
            break
        if prev is not None:
            ok, mismatch = dot_eq(prev, cur, color - 1)
            records.append(StabilizationRecord(
                color - 1, ok, mismatch, time.monotonic() - t0))
        prev = cur
    return StabilizationReport(tuple(records), complete)
