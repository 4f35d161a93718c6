"""Independent checks on the classifier.

Nothing here uses the case table or the indifference thresholds of the
best-response correspondences.  The maximin oracle solves both players'
security problems directly as one-dimensional piecewise-linear programs.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Optional

from .equilibrium import ProbabilityInterval, classify
from .game import ONE, ZERO, PayoffMatrix, StrategyPair, is_nash
from .numeric import to_rational


class OracleMethod(str, enum.Enum):
    MaximinExact = "MaximinExact"
    GridEpsilon = "GridEpsilon"
    SupportEnum = "SupportEnum"


@dataclass(frozen=True)
class OracleReport:
    value: Fraction
    row_opt_set: ProbabilityInterval
    col_opt_set: ProbabilityInterval
    method: OracleMethod = OracleMethod.MaximinExact
    agrees_with_classifier: Optional[bool] = None


class Affine:
    """``x -> intercept + slope * x`` on [0, 1]."""

    __slots__ = ("slope", "intercept")

    def __init__(self, at0: Fraction, at1: Fraction):
        self.intercept = at0
        self.slope = at1 - at0

    def __call__(self, x: Fraction) -> Fraction:
        return self.intercept + self.slope * x

    def crossing(self, other: "Affine") -> Optional[Fraction]:
        ds = self.slope - other.slope
        if ds == 0:
            return None
        x = (other.intercept - self.intercept) / ds
        return x if ZERO <= x <= ONE else None


def _level_set(lines: Iterable[Affine], level: Fraction, upper: bool) -> tuple[Fraction, Fraction]:
    """``{x in [0,1] : f(x) >= level for every f}`` (``<=`` when not ``upper``)."""
    lo, hi = ZERO, ONE
    for f in lines:
        s = f.slope if upper else -f.slope
        gap = (f.intercept - level) if upper else (level - f.intercept)
        # need gap + s*x >= 0
        if s == 0:
            if gap < 0:
                return ONE, ZERO
            continue
        bound = -gap / s
        if s > 0:
            lo = max(lo, bound)
        else:
            hi = min(hi, bound)
    return lo, hi


def _candidates(lines: list[Affine]) -> list[Fraction]:
    xs = [ZERO, ONE]
    x = lines[0].crossing(lines[1])
    if x is not None:
        xs.append(x)
    return xs


def _security(lines: list[Affine], maximize: bool) -> tuple[Fraction, ProbabilityInterval]:
    if maximize:
        envelope = lambda x: min(f(x) for f in lines)
        value = max(envelope(x) for x in _candidates(lines))
    else:
        envelope = lambda x: max(f(x) for f in lines)
        value = min(envelope(x) for x in _candidates(lines))
    lo, hi = _level_set(lines, value, upper=maximize)
    if lo > hi:
        raise AssertionError("optimal level set is empty")
    return value, ProbabilityInterval(lo, hi)


def maximin_oracle(m: PayoffMatrix) -> OracleReport:
    """Solve both security problems exactly and return the optimal sets.

    The row player's guarantee ``min_j L_j(alpha)`` is maximized over the
    candidate points (endpoints and the crossing of the two lines), and the
    optimal set is the level set of the lower envelope at that value.  The
    column player's problem is solved the same way on the upper envelope.
    The two values must coincide.
    """
    # row mixture alpha against column a1 / a2
    row_lines = [Affine(m.u21, m.u11), Affine(m.u22, m.u12)]
    # column mixture beta against row a1 / a2
    col_lines = [Affine(m.u12, m.u11), Affine(m.u22, m.u21)]
    v_row, row_set = _security(row_lines, maximize=True)
    v_col, col_set = _security(col_lines, maximize=False)
    if v_row != v_col:
        raise AssertionError(f"maximin {v_row} != minimax {v_col}")
    return OracleReport(v_row, row_set, col_set)


def cross_check(m: PayoffMatrix) -> OracleReport:
    """Maximin oracle report with the classifier comparison filled in."""
    rep = maximin_oracle(m)
    eq = classify(m)
    agrees = (
        rep.value == eq.value and rep.row_opt_set == eq.row_set and rep.col_opt_set == eq.col_set
    )
    return replace(rep, agrees_with_classifier=agrees)


def grid_epsilon_nash(m: PayoffMatrix, resolution: int, eps=0) -> list[StrategyPair]:
    """All grid pairs ``(i/n, j/n)`` that are eps-equilibria.

    A pair qualifies when no pure deviation gains either player more than
    ``eps``.  Payoffs are scaled to integers (common denominator times
    ``n**2``) so the scan stays exact and fast.
    """
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    eps = to_rational(eps)
    if eps < 0:
        raise ValueError("eps must be >= 0")
    n = resolution
    scale = math.lcm(*(u.denominator for u in m.entries()))
    a, b, c, d = (int(u * scale) for u in m.entries())
    tol = eps * scale * n * n
    out = []
    for i in range(n + 1):
        k = n - i
        # column pure payoffs against row i/n, times scale * n
        c1, c2 = i * a + k * c, i * b + k * d
        for j in range(n + 1):
            h = n - j
            v = j * c1 + h * c2
            r1, r2 = j * a + h * b, j * c + h * d
            if max(r1, r2) * n - v <= tol and v - min(c1, c2) * n <= tol:
                out.append(StrategyPair.of(Fraction(i, n), Fraction(j, n)))
    return out


def support_enumeration(m: PayoffMatrix) -> list[StrategyPair]:
    """Pure profiles plus the fully mixed indifference solution, NE only."""
    candidates = [StrategyPair.of(p, q) for p in (ONE, ZERO) for q in (ONE, ZERO)]
    d = m.u11 - m.u12 - m.u21 + m.u22
    if d != 0:
        # row mix equalizing the two columns, column mix equalizing the two rows
        p = (m.u22 - m.u21) / d
        q = (m.u22 - m.u12) / d
        if ZERO < p < ONE and ZERO < q < ONE:
            candidates.append(StrategyPair.of(p, q))
    return [s for s in candidates if is_nash(m, s)]


def grid_hits_inside(m: PayoffMatrix, resolutions: Iterable[int]) -> bool:
    eq = classify(m)
    return all(
        s.as_tuple() in eq for n in resolutions for s in grid_epsilon_nash(m, n, 0)
    )


def verify(m: PayoffMatrix, grid: Optional[int] = None) -> dict[str, bool]:
    """Run every oracle against the classifier; each entry is a pass flag."""
    eq = classify(m)
    checks = {"maximin": bool(cross_check(m).agrees_with_classifier)}
    checks["support_enumeration"] = all(s.as_tuple() in eq for s in support_enumeration(m))
    if grid is not None:
        checks["grid"] = grid_hits_inside(m, [grid])
    return checks

