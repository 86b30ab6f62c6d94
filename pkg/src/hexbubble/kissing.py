"""Two cells glued along part of one lattice-direction side.

With fixed sides L1 (volume 1, above the axis) and L2 (volume alpha,
mirrored below), the pair's perimeter is

    Popt(L1, 1) + Popt(L2, alpha) - min(L1, L2),

Popt being the active single-cell regime.  Stationarity in (L1, L2)
yields eight sign/regime combinations of candidate side pairs; on the
equal-side diagonal L1 = L2 = L the objective splits into the four
branches P3..P6 by regime, of which P3 (both six-sided) dominates
wherever the others are defined.  The global optimum is the admissible
unequal candidate below alpha = 1/8 and the P3 minimizer at or above it;
the two branches agree at the handoff.

The P3 minimizer is also a positive root of an even degree-8 polynomial
obtained by clearing the radicals in dP3/dL = 0; both routes are
implemented and cross-checked in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .hexnorm import SQRT3, PlanePoint, PolyChain
from .singlebubble import (
    MIN_SIDE,
    REGIME_FOUR,
    REGIME_SIX,
    is_six_sided,
    optimal_perimeter,
    solve_fixed_side,
)

# relative slack when holding a candidate to its claimed regime; stationary
# side pairs may sit exactly on the regime boundary
REGIME_TOL = 1e-12

# alpha at which the unequal candidate collapses onto the diagonal
HANDOFF_ALPHA = 0.125
HANDOFF_TOL = 1e-12

BRANCH_UNEQUAL = "unequal-candidate"
BRANCH_EQUAL = "equal-p3"


def _check_alpha(alpha: float) -> None:
    if not math.isfinite(alpha) or not (0.0 < alpha <= 1.0):
        raise ValueError("volume ratio must lie in (0, 1]")


class KissingRegime(NamedTuple):
    """Six-sided flags for the two glued cells."""

    a: bool
    b: bool


def kissing_regime(L1: float, L2: float, alpha: float) -> KissingRegime:
    _check_alpha(alpha)
    return KissingRegime(is_six_sided(L1, 1.0), is_six_sided(L2, alpha))


def kissing_perimeter(L1: float, L2: float, alpha: float) -> float:
    """Glued-pair perimeter with each cell in its active regime."""
    _check_alpha(alpha)
    return (
        optimal_perimeter(L1, 1.0)
        + optimal_perimeter(L2, alpha)
        - min(L1, L2)
    )


# --- unequal-side stationary candidates -----------------------------------

# Stationarity of Popt(L, V) - indicator*L in L.  For the six-sided form
# d/dL [7 sqrt((3L^2+4 sqrt(3)V)/21) - (1+i) L] = 0 gives
# L^2 = 4 sqrt(3) V (1+i)^2 / (21 - 3 (1+i)^2); for the trapezoid form
# d/dL [3L - sqrt((3L^2-4 sqrt(3)V)/3) - i L] = 0 gives
# L^2 = 4 sqrt(3) V (3-i)^2 / (3 ((3-i)^2 - 1)).  The indicator marks the
# cell whose side is the shorter (fully shared) one.

_ROWS = (
    ((REGIME_SIX, 1), (REGIME_SIX, 0)),
    ((REGIME_SIX, 0), (REGIME_SIX, 1)),
    ((REGIME_FOUR, 1), (REGIME_FOUR, 0)),
    ((REGIME_FOUR, 0), (REGIME_FOUR, 1)),
    ((REGIME_SIX, 1), (REGIME_FOUR, 0)),
    ((REGIME_SIX, 0), (REGIME_FOUR, 1)),
    ((REGIME_FOUR, 1), (REGIME_SIX, 0)),
    ((REGIME_FOUR, 0), (REGIME_SIX, 1)),
)


class CandidateRow(NamedTuple):
    L1: float
    L2: float
    admissible: bool


def _stationary_side(form: str, indicator: int, V: float) -> float:
    if form == REGIME_SIX:
        c = float((1 + indicator) ** 2)
        return math.sqrt(4.0 * SQRT3 * V * c / (21.0 - 3.0 * c))
    c = float((3 - indicator) ** 2)
    return math.sqrt(4.0 * SQRT3 * V * c / (3.0 * (c - 1.0)))


def _regime_consistent(form: str, L: float, V: float) -> bool:
    t = 3.0 * SQRT3 * L * L
    if form == REGIME_SIX:
        return t <= 16.0 * V * (1.0 + REGIME_TOL)
    return t >= 16.0 * V * (1.0 - REGIME_TOL)


def unequal_candidates(alpha: float) -> list[CandidateRow]:
    """The eight stationary (L1, L2) pairs with their admissibility.

    A row is admissible when the cell carrying the indicator has the
    strictly shorter side (equivalently: alpha lies in the row's validity
    range, which is that same inequality in closed form) and both sides
    sit in their claimed regimes.  On (0, 1] only the rows pairing a
    plain six-sided volume-1 cell with an indicator-carrying volume-alpha
    cell survive, and only below alpha = 1/8.
    """
    _check_alpha(alpha)
    rows: list[CandidateRow] = []
    for (form1, i1), (form2, i2) in _ROWS:
        L1 = _stationary_side(form1, i1, 1.0)
        L2 = _stationary_side(form2, i2, alpha)
        ordered = L1 < L2 if i1 == 1 else L2 < L1
        ok = (
            ordered
            and _regime_consistent(form1, L1, 1.0)
            and _regime_consistent(form2, L2, alpha)
        )
        rows.append(CandidateRow(L1, L2, ok))
    return rows


def small_alpha_closed_form(alpha: float) -> float:
    """Perimeter of the admissible unequal candidate: 2*3^(1/4)(sqrt(2)+sqrt(alpha))."""
    _check_alpha(alpha)
    return 2.0 * 3.0 ** 0.25 * (math.sqrt(2.0) + math.sqrt(alpha))


# --- the equal-side family --------------------------------------------------


def equal_perimeters(
    L: float, alpha: float
) -> tuple[float, Optional[float], Optional[float], Optional[float]]:
    """(P3, P4, P5, P6) on the diagonal L1 = L2 = L; None when infeasible.

    P3 glues two six-sided cells, P4/P5 mix regimes, P6 glues two
    trapezoids; each value is present exactly when its radicands are
    nonnegative.  P3 always exists.
    """
    _check_alpha(alpha)
    if not math.isfinite(L) or L < MIN_SIDE:
        raise ValueError(f"side must be >= {MIN_SIDE}")
    u1 = math.sqrt((3.0 * L * L + 4.0 * SQRT3) / 21.0)
    u2 = math.sqrt((3.0 * L * L + 4.0 * SQRT3 * alpha) / 21.0)
    r1 = (3.0 * L * L - 4.0 * SQRT3) / 3.0
    ra = (3.0 * L * L - 4.0 * SQRT3 * alpha) / 3.0
    p3 = 7.0 * u1 + 7.0 * u2 - 3.0 * L
    p4 = 7.0 * u1 + L - math.sqrt(ra) if ra >= 0.0 else None
    p5 = 7.0 * u2 + L - math.sqrt(r1) if r1 >= 0.0 else None
    p6 = 5.0 * L - math.sqrt(r1) - math.sqrt(ra) if r1 >= 0.0 and ra >= 0.0 else None
    return p3, p4, p5, p6


def _p3_derivative(L: float, alpha: float) -> float:
    u1 = math.sqrt((3.0 * L * L + 4.0 * SQRT3) / 21.0)
    u2 = math.sqrt((3.0 * L * L + 4.0 * SQRT3 * alpha) / 21.0)
    return L / u1 + L / u2 - 3.0


def p3_minimizer(alpha: float) -> tuple[float, float]:
    """(L*, P3(L*)): the unique stationary point of the double-six branch.

    dP3/dL = L/u1 + L/u2 - 3 rises strictly from -3 to 2*sqrt(7) - 3 > 0,
    so a sign-change bisection on [1e-8, 10] is exact to its tolerance.
    """
    _check_alpha(alpha)
    lo, hi = 1e-8, 10.0
    flo = _p3_derivative(lo, alpha)
    fhi = _p3_derivative(hi, alpha)
    if not (flo < 0.0 < fhi):
        raise ValueError("derivative bracket failed")  # cannot happen on (0, 1]
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        if _p3_derivative(mid, alpha) < 0.0:
            lo = mid
        else:
            hi = mid
    L = 0.5 * (lo + hi)
    return L, equal_perimeters(L, alpha)[0]


# --- degree-8 polynomial route ----------------------------------------------


@dataclass(frozen=True)
class Poly8:
    """Dense degree-8 polynomial, coefficients ascending (c0..c8), c8 != 0."""

    coefficients: tuple[float, ...]

    def __post_init__(self) -> None:
        cs = tuple(float(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", cs)
        if len(cs) != 9:
            raise ValueError("need exactly 9 coefficients")
        if cs[8] == 0.0 or not all(math.isfinite(c) for c in cs):
            raise ValueError("leading coefficient must be finite and nonzero")

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def build_degree8(alpha: float) -> Poly8:
    """Radical-free stationarity polynomial for the P3 branch.

    With Q = 9L^4 + 12 sqrt(3)(1+alpha) L^2 + 48 alpha and
    R = 6L^4 + 4 sqrt(3)(1+alpha) L^2, clearing radicals in dP3/dL = 0
    gives p = 4 L^4 Q / 441 - (Q/49 - R/21)^2, an even polynomial whose
    positive real root is the P3 minimizer.
    """
    _check_alpha(alpha)
    s = SQRT3 * (1.0 + alpha)
    q = np.array([48.0 * alpha, 0.0, 12.0 * s, 0.0, 9.0])
    r = np.array([0.0, 0.0, 4.0 * s, 0.0, 6.0])
    term1 = (4.0 / 441.0) * np.concatenate([np.zeros(4), q])
    inner = q / 49.0 - r / 21.0
    term2 = np.convolve(inner, inner)
    return Poly8(tuple(term1 - term2))


def poly_real_roots(p: Poly8) -> list[float]:
    """Sorted real roots, located by dense sign scan plus bisection.

    The scan covers the Cauchy bound 1 + max|c_i|/|c_8|; each sign change
    is bisected to ~1e-13 relative accuracy.  (Roots of even multiplicity
    would not change sign; the stationarity polynomial has none.)
    """
    cs = np.array(p.coefficients)
    bound = 1.0 + float(np.max(np.abs(cs[:-1]))) / abs(float(cs[-1]))
    xs = np.linspace(-bound, bound, 4001)
    vals = np.polynomial.polynomial.polyval(xs, cs)

    roots: list[float] = []

    def bisect(a: float, b: float, fa: float) -> float:
        for _ in range(200):
            m = 0.5 * (a + b)
            if b - a <= 1e-13 * max(1.0, abs(m)):
                return m
            fm = p(m)
            if fm == 0.0:
                return m
            if (fm < 0.0) == (fa < 0.0):
                a, fa = m, fm
            else:
                b = m
        return 0.5 * (a + b)

    for i in range(len(xs) - 1):
        va, vb = float(vals[i]), float(vals[i + 1])
        if va == 0.0:
            roots.append(float(xs[i]))
        elif (va < 0.0) != (vb < 0.0):
            roots.append(bisect(float(xs[i]), float(xs[i + 1]), va))
    if float(vals[-1]) == 0.0:
        roots.append(float(xs[-1]))

    deduped: list[float] = []
    for x in sorted(roots):
        if not deduped or x - deduped[-1] > 1e-9 * max(1.0, abs(x)):
            deduped.append(x)
    return deduped


# --- the full kissing optimum ------------------------------------------------


@dataclass(frozen=True)
class KissingSolution:
    alpha: float
    L1: float
    L2: float
    perimeter: float
    branch: str  # BRANCH_UNEQUAL or BRANCH_EQUAL
    row: Optional[int]  # 1-based candidate row for the unequal branch
    sides_a: tuple[float, ...]
    sides_b: tuple[float, ...]
    geometry_a: PolyChain
    geometry_b: PolyChain


def kissing_geometry(
    L1: float, L2: float, alpha: float
) -> tuple[PolyChain, PolyChain, tuple[float, ...], tuple[float, ...]]:
    """Welded pair: cell A above its base, cell B mirrored below, bases
    centered on each other.  Returns (chain_a, chain_b, sides_a, sides_b)
    with A's leftmost-lowest vertex at the origin."""
    sol_a = solve_fixed_side(L1, 1.0)
    sol_b = solve_fixed_side(L2, alpha)
    a = sol_a.polygon()
    cx = (L1 - L2) / 2.0
    mirrored = [PlanePoint(cx + v.x, -v.y) for v in sol_b.polygon().vertices]
    b = PolyChain(tuple(reversed(mirrored)), closed=True)
    anchor = min(a.vertices, key=lambda v: (v.x, v.y))
    return (
        a.translated(-anchor.x, -anchor.y),
        b.translated(-anchor.x, -anchor.y),
        sol_a.sides,
        sol_b.sides,
    )


def kissing_minimum(alpha: float) -> KissingSolution:
    """Global minimum over the glued-pair family.

    Below the handoff ratio 1/8 the admissible unequal candidate (row 2)
    wins; at and above it the diagonal P3 minimizer does.  The two agree
    at the handoff, where the candidate collapses onto the diagonal.
    """
    _check_alpha(alpha)
    if alpha < HANDOFF_ALPHA * (1.0 - HANDOFF_TOL):
        L1 = _stationary_side(REGIME_SIX, 0, 1.0)
        L2 = _stationary_side(REGIME_SIX, 1, alpha)
        perimeter = kissing_perimeter(L1, L2, alpha)
        branch, row = BRANCH_UNEQUAL, 2
    else:
        L, perimeter = p3_minimizer(alpha)
        L1 = L2 = L
        branch, row = BRANCH_EQUAL, None
    geo_a, geo_b, sides_a, sides_b = kissing_geometry(L1, L2, alpha)
    return KissingSolution(
        alpha, L1, L2, perimeter, branch, row, sides_a, sides_b, geo_a, geo_b
    )
