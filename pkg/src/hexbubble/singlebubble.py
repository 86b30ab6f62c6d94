"""Fixed-side isoperimetric hexagon.

Fix one polygon side of length L along a lattice direction and enclose
area V above it with the least D-perimeter.  Walking counterclockwise
from the fixed side, the free sides x1..x5 point at 60, 120, 180, 240,
300 degrees; polygon closure forces x5 = x1 + x2 - x4 and
x3 = L + x1 - x4, and the shoelace area is

    V = (sqrt(3)/4) * (2 (x1+x2)(x3+x4) - x1^2 - x4^2).

Two regimes split at 3*sqrt(3)*L^2 = 16 V.  Below it the optimum is a
six-sided cell with x2 = x3 = x4 and x1 = x5 = 2 x2 - L; above it x1 and
x5 vanish, leaving a trapezoid with top side s = sqrt((3L^2 - 4 sqrt(3)V)/3),
slanted sides L - s, and perimeter 3L - s.  The two closed forms agree on
the boundary, where x1 hits zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .hexnorm import SQRT3, LATTICE_DIRECTIONS, PlanePoint, PolyChain, make_chain

REGIME_SIX = "six-sided"
REGIME_FOUR = "four-sided"

# sides shorter than this give effectively unbounded perimeters
MIN_SIDE = 1e-8


def _check_inputs(L: float, V: float) -> None:
    if not (math.isfinite(L) and math.isfinite(V)):
        raise ValueError("L and V must be finite")
    if V <= 0.0:
        raise ValueError("volume must be positive")
    if L < MIN_SIDE:
        raise ValueError(f"fixed side must be >= {MIN_SIDE}")


def x4_from_volume(x1: float, x2: float, L: float, V: float) -> float:
    """Invert the shoelace area for x4 >= 0 given x1, x2, L, V.

    Raises ValueError when the radicand is negative, i.e. the requested
    volume exceeds what any x4 can enclose with these sides.
    """
    rad = x1 * x1 + 2.0 * x1 * x2 + 2.0 * L * (x1 + x2) - 4.0 * V / SQRT3
    if rad < 0.0:
        raise ValueError("infeasible volume for the given sides")
    return math.sqrt(rad)


@dataclass(frozen=True)
class SingleBubbleSolution:
    L: float
    V: float
    regime: str
    sides: tuple[float, float, float, float, float]  # x1..x5
    perimeter: float

    def polygon(self) -> PolyChain:
        """Closed boundary, fixed side from (0, 0) to (L, 0), cell above."""
        return fixed_side_polygon(self.L, self.sides)


def fixed_side_polygon(L: float, sides: tuple[float, ...]) -> PolyChain:
    """Polygon from the fixed side plus the five free sides.

    Zero-length sides collapse, so boundary-regime solutions come out as
    quadrilaterals without special-casing.
    """
    pts = [PlanePoint(0.0, 0.0), PlanePoint(L, 0.0)]
    for k, s in enumerate(sides, start=1):
        d = LATTICE_DIRECTIONS[k % 6]
        last = pts[-1]
        pts.append(PlanePoint(last.x + s * d.x, last.y + s * d.y))
    return make_chain(pts, closed=True)


def is_six_sided(L: float, V: float) -> bool:
    """Regime test: six-sided iff 3*sqrt(3)*L^2 < 16*V."""
    return 3.0 * SQRT3 * L * L < 16.0 * V


def solve_fixed_side(L: float, V: float) -> SingleBubbleSolution:
    """Minimal-perimeter cell over the fixed side L enclosing volume V."""
    _check_inputs(L, V)
    if is_six_sided(L, V):
        t = math.sqrt((3.0 * L * L + 4.0 * SQRT3 * V) / 21.0)
        x1 = 2.0 * t - L
        if x1 < 0.0:
            # only roundoff at the regime boundary can put x1 below zero
            if x1 < -1e-12 * max(1.0, L):
                raise ValueError("inconsistent six-sided solution")
            x1 = 0.0
        sides = (x1, t, t, t, x1)
        return SingleBubbleSolution(L, V, REGIME_SIX, sides, 7.0 * t - L)
    rad = (3.0 * L * L - 4.0 * SQRT3 * V) / 3.0
    if rad < 0.0:
        raise ValueError("infeasible volume in the four-sided regime")
    s = math.sqrt(rad)
    if s > L:
        raise ValueError("inconsistent four-sided solution")  # cannot happen for V > 0
    sides = (0.0, L - s, s, L - s, 0.0)
    return SingleBubbleSolution(L, V, REGIME_FOUR, sides, 3.0 * L - s)


def perimeter_P1(L: float, V: float) -> float:
    """Six-sided closed-form perimeter 7*sqrt((3L^2 + 4 sqrt(3)V)/21) - L."""
    _check_inputs(L, V)
    return 7.0 * math.sqrt((3.0 * L * L + 4.0 * SQRT3 * V) / 21.0) - L


def perimeter_P2(L: float, V: float) -> float:
    """Four-sided (trapezoid) closed-form perimeter 3L - sqrt((3L^2 - 4 sqrt(3)V)/3).

    Defined for 3L^2 >= 4*sqrt(3)*V, i.e. L >= 2*sqrt(V)/3^(1/4); below
    that no trapezoid over the side encloses V and a ValueError is raised.
    """
    _check_inputs(L, V)
    rad = (3.0 * L * L - 4.0 * SQRT3 * V) / 3.0
    if rad < 0.0:
        raise ValueError("volume too large for a four-sided cell on this side")
    return 3.0 * L - math.sqrt(rad)


def optimal_perimeter(L: float, V: float) -> float:
    """Perimeter of the active regime (P1 below the threshold, else P2)."""
    _check_inputs(L, V)
    if is_six_sided(L, V):
        return perimeter_P1(L, V)
    return perimeter_P2(L, V)


def isoperimetric_optimum(V: float) -> tuple[float, float]:
    """(L0, perimeter) of the unconstrained optimum: the regular hexagon.

    L0 = sqrt(2V)/3^(3/4) makes all six sides equal and the perimeter is
    2*sqrt(2V)*3^(1/4).
    """
    if not math.isfinite(V) or V <= 0.0:
        raise ValueError("volume must be positive")
    root = math.sqrt(2.0 * V)
    return root / 3.0 ** 0.75, 2.0 * root * 3.0 ** 0.25
