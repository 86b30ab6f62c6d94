"""One cell over a fixed base side: the two regimes and the free optimum.

Run: python3 demos/demo_single_bubble.py
"""

import math

from hexbubble.singlebubble import (
    isoperimetric_optimum,
    optimal_perimeter,
    solve_fixed_side,
)

SQRT3 = math.sqrt(3.0)


def main() -> None:
    V = 1.0
    boundary = math.sqrt(16.0 * V / (3.0 * SQRT3))
    print(f"volume {V}: the cell is six-sided while L < {boundary:.6f}")
    print()
    print(f"{'L':>6}  {'regime':<10}  {'perimeter':>12}  sides")
    for L in (0.3, 0.6, 0.9, 1.2, 1.5, boundary, 1.8, 2.1):
        sol = solve_fixed_side(L, V)
        sides = ", ".join(f"{s:.4f}" for s in sol.sides)
        print(f"{L:6.3f}  {sol.regime:<10}  {sol.perimeter:12.8f}  ({sides})")
    print()
    print("x1 shrinks to zero at the regime boundary; past it the hexagon")
    print("has lost two sides and the trapezoid formula takes over.")

    print()
    L0, P = isoperimetric_optimum(V)
    print(f"free optimum: L0 = {L0:.12f}, perimeter = {P:.12f}")
    print(f"2 sqrt(2) 3^(1/4) = {2.0 * math.sqrt(2.0) * 3.0 ** 0.25:.12f}")
    sol = solve_fixed_side(L0, V)
    print(f"sides at L0: {tuple(round(s, 10) for s in sol.sides)}  (regular hexagon)")

    print()
    print("perimeter as a function of the fixed side (volume 1):")
    for L in (0.4, 0.5, L0, 0.75, 0.9):
        marker = "  <- minimum" if abs(L - L0) < 1e-9 else ""
        print(f"  P({L:.4f}) = {optimal_perimeter(L, V):.10f}{marker}")


if __name__ == "__main__":
    main()
