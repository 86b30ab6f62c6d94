"""The crossover: nested wins for small ratios, glued wins for large ones.

Run: python3 demos/demo_phase_transition.py
Writes alpha0_configurations.svg to the working directory.
"""

from pathlib import Path

from hexbubble.cli import render_svg
from hexbubble.solver import find_alpha0, solve, sweep


def main() -> None:
    print("sweep over the volume ratio (perimeter of the better case):")
    print(f"{'alpha':>7}  {'case':<9}  {'perimeter':>13}")
    for r in sweep(0.05, 1.0, 16):
        print(f"{r.alpha:7.4f}  {r.case:<9}  {r.perimeter:13.9f}")

    print()
    a0 = find_alpha0()
    print(f"crossover ratio: alpha0 = {a0:.10f}")
    r = solve(a0)
    print(f"at alpha0 the case is '{r.case}':")
    for entry in r.solutions:
        print(f"  {entry.case:<9} L1 = {entry.L1:.8f}  L2 = {entry.L2:.8f}  "
              f"joint = {entry.joint_length:.8f}")
    both = r.candidates
    print(f"  perimeters: embedded {both['embedded']:.12f} "
          f"vs kissing {both['kissing']:.12f}")

    out = Path("alpha0_configurations.svg")
    out.write_text(render_svg(r), encoding="utf-8")
    print(f"wrote {out.resolve()} (one panel per tied configuration)")


if __name__ == "__main__":
    main()
