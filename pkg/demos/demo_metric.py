"""Tour of the hexagonal norm: distances, geodesics, circumscribing hexagons.

Run: python3 demos/demo_metric.py
"""

import math

from hexbubble.hexnorm import (
    LATTICE_DIRECTIONS,
    circumscribing_hexagon,
    geodesic_path,
    hex_norm,
    make_chain,
    polygon_area,
    polyline_length,
    sextant,
)

SQRT3 = math.sqrt(3.0)


def main() -> None:
    print("unit-ball vertices (all at distance 1):")
    for u in LATTICE_DIRECTIONS:
        print(f"  ({u[0]:+.4f}, {u[1]:+.4f})  norm = {hex_norm(u):.12f}")

    print()
    print("the norm is NOT the Euclidean one off the lattice directions:")
    for p in ((1.0, 0.0), (0.0, 1.0), (1.0, 1.0)):
        euclid = math.hypot(*p)
        print(f"  p = {p}:  hex = {hex_norm(p):.6f}   euclid = {euclid:.6f}")

    print()
    print("sextant index (sectors of 60 degrees, ties to the smaller index):")
    for p in ((1.0, 0.1), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)):
        print(f"  sextant{p} = {sextant(p)}")

    print()
    q = (2.0, SQRT3)
    path = geodesic_path((0.0, 0.0), q)
    print(f"geodesic from the origin to {q}:")
    for v in path.vertices:
        print(f"  ({v.x:.6f}, {v.y:.6f})")
    print(f"  length = {polyline_length(path):.12f}")
    print(f"  norm   = {hex_norm(q):.12f}   (equal: straight lines are not needed)")

    print()
    square = make_chain([(0, 0), (1, 0), (1, 1), (0, 1)], closed=True)
    region = circumscribing_hexagon(square)
    print("smallest lattice-direction hexagon around the unit square:")
    for v in region.boundary().vertices:
        print(f"  ({v.x:+.6f}, {v.y:+.6f})")
    print(f"  hexagon perimeter = {polyline_length(region.boundary()):.6f}")
    print(f"  square  perimeter = {polyline_length(square):.6f}")
    print(f"  hexagon area      = {polygon_area(region.boundary()):.6f}")
    print("  circumscribing never increases perimeter and never loses area;")
    print("  that one-two punch is why optimal cells are hexagons here.")


if __name__ == "__main__":
    main()
