#!/usr/bin/env python3
"""Charts, fans and dual cones for products of projective lines."""

from toricgate import (Cone, cone_contains, dual_cone, fan_to_text,
                       moment_polytope, polytope_to_text, product_p1_charts,
                       product_p1_fan)

print("charts of P1 x P1:")
for chart in product_p1_charts(2):
    print(f"  {chart.label()}")
print()

print("charts of (P1)^3:")
for chart in product_p1_charts(3):
    print(f"  {chart.label()}")
print()

fan = product_p1_fan(2)
print("fan of P1 x P1:")
print(fan_to_text(fan))

print("moment polytope (the unit square):")
print(polytope_to_text(moment_polytope(2)))

# Orthant cones are their own duals.
first = fan.maximal_cones[0]
print("first orthant generators:", first.generators)
print("its dual:               ", dual_cone(first).generators)
print()

# A skew cone in the plane and its dual, computed in exact arithmetic.
skew = Cone(2, ((1, 0), (1, 2)))
dual = dual_cone(skew)
print("skew cone generators:", skew.generators)
print("dual generators:     ", dual.generators)
print("bidual generators:   ", dual_cone(dual).generators)
print()

# Membership is decided without floating point, so boundary points are safe.
for point in ((1, 1), (0, 1), (2, -1), (-1, 0), (0, 0)):
    print(f"  {point} in skew cone: {cone_contains(skew, point)}")
