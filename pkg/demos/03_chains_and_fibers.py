"""Pointed chains from fan points, and the degree-n! forgetting map.

A point with all twists b_i nonzero describes an irreducible chain: a
single projective line carrying the degree-n subscheme cut out by one
polynomial.  Each vanishing twist breaks the chain into one more component.
Forgetting the labels of n marked points is n!-to-1 away from coinciding
points, and the rational fiber count drops exactly at repetitions.
"""

import math

from toricchains import (
    FanFamily,
    GF,
    build_upsilon,
    chain_from_point,
    extended_from_standard,
    fiber_profile,
    make_point,
    orbit_equal_extended,
    point_from_polynomial,
)
from toricchains.chains import poly_from_roots

F11 = GF(11)

fan = build_upsilon(FanFamily("A", 2))
p = make_point(fan, F11, [4, 1, 1, 1])
chain = chain_from_point(p)
print("point (4,1,1,1): degrees", chain.component_degrees,
      "polynomial", chain.component_polys[0])

broken = make_point(fan, F11, [4, 1, 0, 1])
print("point (4,1,0,1): degrees", chain_from_point(broken).component_degrees,
      "(the chain broke at b_1 = 0)")

print("\nPolynomial -> point -> chain round trip:")
roots = (1, 2, 3)
coeffs = poly_from_roots([F11.of(r) for r in roots], F11)
print("  roots", roots, "give ascending coefficients", coeffs)
e = point_from_polynomial(coeffs, F11)
print("  extended point:", e.c, "twists", e.b, "normalized:", e.is_normalized())
std = e.to_standard()
back = chain_from_point(std)
e2 = point_from_polynomial(list(back.component_polys[0]), F11)
print("  round trip stays in the orbit:",
      orbit_equal_extended(e2, extended_from_standard(std)))

print("\nFiber of the label-forgetting map over F_11:")
for rts in ((1, 2, 3), (2, 2, 8), (2, 5, 1)):
    coeffs = poly_from_roots([F11.of(r) for r in rts], F11)
    e = point_from_polynomial(coeffs, F11)
    prof = fiber_profile(e.to_standard())
    print(f"  divisor {rts}: {prof.rational_ordered_preimages} ordered"
          f" preimages (max {math.factorial(3)}), ramified={prof.is_ramified}")
