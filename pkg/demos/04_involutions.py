"""Chains with involution: the type B and C variants.

A degree-2n subscheme invariant under y -> 1/y is encoded by a type-C
point; duplicating its coordinates palindromically lands in the type-A
orbifold of rank 2n-1.  The hyperoctahedral forgetting map has degree
2^n n!, realized by counting ordered tuples of inverse pairs.
"""

from toricchains import (
    FanFamily,
    GF,
    b_point_embed,
    build_upsilon,
    c_point_embed,
    involutive_fiber_profile,
    make_point,
    minus_embed,
    parity_component,
)
from toricchains.chains import involutive_polynomial, poly_from_roots

F11 = GF(11)
C2 = build_upsilon(FanFamily("C", 2))
B2 = build_upsilon(FanFamily("Bcan", 2))
Cm2 = build_upsilon(FanFamily("Cminus", 2))

p = make_point(C2, F11, [2, 3, 4, 5])
print("type-C point", p.coords, "-> palindromic type-A point",
      c_point_embed(p).coords)
pb = make_point(B2, F11, [2, 3, 4, 5])
print("type-B point", pb.coords, "->", b_point_embed(pb).coords)

print("\nInverse-pair fibers: roots {2,6} and {3,4} pair up under y -> 1/y")
coeffs = poly_from_roots([F11.of(r) for r in (2, 6, 3, 4)], F11)
print("  palindromic coefficients:", coeffs)
point = make_point(C2, F11, [coeffs[1], coeffs[2], 1, 1])
print("  normal form:", involutive_polynomial(point))
print("  ordered preimages:", involutive_fiber_profile(point), "= 2^2 * 2!")

bad = poly_from_roots([F11.of(r) for r in (1, 1, 3, 4)], F11)
pt_bad = make_point(C2, F11, [bad[1], bad[2], 1, 1])
print("  with a root at the fixed point 1:", involutive_fiber_profile(pt_bad))

print("\nParity of symmetric subschemes (even multiplicity at both fixed")
print("points means the even component):")
from toricchains import QQ

print("  y^2 + 3y + 1         ->", parity_component([1, 3, 1], QQ))
print("  (y^2 - 1)^2          ->", parity_component([1, 0, -2, 0, 1], QQ))
print("  (y^2 - 1)(y^2+3y+1)  ->", parity_component([-1, -3, 0, 3, 1], QQ))

print("\nThe odd component embeds into the even one on the a_0 = 0 stratum:")
pm = make_point(Cm2, F11, [5, 2])
print("  minus point", pm.coords, "->", minus_embed(pm).coords)
