"""Field-valued points, the torus action, and stabilizer group schemes.

A point of the rank-(n-1) type-A orbifold is a tuple (a_1..a_{n-1},
b_1..b_{n-1}) with no index where both entries vanish, up to rescaling by
kappa in the torus via a_i -> kappa_i a_i and b_i -> kappa_i^2 /
(kappa_{i-1} kappa_{i+1}) b_i.
"""

from toricchains import (
    FanFamily,
    GF,
    GroupElement,
    act,
    build_upsilon,
    canonical_form,
    count_coarse_points,
    enumerate_orbits,
    make_point,
    orbit_equal,
    stabilizer,
)

F7 = GF(7)
fan = build_upsilon(FanFamily("A", 1))

p = make_point(fan, F7, [1, 1])
q = act(GroupElement((3,)), p)
print("acting by kappa = 3 on (1, 1) over F_7:", q.coords)
print("same orbit:", orbit_equal(p, q))
print("canonical representative:", canonical_form(p).coords)

print("\nThe weighted projective line P(1,2) has q+1 coarse points:")
for qq in (3, 5, 7, 11):
    print(f"  q={qq:2d}: {count_coarse_points(fan, qq)}")

print("\nStabilizers along the boundary of the rank-2 type-A orbifold")
print("(the three deep strata carry mu_2, mu_3, mu_2):")
fan2 = build_upsilon(FanFamily("A", 2))
for coords in ((0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1), (1, 1, 1, 1)):
    desc = stabilizer(make_point(fan2, F7, coords))
    print(f"  {coords}: free_rank={desc.free_rank} torsion={list(desc.torsion)}")

print("\nAll orbits over F_3 (canonical representative, stabilizer order):")
for pt, order in enumerate_orbits(fan, 3):
    print(f"  {pt.coords}  |stab| = {order}")
print("note the a=0 stratum splits into two orbits over F_3: the mu_2")
print("stabilizer contributes a nontrivial square-class obstruction")
