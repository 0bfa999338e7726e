"""Build the stacky fans attached to Cartan matrices and inspect them.

The rank-n fan of each family has 2n rays, given by the columns of the
block matrix (-C | I_n), and 2^n maximal cones: for every index i one
chooses either the rho_i ray (where the coefficient a_i vanishes) or the
tau_i ray (where the twist b_i vanishes, i.e. the chain breaks).
"""

from toricchains import (
    FanFamily,
    build_sigma_A,
    build_upsilon,
    canonical_stack,
    cartan_matrix,
    check_fan,
    dg_group,
    weight_matrix,
)

for tag in ("A", "B", "C"):
    print(f"Cartan matrix, type {tag}, rank 3:")
    for row in cartan_matrix(tag, 3).to_rows():
        print("   ", row)

print("\nRank-2 fans and their validation flags:")
for tag in ("A", "B", "Bcan", "C"):
    fan = build_upsilon(FanFamily(tag, 2))
    report = check_fan(fan)
    print(f"  {tag:5s} rays={fan.rays}  ok={report.all_ok}")

print("\nThe acting group is read off the transposed ray matrix:")
for tag, n in (("A", 3), ("C", 3), ("Cminus", 3)):
    desc = dg_group(build_upsilon(FanFamily(tag, n)))
    print(f"  {tag:7s} n={n}: free rank {desc.free_rank}, torsion {list(desc.torsion)}")
print("  (the minus variant picks up a mu_2 factor from its doubled ray)")

print("\nCharacter weights on the coordinates of the rank-2 type-A fan:")
for row in weight_matrix(build_upsilon(FanFamily("A", 2))).to_rows():
    print("   ", row)
print("  columns: a_1, a_2 carry unit characters; b_i the Cartan column")

print("\nCanonical stack: primitivize every ray.  For type B this halves")
print("the doubled last column and recovers the Bcan matrix:")
fan_b = build_upsilon(FanFamily("B", 2))
print("  B    rays:", fan_b.rays)
print("  can  rays:", canonical_stack(fan_b).rays)
print("  Bcan rays:", build_upsilon(FanFamily("Bcan", 2)).rays)

print("\nThe permutohedral fan: one ray per proper subset, one maximal cone")
print("per permutation (a complete flag of nested subsets):")
fan = build_sigma_A(3)
print(f"  n=3: {fan.num_rays} rays, {len(fan.max_cones)} maximal cones")
for label, ray in zip(fan.ray_labels, fan.rays):
    print(f"    {label:10s} {ray}")
