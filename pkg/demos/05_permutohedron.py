"""The permutohedral side: polytopes, chart sections, and the identities
behind the label-forgetting map.

The permutohedron decomposes as a Minkowski sum in two ways: into the
hypersimplex translates carrying the degree-j sections, and into the root
segments carrying the pairwise cross-ratio data.  The chart sections are
polynomials with unit coefficients whose telescoping alternating sum places
every marked section on the subscheme hyperplane.
"""

from fractions import Fraction

from toricchains import (
    GF,
    SigmaPoint,
    chart_section,
    delta_j,
    permutohedron,
    sigma_forget,
    verify_a_data_cocycle,
    verify_cd_disjoint,
    verify_divisor_relation,
    verify_minkowski,
    verify_section_hyperplane,
)
from toricchains.root_fans import sigma_subsets

print("permutohedron vertex counts (n!):")
for n in (2, 3, 4, 5):
    print(f"  n={n}: {permutohedron(n).num_vertices}")

print("\nhypersimplex translates for n=4 (binomial counts):")
for j in (1, 2, 3):
    print(f"  j={j}: {delta_j(4, j).num_vertices} vertices")

print("\nboth Minkowski decompositions, exact vertex equality:")
for n in (2, 3, 4, 5):
    print(f"  n={n}: {verify_minkowski(n)}")

print("\nchart sections in the coordinates t_i = x_(i+1)/x_i:")
for j in (1, 2):
    print(f"  n=3, j={j}: {chart_section(3, (1, 2, 3), j).serialize()}")

print("\nsymbolic identities:")
print("  section/boundary divisors disjoint (n<=5):",
      all(verify_cd_disjoint(n) for n in range(2, 6)))
print("  divisor valuation relation (n<=6):     ",
      all(verify_divisor_relation(n) for n in range(2, 7)))
print("  telescoping hyperplane identity (n<=4):",
      all(verify_section_hyperplane(n) for n in range(2, 5)))
print("  three-term section cocycle (n<=5):     ",
      all(verify_a_data_cocycle(n) for n in range(3, 6)))

print("\npoint-level forgetting map for n=2: sections u, v push to the")
print("elementary symmetric pair (u+v, uv):")
sp = SigmaPoint.from_dict(
    2, GF(11), {frozenset({1}): 5, frozenset({2}): 7}
)
e = sigma_forget(sp)
print("  coefficients", e.c, "twists", e.b)

print("\nand for n=3 with all w_I = 1 the image is binomial:")
sp3 = SigmaPoint.from_dict(
    3, GF(11), {frozenset(s): 1 for s in sigma_subsets(3)}
)
print("  coefficients", sigma_forget(sp3).c)
