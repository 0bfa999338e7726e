"""Permutohedral geometry and the section identities of the label-forgetting
map.

Lattice polytopes live in the root-lattice coordinates obtained by dropping
the last basis vector of Z^n (so a point sum_i a_i u_i with sum a_i = 0 is
stored as (a_1, ..., a_{n-1})).  Extreme-point reduction is exact: a cheap
pass certifies vertices as unique maximizers of generic chamber functionals,
and every remaining candidate is settled by a rational phase-1 simplex.

The symbolic checks expand the chart sections (sum_{|I|=j} x_I)/x_{sigma(1..j)}
in the chart coordinates t_i = x_{sigma(i+1)}/x_{sigma(i)} and verify the
divisor valuation identity, the disjointness of the section and boundary
divisors, the three-term cocycle of root-indexed sections, and the
telescoping hyperplane identity behind the degree-n! covering.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .chains import ExtendedPoint
from .fields import Element, Field, QQ
from .orbit_points import is_nondegenerate
from .root_fans import StackyFan, build_sigma_A, sigma_subsets
from .symbolic import MultiPoly, RationalExpr

_HULL_DIM_GUARD = 6


# ---------------------------------------------------------------------------
# Exact convex geometry
# ---------------------------------------------------------------------------


def _in_hull(v: Sequence[int], pts: Sequence[Sequence[int]]) -> bool:
    """Exact test v in conv(pts) by a phase-1 simplex over the rationals."""
    if not pts:
        return False
    d = len(v)
    m = len(pts)
    rows = d + 1
    A = [[Fraction(p[i]) for p in pts] for i in range(d)]
    A.append([Fraction(1)] * m)
    b = [Fraction(x) for x in v] + [Fraction(1)]
    for i in range(rows):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]
    ncols = m + rows
    tableau = [
        A[i] + [Fraction(1 if j == i else 0) for j in range(rows)] + [b[i]]
        for i in range(rows)
    ]
    basis = list(range(m, m + rows))
    while True:
        w = sum(tableau[i][ncols] for i in range(rows) if basis[i] >= m)
        if w == 0:
            return True
        # Reduced costs for minimizing the sum of artificial variables.
        # Artificial columns never re-enter (standard phase-1), which keeps
        # Bland's anti-cycling guarantee intact.
        cost = [Fraction(0)] * m
        for i in range(rows):
            if basis[i] >= m:
                for j in range(m):
                    cost[j] += tableau[i][j]
        entering = None
        for j in range(m):
            if j in basis:
                continue
            if cost[j] > 0:
                entering = j  # Bland: smallest index
                break
        if entering is None:
            return False
        pivot_row = None
        best = None
        for i in range(rows):
            if tableau[i][entering] > 0:
                ratio = tableau[i][ncols] / tableau[i][entering]
                key = (ratio, basis[i])
                if best is None or key < best:
                    best = key
                    pivot_row = i
        if pivot_row is None:
            # Unbounded phase-1 objective cannot happen; defensive guard.
            raise AssertionError("phase-1 simplex unbounded")
        piv = tableau[pivot_row][entering]
        tableau[pivot_row] = [x / piv for x in tableau[pivot_row]]
        for i in range(rows):
            if i != pivot_row and tableau[i][entering] != 0:
                f = tableau[i][entering]
                tableau[i] = [
                    x - f * y for x, y in zip(tableau[i], tableau[pivot_row])
                ]
        basis[pivot_row] = entering


def _chamber_functionals(dim: int) -> List[Tuple[int, ...]]:
    """Generic integer functionals: permuted (n, ..., 1) weights pushed to the
    root coordinates, plus all 0/1 cuts and the coordinate directions."""
    n = dim + 1
    out = []
    seen = set()

    def push(w):
        f = tuple(w[i] - w[n - 1] for i in range(dim))
        if f not in seen and any(f):
            seen.add(f)
            out.append(f)

    for perm in itertools.permutations(range(n, 0, -1)):
        push(perm)
    for mask in range(1, 2**n - 1):
        push(tuple(1 if (mask >> i) & 1 else 0 for i in range(n)))
    for i in range(dim):
        for sign in (1, -1):
            f = tuple(sign if k == i else 0 for k in range(dim))
            if f not in seen:
                seen.add(f)
                out.append(f)
    return out


def extreme_points(dim: int, points: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """The extreme points of a finite integer point set, exactly.

    Unique maximizers of the chamber functionals are certified extreme
    without an LP; all other candidates are settled by exact hull membership.
    """
    if dim > _HULL_DIM_GUARD:
        raise ValueError("convex hull guard: ambient dimension too large")
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if len(pts) <= 2:
        return list(pts)
    certified = set()
    for functional in _chamber_functionals(dim):
        best_val = None
        best_pt = None
        unique = False
        for p in pts:
            val = sum(f * x for f, x in zip(functional, p))
            if best_val is None or val > best_val:
                best_val, best_pt, unique = val, p, True
            elif val == best_val:
                unique = False
        if unique:
            certified.add(best_pt)
    point_set = set(pts)
    vertices = set(certified)
    for p in pts:
        if p in vertices:
            continue
        # Midpoint prefilter: p = (q + r)/2 with q, r in the set is interior.
        double = tuple(2 * x for x in p)
        if any(
            q != p and tuple(d - x for d, x in zip(double, q)) in point_set
            for q in pts
        ):
            continue
        if vertices and _in_hull(p, sorted(vertices)):
            continue
        if not _in_hull(p, [q for q in pts if q != p]):
            vertices.add(p)
    return sorted(vertices)


@dataclass(frozen=True)
class LatticePolytope:
    """Convex lattice polytope stored by its sorted extreme points."""

    ambient_dim: int
    vertices: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        for v in self.vertices:
            if len(v) != self.ambient_dim:
                raise ValueError("vertex dimension mismatch")

    @staticmethod
    def from_points(dim: int, points: Sequence[Sequence[int]]) -> "LatticePolytope":
        return LatticePolytope(dim, tuple(extreme_points(dim, points)))

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def translate(self, vector: Sequence[int]) -> "LatticePolytope":
        return LatticePolytope(
            self.ambient_dim,
            tuple(
                sorted(tuple(x + t for x, t in zip(v, vector)) for v in self.vertices)
            ),
        )

    def to_dict(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "vertices": [list(v) for v in self.vertices]}


def _root_coords(n: int, coeffs: Dict[int, int]) -> Tuple[int, ...]:
    """Express sum_i coeffs[i] * u_i (with coefficient sum zero) in the basis
    u_1 - u_n, ..., u_{n-1} - u_n."""
    assert sum(coeffs.values()) == 0
    return tuple(coeffs.get(i, 0) for i in range(1, n))


def permutohedron(n: int) -> LatticePolytope:
    """Convex hull of the orbit of (n-1, n-2, ..., 0) weights, translated so
    the identity-ordering vertex is the origin."""
    if n < 2:
        raise ValueError("n >= 2 required")
    base = {i + 1: -(n - 1 - i) for i in range(n)}  # identity ordering offset
    points = []
    for sigma in itertools.permutations(range(1, n + 1)):
        coeffs = dict(base)
        for k in range(n):
            coeffs[sigma[k]] = coeffs.get(sigma[k], 0) + (n - 1 - k)
        coeffs = {i: c for i, c in coeffs.items()}
        points.append(_root_coords(n, coeffs))
    return LatticePolytope.from_points(n - 1, points)


def delta_j(n: int, j: int) -> LatticePolytope:
    """Hypersimplex translate: hull of sum_{i in J} u_i - (u_1 + ... + u_j)
    over all j-element subsets J."""
    if not 1 <= j <= n - 1:
        raise ValueError("need 1 <= j <= n-1")
    points = []
    for J in itertools.combinations(range(1, n + 1), j):
        coeffs: Dict[int, int] = {}
        for i in J:
            coeffs[i] = coeffs.get(i, 0) + 1
        for i in range(1, j + 1):
            coeffs[i] = coeffs.get(i, 0) - 1
        points.append(_root_coords(n, coeffs))
    return LatticePolytope.from_points(n - 1, points)


def root_segment(n: int, i: int, j: int) -> LatticePolytope:
    """The segment from the origin to the root u_i - u_j."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("need distinct indices in range")
    coeffs = {i: 1, j: -1}
    return LatticePolytope.from_points(n - 1, [(0,) * (n - 1), _root_coords(n, coeffs)])


def minkowski_sum(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    if P.ambient_dim != Q.ambient_dim:
        raise ValueError("ambient dimensions differ")
    sums = [
        tuple(a + b for a, b in zip(p, q)) for p in P.vertices for q in Q.vertices
    ]
    return LatticePolytope.from_points(P.ambient_dim, sums)


def minkowski_sum_all(polys: Sequence[LatticePolytope]) -> LatticePolytope:
    total = polys[0]
    for p in polys[1:]:
        total = minkowski_sum(total, p)
    return total


def verify_minkowski(n: int) -> bool:
    """Both decompositions of the permutohedron, by exact vertex equality:
    as the sum of the hypersimplex translates, and as the sum of the root
    segments l_{i_j i_k} for k < j under the identity ordering."""
    perm = permutohedron(n)
    hyper = minkowski_sum_all([delta_j(n, j) for j in range(1, n)])
    if hyper.vertices != perm.vertices:
        return False
    segments = [
        root_segment(n, j, k) for j in range(1, n + 1) for k in range(1, j)
    ]
    return minkowski_sum_all(segments).vertices == perm.vertices


# ---------------------------------------------------------------------------
# Product-of-projective-spaces relations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SectionRelation:
    """A monomial identity prod x_{J_i} = prod x_{J'_i} between sections."""

    lhs: Tuple[FrozenSet[int], ...]
    rhs: Tuple[FrozenSet[int], ...]


def _chi_sum(subsets: Sequence[FrozenSet[int]], n: int) -> Tuple[int, ...]:
    return tuple(sum(1 for s in subsets if i in s) for i in range(1, n + 1))


def relations_generator(n: int, l_max: int) -> List[SectionRelation]:
    """All relations of length at most l_max: multisets of proper nonempty
    subsets, sizewise matched, with equal characteristic-function sums and
    distinct sides.  Each emitted relation is a monomial identity."""
    if n < 2 or l_max < 2:
        raise ValueError("need n >= 2 and l_max >= 2")
    subsets = [frozenset(s) for s in sigma_subsets(n)]
    key = lambda s: (len(s), tuple(sorted(s)))
    out = []
    seen = set()
    for l in range(2, l_max + 1):
        for lhs in itertools.combinations_with_replacement(sorted(subsets, key=key), l):
            sizes = tuple(len(s) for s in lhs)
            chi = _chi_sum(lhs, n)
            for rhs in itertools.combinations_with_replacement(
                sorted(subsets, key=key), l
            ):
                if tuple(len(s) for s in rhs) != sizes:
                    continue
                if rhs == lhs:
                    continue
                if _chi_sum(rhs, n) != chi:
                    continue
                pair = tuple(sorted((tuple(sorted(map(key, lhs))), tuple(sorted(map(key, rhs))))))
                if pair in seen:
                    continue
                seen.add(pair)
                out.append(SectionRelation(tuple(lhs), tuple(rhs)))
    return out


def relation_holds(rel: SectionRelation, n: int) -> bool:
    """Substitute x_J = prod_{i in J} x_i and compare monomials."""
    f = QQ
    lhs = MultiPoly.const(f, n, 1)
    for s in rel.lhs:
        lhs = lhs * MultiPoly.monomial(f, tuple(1 if i + 1 in s else 0 for i in range(n)))
    rhs = MultiPoly.const(f, n, 1)
    for s in rel.rhs:
        rhs = rhs * MultiPoly.monomial(f, tuple(1 if i + 1 in s else 0 for i in range(n)))
    return (lhs - rhs).is_zero()


# ---------------------------------------------------------------------------
# Chart sections and symbolic identities
# ---------------------------------------------------------------------------


def chart_section(n: int, sigma: Sequence[int], j: int) -> MultiPoly:
    """(sum_{|I|=j} x_I) / x_{sigma(1..j)} written in the chart coordinates
    t_i = x_{sigma(i+1)}/x_{sigma(i)}: a polynomial with all coefficients 1
    and constant term 1."""
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError("sigma must be a permutation of 1..n")
    if not 1 <= j <= n - 1:
        raise ValueError("need 1 <= j <= n-1")
    position = {v: i + 1 for i, v in enumerate(sigma)}
    poly = MultiPoly.zero(QQ, n - 1)
    for I in itertools.combinations(range(1, n + 1), j):
        positions = sorted(position[v] for v in I)
        exp = []
        for i in range(1, n):
            e = sum(1 for m in positions if m > i) - max(0, j - i)
            if e < 0:
                raise RuntimeError("negative chart exponent: rewrite is broken")
            exp.append(e)
        poly = poly + MultiPoly.monomial(QQ, tuple(exp))
    return poly


def verify_cd_disjoint(n: int, negative_control: bool = False) -> bool:
    """The section divisor and the boundary divisor at the same index never
    meet: in every chart the section restricts to the constant 1 on the
    boundary coordinate's zero locus."""
    if n < 2:
        raise ValueError("n >= 2 required")
    for sigma in itertools.permutations(range(1, n + 1)):
        for j in range(1, n):
            section = chart_section(n, sigma, j)
            if negative_control:
                tj = MultiPoly.variable(QQ, n - 1, j - 1)
                section = tj * section
            restricted = MultiPoly(
                QQ,
                n - 1,
                {e: c for e, c in section.terms.items() if e[j - 1] == 0},
            )
            if restricted != MultiPoly.const(QQ, n - 1, 1):
                return False
    return True


def _min_intersection(n: int, J: FrozenSet[int], k: int) -> int:
    """min over |I| = k of |I & J|, by direct enumeration."""
    if k == 0:
        return 0
    if k == n:
        return len(J)
    return min(
        len(J & frozenset(I)) for I in itertools.combinations(range(1, n + 1), k)
    )


def verify_divisor_relation(n: int, negative_control: bool = False) -> bool:
    """Valuation identity behind the linear equivalence of twice a section
    divisor against its neighbors and the complementary boundary divisor.

    For every ray subset J and every j, the boundary valuations of the three
    sections combine to 1 exactly on the boundary divisors of complementary
    size: ord_J(j-1) + ord_J(j+1) - 2 ord_J(j) = [|J| = n-j], where
    ord_J(k) = min_{|I|=k} |I & J|.  The enumeration is the oracle; the
    closed form max(0,d-1) + max(0,d+1) - 2 max(0,d) = [d = 0] with
    d = j + |J| - n is asserted alongside."""
    if n < 2:
        raise ValueError("n >= 2 required")
    for size in range(1, n):
        for J in itertools.combinations(range(1, n + 1), size):
            Jset = frozenset(J)
            for j in range(1, n):
                lhs = (
                    _min_intersection(n, Jset, j - 1)
                    + _min_intersection(n, Jset, j + 1)
                    - 2 * _min_intersection(n, Jset, j)
                )
                d = j + size - n
                closed = max(0, d - 1) + max(0, d + 1) - 2 * max(0, d)
                if lhs != closed:
                    return False
                target = size == n - j + (1 if negative_control else 0)
                if lhs != (1 if target else 0):
                    return False
    return True


def verify_section_hyperplane(n: int, flip_signs: bool = False) -> bool:
    """The marked sections lie on the subscheme hyperplane: for every chart
    permutation sigma and every marked point index i the alternating sum
    sum_k (-1)^k a_k^sigma y_k(s_{sigma(i)}) vanishes identically."""
    if not 2 <= n <= 5:
        raise ValueError("symbolic identity checked for 2 <= n <= 5")
    f = QQ
    for sigma in itertools.permutations(range(1, n + 1)):
        sections = []
        for k in range(n + 1):
            if k == 0 or k == n:
                sections.append(RationalExpr.const(f, n, 1))
                continue
            num = MultiPoly.zero(f, n)
            for I in itertools.combinations(range(1, n + 1), k):
                num = num + MultiPoly.monomial(
                    f, tuple(1 if i + 1 in I else 0 for i in range(n))
                )
            den_exp = [0] * n
            for l in range(1, k + 1):
                den_exp[sigma[l - 1] - 1] += 1
            sections.append(RationalExpr(num, MultiPoly.monomial(f, tuple(den_exp))))
        for i in range(1, n + 1):
            total = RationalExpr.const(f, n, 0)
            for k in range(n + 1):
                exp = [0] * n
                exp[sigma[i - 1] - 1] += i - k
                for l in range(1, k + 1):
                    exp[sigma[l - 1] - 1] += 1
                for l in range(1, i + 1):
                    exp[sigma[l - 1] - 1] -= 1
                y_k = RationalExpr.monomial_quotient(f, n, exp)
                sign = 1 if flip_signs else (-1) ** k
                term = sections[k] * y_k
                if sign < 0:
                    term = -term
                total = total + term
            if not total.is_zero():
                return False
    return True


def verify_a_data_cocycle(n: int, negative_control: bool = False) -> bool:
    """Three-term multiplicative identity of the root-indexed section pairs:
    with t_{ij} = prod_{i in I, j not in I} w_I and t_{ji} its opposite, the
    products t_{ij} t_{jk} t_{ki} and t_{ji} t_{kj} t_{ik} coincide as
    monomials in the w_I for all distinct i, j, k."""
    if n < 3:
        raise ValueError("n >= 3 required")
    subsets = [frozenset(s) for s in sigma_subsets(n)]

    def t(i: int, j: int) -> Dict[FrozenSet[int], int]:
        return {I: 1 for I in subsets if i in I and j not in I}

    def merge(*dicts):
        out: Dict[FrozenSet[int], int] = {}
        for d in dicts:
            for key, e in d.items():
                out[key] = out.get(key, 0) + e
        return {k: v for k, v in out.items() if v}

    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        # alpha = beta_ij, beta = beta_jk, gamma = beta_ik = alpha + beta
        if negative_control:
            lhs = merge(t(i, j), t(j, k), t(i, k))
            rhs = merge(t(j, i), t(k, j), t(k, i))
        else:
            lhs = merge(t(i, j), t(j, k), t(k, i))
            rhs = merge(t(j, i), t(k, j), t(i, k))
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# Collections on the permutohedral fan and the forgetting map on points
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SigmaPoint:
    """A field-valued collection on the permutohedral fan: one value w_I per
    nonempty proper subset I of {1..n}."""

    n: int
    field: Field
    w: Tuple[Element, ...]  # ordered like sigma_subsets(n)

    def __post_init__(self):
        if len(self.w) != 2**self.n - 2:
            raise ValueError("one value per nonempty proper subset required")

    @staticmethod
    def from_dict(n: int, field: Field, values: Dict[FrozenSet[int], object]) -> "SigmaPoint":
        subsets = [frozenset(s) for s in sigma_subsets(n)]
        if set(values) != set(subsets):
            raise ValueError("values must be indexed by all proper nonempty subsets")
        return SigmaPoint(n, field, tuple(field.of(values[s]) for s in subsets))

    def value(self, subset: FrozenSet[int]) -> Element:
        subsets = [frozenset(s) for s in sigma_subsets(self.n)]
        return self.w[subsets.index(subset)]

    def to_fan_point(self, fan: Optional[StackyFan] = None):
        from .orbit_points import FanPoint

        fan = fan or build_sigma_A(self.n)
        return FanPoint(fan, self.field, self.w)

    def is_nondegenerate(self) -> bool:
        fan = build_sigma_A(self.n)
        return is_nondegenerate(fan, self.w, self.field)

    def relabel(self, perm: Dict[int, int]) -> "SigmaPoint":
        subsets = [frozenset(s) for s in sigma_subsets(self.n)]
        index = {s: i for i, s in enumerate(subsets)}
        new = [None] * len(subsets)
        for s, val in zip(subsets, self.w):
            target = frozenset(perm[i] for i in s)
            new[index[target]] = val
        return SigmaPoint(self.n, self.field, tuple(new))


def sigma_section_values(sp: SigmaPoint) -> List[Element]:
    """The n section values x_i = prod_{I containing i} w_I (torus locus)."""
    f = sp.field
    subsets = [frozenset(s) for s in sigma_subsets(sp.n)]
    out = []
    for i in range(1, sp.n + 1):
        v = f.one
        for s, w in zip(subsets, sp.w):
            if i in s:
                v = f.mul(v, w)
        out.append(v)
    return out


def sigma_forget(sp: SigmaPoint) -> ExtendedPoint:
    """Point-level label-forgetting map.

    The section values are

        a_j = sum_{|J|=j} prod_I w_I^(|J & I| - max(0, |I|+j-n)),
        b_j = prod_{|J|=n-j} w_J,

    indexed from the first pole of the chain.  The returned coefficient
    tuple is the reversal (1, a_{n-1}, ..., a_1, 1) with twists reversed
    likewise: this is the orientation of the polynomial normal form, whose
    roots on the torus locus are the section values x_i = prod_{i in I} w_I
    (the two orientations differ by the chain flip, which is not a torus
    element).  Nondegeneracy of the output is guaranteed by the flag
    condition on the input."""
    if not sp.is_nondegenerate():
        raise ValueError("degenerate collection")
    f = sp.field
    n = sp.n
    subsets = [frozenset(s) for s in sigma_subsets(n)]
    a = []
    for j in range(1, n):
        total = f.zero
        for J in itertools.combinations(range(1, n + 1), j):
            Jset = frozenset(J)
            term = f.one
            for s, w in zip(subsets, sp.w):
                e = len(Jset & s) - max(0, len(s) + j - n)
                if e < 0:
                    raise RuntimeError("negative section exponent")
                if e:
                    term = f.mul(term, f.pow(w, e))
            total = f.add(total, term)
        a.append(total)
    b = []
    for j in range(1, n):
        prod = f.one
        for s, w in zip(subsets, sp.w):
            if len(s) == n - j:
                prod = f.mul(prod, w)
        b.append(prod)
    a.reverse()
    b.reverse()
    return ExtendedPoint(n, f, (f.one, *a, f.one), tuple(b))
