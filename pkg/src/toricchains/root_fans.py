"""Stacky fans from Cartan matrices of types A, B, C.

A fan here is a simplicial fan in Z^rank together with a chosen integer
generator per ray, encoded by the matrix whose columns are the ray
generators.  The main constructions are the rank-n fans with 2n rays built
from the block matrix (-C | I_n), C a Cartan matrix, and the permutohedral
fan of the Losev-Manin space.  Everything is exact; validity checks
(simplicial, pure, wall condition, sampled completeness) are performed with
rational arithmetic, with an optional numpy fast path whose findings are
always re-verified exactly.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exact_linalg import (
    FinDiagGroupDesc,
    IntMatrix,
    cokernel,
    invert_rational,
    snf,
    solve_rational,
)

try:  # numpy accelerates the completeness sampling; results are re-verified
    import numpy as _np
except ImportError:  # pragma: no cover
    _np = None

FAMILY_TAGS = ("A", "B", "Bcan", "C", "Cminus", "SigmaA")


@dataclass(frozen=True)
class FanFamily:
    """A named fan construction together with its rank parameter."""

    tag: str
    n: int

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}")
        if self.n < 1:
            raise ValueError("rank parameter must be >= 1")
        if self.tag == "Cminus" and self.n < 2:
            # n = 1 would be the zero-dimensional group-only case.
            raise ValueError("the C-minus variant requires n >= 2")
        if self.tag == "SigmaA" and self.n < 2:
            raise ValueError("the permutohedral fan requires n >= 2")


@dataclass(frozen=True)
class StackyFan:
    """Rays with chosen integer generators plus maximal-cone combinatorics.

    ``rays[i]`` is the generator of ray i; ``beta`` is the rank x #rays
    matrix with these columns.  ``max_cones`` lists the maximal cones as
    sorted tuples of ray indices.
    """

    rank: int
    rays: Tuple[Tuple[int, ...], ...]
    ray_labels: Tuple[str, ...]
    max_cones: Tuple[Tuple[int, ...], ...]
    family: Optional[FanFamily] = None

    def __post_init__(self):
        if len(self.rays) != len(self.ray_labels):
            raise ValueError("one label per ray required")
        for v in self.rays:
            if len(v) != self.rank:
                raise ValueError("ray dimension mismatch")
            if all(x == 0 for x in v):
                raise ValueError("zero vector cannot generate a ray")
        for cone in self.max_cones:
            if list(cone) != sorted(set(cone)):
                raise ValueError("cone ray indices must be sorted and distinct")
            if any(not 0 <= i < len(self.rays) for i in cone):
                raise ValueError("cone ray index out of range")

    @property
    def num_rays(self) -> int:
        return len(self.rays)

    @property
    def beta(self) -> IntMatrix:
        return IntMatrix.from_rows(
            [[v[i] for v in self.rays] for i in range(self.rank)]
        )

    def label_index(self, label: str) -> int:
        return self.ray_labels.index(label)

    def to_json(self) -> str:
        payload = {
            "rank": self.rank,
            "ray_labels": list(self.ray_labels),
            "rays": [list(v) for v in self.rays],
            "max_cones": [list(c) for c in self.max_cones],
        }
        return json.dumps(payload, sort_keys=True)


def fan_from_json(text: str) -> StackyFan:
    data = json.loads(text)
    fan = StackyFan(
        rank=int(data["rank"]),
        rays=tuple(tuple(int(x) for x in v) for v in data["rays"]),
        ray_labels=tuple(str(s) for s in data["ray_labels"]),
        max_cones=tuple(tuple(int(i) for i in c) for c in data["max_cones"]),
    )
    fam = infer_family(fan)
    if fam is not None:
        fan = StackyFan(fan.rank, fan.rays, fan.ray_labels, fan.max_cones, fam)
    return fan


# ---------------------------------------------------------------------------
# Cartan matrices and the block matrices defining the fans
# ---------------------------------------------------------------------------


def cartan_matrix(tag: str, n: int) -> IntMatrix:
    """Cartan matrix of type A, B or C at rank n.

    Type A is the symmetric tridiagonal matrix; type C has the doubled entry
    in position (n, n-1); type B is the transpose of type C (so the doubled
    entry -2 sits in position (n-1, n)).
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    if tag not in ("A", "B", "C"):
        raise ValueError(f"no Cartan matrix for tag {tag!r}")
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 2
        if i + 1 < n:
            rows[i][i + 1] = -1
            rows[i + 1][i] = -1
    if n >= 2:
        if tag == "C":
            rows[n - 1][n - 2] = -2
        elif tag == "B":
            rows[n - 2][n - 1] = -2
    return IntMatrix.from_rows(rows)


def _bcan_matrix(n: int) -> IntMatrix:
    """Type-B matrix with its rightmost column halved (ray made primitive)."""
    if n == 1:
        return IntMatrix.from_rows([[1]])
    rows = cartan_matrix("B", n).to_rows()
    for i in range(n):
        if rows[i][n - 1] % 2 != 0:
            raise AssertionError("type-B rightmost column must be even")
        rows[i][n - 1] //= 2
    return IntMatrix.from_rows(rows)


def upsilon_beta(family: FanFamily) -> IntMatrix:
    """The rank x (2*rank) block matrix whose columns generate the rays."""
    tag, n = family.tag, family.n
    if tag == "SigmaA":
        raise ValueError("the permutohedral fan is not of block (-C | I) shape")
    if tag == "Cminus":
        c = cartan_matrix("C", n - 1)
        right = IntMatrix.identity(n - 1).to_rows()
        right[n - 2][n - 2] = 2
        neg = [[-x for x in row] for row in c.to_rows()]
        return IntMatrix.from_rows(
            [neg[i] + right[i] for i in range(n - 1)]
        )
    if tag == "Bcan":
        c = _bcan_matrix(n)
    else:
        c = cartan_matrix(tag, n)
    ident = IntMatrix.identity(n).to_rows()
    neg = [[-x for x in row] for row in c.to_rows()]
    return IntMatrix.from_rows([neg[i] + ident[i] for i in range(n)])


def _upsilon_labels(family: FanFamily) -> Tuple[str, ...]:
    tag, n = family.tag, family.n
    if tag == "A":
        idx = list(range(1, n + 1))
    elif tag in ("B", "Bcan"):
        idx = list(range(n, 0, -1))
    elif tag == "C":
        idx = list(range(n - 1, -1, -1))
    elif tag == "Cminus":
        idx = list(range(n - 1, 0, -1))
    else:
        raise ValueError(tag)
    return tuple(f"rho_{i}" for i in idx) + tuple(f"tau_{i}" for i in idx)


def build_upsilon(family: FanFamily) -> StackyFan:
    """The stacky fan with rays the columns of (-C | I) and the 2^k maximal
    cones picking, for every index i, either the rho_i ray or the tau_i ray."""
    beta = upsilon_beta(family)
    k = beta.rows  # number of rho/tau pairs
    rays = tuple(beta.col(j) for j in range(beta.cols))
    cones = []
    for mask in range(2**k):
        cone = tuple(
            sorted((k + p if (mask >> p) & 1 else p) for p in range(k))
        )
        cones.append(cone)
    return StackyFan(
        rank=k,
        rays=rays,
        ray_labels=_upsilon_labels(family),
        max_cones=tuple(cones),
        family=family,
    )


def _subset_label(subset: Tuple[int, ...]) -> str:
    return "v_{" + ",".join(str(i) for i in subset) + "}"


def sigma_subsets(n: int) -> List[Tuple[int, ...]]:
    """All nonempty proper subsets of {1..n}, sorted by (size, elements)."""
    out = []
    for size in range(1, n):
        out.extend(itertools.combinations(range(1, n + 1), size))
    return out


def build_sigma_A(n: int) -> StackyFan:
    """The complete smooth fan with one ray per nonempty proper subset of
    {1..n} and one maximal cone per permutation (a flag of nested subsets).

    The ambient lattice Z^n/(sum of basis vectors) is coordinatized by
    dropping the last basis vector, so v_n maps to -(e_1 + ... + e_{n-1}).
    """
    if n < 2:
        raise ValueError("n >= 2 required")
    subsets = sigma_subsets(n)
    index = {frozenset(s): i for i, s in enumerate(subsets)}
    rays = []
    for s in subsets:
        if n in s:
            comp = [i for i in range(1, n) if i not in s]
            vec = [0] * (n - 1)
            for i in comp:
                vec[i - 1] = -1
        else:
            vec = [0] * (n - 1)
            for i in s:
                vec[i - 1] = 1
        rays.append(tuple(vec))
    cones = []
    seen = set()
    for sigma in itertools.permutations(range(1, n + 1)):
        flag = []
        acc: List[int] = []
        for k in range(n - 1):
            acc.append(sigma[n - 1 - k])
            flag.append(index[frozenset(acc)])
        cone = tuple(sorted(flag))
        if cone in seen:
            raise AssertionError("flag cones must be distinct")
        seen.add(cone)
        cones.append(cone)
    return StackyFan(
        rank=n - 1,
        rays=tuple(rays),
        ray_labels=tuple(_subset_label(s) for s in subsets),
        max_cones=tuple(cones),
        family=FanFamily("SigmaA", n),
    )


def infer_family(fan: StackyFan) -> Optional[FanFamily]:
    """Recover the construction a fan came from, if it matches one exactly."""
    for tag in ("A", "B", "Bcan", "C", "Cminus"):
        ns = {"Cminus": fan.rank + 1}.get(tag, fan.rank)
        try:
            fam = FanFamily(tag, ns)
        except ValueError:
            continue
        try:
            candidate = build_upsilon(fam)
        except ValueError:
            continue
        if candidate.rays == fan.rays and candidate.max_cones == fan.max_cones:
            return fam
    if fan.rank >= 1:
        n = fan.rank + 1
        if fan.num_rays == 2**n - 2:
            candidate = build_sigma_A(n)
            if candidate.rays == fan.rays and candidate.max_cones == fan.max_cones:
                return FanFamily("SigmaA", n)
    return None


# ---------------------------------------------------------------------------
# Exact cone geometry
# ---------------------------------------------------------------------------


def _rank_of_vectors(vectors: Sequence[Sequence[int]]) -> int:
    m = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pr = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[rank], m[pr] = m[pr], m[rank]
        piv = m[rank][c]
        m[rank] = [x / piv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def cone_contains(fan: StackyFan, cone: Sequence[int], vector: Sequence[int]) -> bool:
    """Exact membership of an integer vector in the cone spanned by the
    given rays (which must be linearly independent)."""
    rays = [fan.rays[i] for i in cone]
    rows = [[rays[j][i] for j in range(len(rays))] for i in range(fan.rank)]
    sol = solve_rational(rows, list(vector))
    if sol is None:
        return False
    # With independent generators the solution is unique; verify and sign-check.
    for i in range(fan.rank):
        if sum(Fraction(rows[i][j]) * sol[j] for j in range(len(rays))) != vector[i]:
            return False
    return all(x >= 0 for x in sol)


class _ConeTester:
    """Precomputed signed adjugates for fast exact membership in the
    full-dimensional simplicial cones of a fan."""

    def __init__(self, fan: StackyFan):
        self.fan = fan
        self.full: List[Tuple[Tuple[int, ...], List[List[int]]]] = []
        self.partial: List[Tuple[int, ...]] = []
        for cone in fan.max_cones:
            if len(cone) != fan.rank:
                self.partial.append(tuple(cone))
                continue
            rows = [[fan.rays[j][i] for j in cone] for i in range(fan.rank)]
            mat = IntMatrix.from_rows(rows)
            det = mat.det()
            if det == 0:
                self.partial.append(tuple(cone))
                continue
            inv = invert_rational(rows)
            sign = 1 if det > 0 else -1
            adj = []
            for r in inv:
                adj_row = [x * det * sign for x in r]
                assert all(x.denominator == 1 for x in adj_row)
                adj.append([int(x) for x in adj_row])
            self.full.append((tuple(cone), adj))
        self._np_stack = None
        if _np is not None and self.full:
            bound = max(
                (abs(x) for _, adj in self.full for row in adj for x in row),
                default=0,
            )
            # Keep int64 products safely below 2^62 for samples up to |x|<=99.
            if bound * 99 * max(fan.rank, 1) < 2**60:
                self._np_stack = _np.array(
                    [adj for _, adj in self.full], dtype=_np.int64
                )

    def find_cone(self, vector: Sequence[int]) -> Optional[Tuple[int, ...]]:
        if self._np_stack is not None:
            x = _np.array(list(vector), dtype=_np.int64)
            prods = self._np_stack @ x
            hits = _np.nonzero((prods >= 0).all(axis=1))[0]
            for h in hits:
                cone, adj = self.full[int(h)]
                if all(
                    sum(a * v for a, v in zip(row, vector)) >= 0 for row in adj
                ):
                    return cone
        else:
            for cone, adj in self.full:
                ok = True
                for row in adj:
                    if sum(a * v for a, v in zip(row, vector)) < 0:
                        ok = False
                        break
                if ok:
                    return cone
        for cone in self.partial:
            if cone_contains(self.fan, cone, vector):
                return cone
        return None


# ---------------------------------------------------------------------------
# Fan validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FanReport:
    simplicial: bool
    pure: bool
    wall_condition: bool
    sampled_complete: bool

    @property
    def all_ok(self) -> bool:
        return self.simplicial and self.pure and self.wall_condition and self.sampled_complete

    def to_dict(self) -> dict:
        return {
            "simplicial": self.simplicial,
            "pure": self.pure,
            "wall_condition": self.wall_condition,
            "sampled_complete": self.sampled_complete,
        }


_SAMPLE_SEED = 20260331
_SAMPLE_COUNT = 1000


def check_fan(fan: StackyFan, samples: int = _SAMPLE_COUNT) -> FanReport:
    """Structural validation: simplicial, pure, interior walls shared by
    exactly two maximal cones, and deterministic sampled completeness."""
    simplicial = all(
        _rank_of_vectors([fan.rays[i] for i in cone]) == len(cone)
        for cone in fan.max_cones
    )
    pure = all(len(cone) == fan.rank for cone in fan.max_cones)

    wall = True
    cone_sets = {frozenset(c) for c in fan.max_cones}
    if pure and simplicial:
        for cone in fan.max_cones:
            for drop in cone:
                facet = frozenset(cone) - {drop}
                count = 0
                for r in range(fan.num_rays):
                    if r not in facet and (facet | {r}) in cone_sets:
                        count += 1
                if count != 2:
                    wall = False
                    break
            if not wall:
                break
    else:
        wall = False

    complete = True
    if simplicial:
        tester = _ConeTester(fan)
        rng = random.Random(_SAMPLE_SEED)
        for _ in range(samples):
            x = [rng.randint(-99, 99) for _ in range(fan.rank)]
            if tester.find_cone(x) is None:
                complete = False
                break
    else:
        complete = False
    return FanReport(simplicial, pure, wall, complete)


def fan_faces(fan: StackyFan) -> List[Tuple[int, ...]]:
    """All faces of all maximal cones (simplicial: faces = ray subsets),
    including the zero cone, each listed once, deterministically ordered."""
    faces = set()
    for cone in fan.max_cones:
        for size in range(len(cone) + 1):
            for sub in itertools.combinations(cone, size):
                faces.add(sub)
    return sorted(faces, key=lambda f: (len(f), f))


def cones_pairwise_faces(fan: StackyFan) -> bool:
    """Exact check that every pairwise intersection of maximal cones is the
    cone on the shared rays (hence a common face).  Cost grows quickly with
    the number of cones; intended for desk-scale fans."""
    inverses: Dict[Tuple[int, ...], List[List[Fraction]]] = {}
    for cone in fan.max_cones:
        if len(cone) != fan.rank:
            raise ValueError("pairwise face check requires a pure fan")
        rows = [[fan.rays[j][i] for j in cone] for i in range(fan.rank)]
        inverses[tuple(cone)] = invert_rational(rows)
    for c1, c2 in itertools.combinations(fan.max_cones, 2):
        shared = set(c1) & set(c2)
        inv2 = inverses[tuple(c2)]
        rays1 = [fan.rays[i] for i in c1]
        # M columns: coordinates of c1's rays in c2's ray basis.
        m = [
            [sum(inv2[i][k] * Fraction(rays1[j][k]) for k in range(fan.rank))
             for j in range(fan.rank)]
            for i in range(fan.rank)
        ]
        for pos, ray_idx in enumerate(c1):
            if ray_idx in shared:
                continue
            # Is there a point of cone(c1) inside cone(c2) using ray `pos`?
            ineqs = []
            for i in range(fan.rank):
                row = [Fraction(0)] * fan.rank
                row[i] = Fraction(1)
                ineqs.append((row, Fraction(0)))
            for i in range(fan.rank):
                ineqs.append((list(m[i]), Fraction(0)))
            strict = [Fraction(0)] * fan.rank
            strict[pos] = Fraction(1)
            ineqs.append((strict, Fraction(1)))
            if _fm_feasible(ineqs):
                return False
    return True


def _fm_feasible(ineqs: List[Tuple[List[Fraction], Fraction]]) -> bool:
    """Fourier-Motzkin feasibility of the system {row . x >= rhs}."""

    def normalize(row, rhs):
        # Scale rows to a canonical form for deduplication only.
        nz = [abs(x) for x in row if x != 0]
        if nz:
            m = max(nz)
            row = [x / m for x in row]
            rhs = rhs / m
        return tuple(row), rhs

    nvars = len(ineqs[0][0]) if ineqs else 0
    system = ineqs
    for var in range(nvars):
        pos, neg, zero = [], [], []
        for row, rhs in system:
            c = row[var]
            if c > 0:
                pos.append((row, rhs))
            elif c < 0:
                neg.append((row, rhs))
            else:
                zero.append((row, rhs))
        new = {normalize(r, b) for r, b in zero}
        for rp, bp in pos:
            cp = rp[var]
            for rn, bn in neg:
                cn = rn[var]
                # Eliminate: cp > 0 >= needs x >= (bp - rest)/cp; cn < 0 gives
                # upper bound; combine to a var-free inequality.
                row = [a / cp - b / cn for a, b in zip(rp, rn)]
                rhs = bp / cp - bn / cn
                row[var] = Fraction(0)
                new.add(normalize(row, rhs))
        system = [(list(r), b) for r, b in new]
    return all(rhs <= 0 for _, rhs in system)


# ---------------------------------------------------------------------------
# Group data and morphisms
# ---------------------------------------------------------------------------


class WeightTorsionError(ValueError):
    """Raised when character weights are requested but the acting group has
    a finite (torsion) factor, so no integer weight matrix exists."""


def dg_group(fan: StackyFan) -> FinDiagGroupDesc:
    """The diagonalizable group acting in the quotient construction:
    cokernel of the transpose of the ray matrix."""
    beta = fan.beta
    if snf(beta).rank != fan.rank:
        raise ValueError("rays do not span the ambient space")
    return cokernel(beta.T)


def weight_matrix(fan: StackyFan) -> IntMatrix:
    """Character weights of the acting torus on the ray coordinates.

    For a fan of block shape (-C | I) this is the block matrix (I | C^T):
    coordinate a_i carries the i-th standard character and coordinate b_i the
    i-th column of C^T.  In general the weights are read off a unimodular
    transform of the transposed ray matrix.  Requires a torsion-free group.
    """
    desc = dg_group(fan)
    if desc.torsion:
        raise WeightTorsionError(
            f"acting group has torsion {desc.torsion}; no split weight matrix"
        )
    if fan.family is not None and fan.family.tag in ("A", "B", "Bcan", "C"):
        n = fan.rank
        beta = fan.beta
        c_t = [[-beta[j, i] for j in range(n)] for i in range(n)]
        ident = IntMatrix.identity(n).to_rows()
        w = IntMatrix.from_rows([ident[i] + c_t[i] for i in range(n)])
    else:
        form = snf(fan.beta.T)
        r = form.rank
        rows = [list(form.U.row(i)) for i in range(r, fan.num_rays)]
        w = IntMatrix.from_rows(rows)
    # The weights must kill the image of the character lattice.
    prod = w * fan.beta.T
    assert all(x == 0 for x in prod.entries)
    return w


def fan_morphism_check(src: StackyFan, dst: StackyFan, L: IntMatrix) -> bool:
    """True iff the lattice map L sends every cone of src into one cone of dst."""
    if L.cols != src.rank or L.rows != dst.rank:
        raise ValueError("lattice map shape does not match fan ranks")
    for cone in src.max_cones:
        images = [L.mul_vector(list(src.rays[i])) for i in cone]
        if not any(
            all(cone_contains(dst, dcone, img) for img in images)
            for dcone in dst.max_cones
        ):
            return False
    return True


def standard_fan_map(tag: str, n: int) -> Tuple[IntMatrix, StackyFan, StackyFan]:
    """The lattice map embedding the involutive fan into the type-A fan.

    For tag ``C`` this is the map Z^n -> Z^(2n-1) sending the i-th
    tau-generator to e_{n-i} + e_{n+i} (and the 0-th to e_n); for tag ``B``
    the map Z^n -> Z^(2n) sending it to e_{n+1-i} + e_{n+i}.
    """
    if tag == "C":
        src = build_upsilon(FanFamily("C", n))
        dst = build_upsilon(FanFamily("A", 2 * n - 1))
        cols = []
        for p in range(1, n + 1):
            i = n - p  # label of the ray at column position p
            col = [0] * (2 * n - 1)
            if i == 0:
                col[n - 1] = 1
            else:
                col[n - i - 1] = 1
                col[n + i - 1] = 1
            cols.append(col)
    elif tag in ("B", "Bcan"):
        src = build_upsilon(FanFamily("Bcan", n))
        dst = build_upsilon(FanFamily("A", 2 * n))
        cols = []
        for p in range(1, n + 1):
            i = n + 1 - p
            col = [0] * (2 * n)
            col[n - i] = 1
            col[n + i - 1] = 1
            cols.append(col)
    else:
        raise ValueError("standard fan maps exist for tags 'C' and 'B'")
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(dst.rank)]
    return IntMatrix.from_rows(rows), src, dst


def canonical_stack(fan: StackyFan) -> StackyFan:
    """Replace every ray generator by its primitive vector (divide by gcd)."""
    new_rays = []
    for v in fan.rays:
        g = 0
        for x in v:
            g = math.gcd(g, abs(x))
        if g == 0:
            raise ValueError("zero ray vector")
        new_rays.append(tuple(x // g for x in v))
    return StackyFan(
        rank=fan.rank,
        rays=tuple(new_rays),
        ray_labels=fan.ray_labels,
        max_cones=fan.max_cones,
        family=None,
    )
