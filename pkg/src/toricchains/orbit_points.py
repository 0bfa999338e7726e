"""Field-valued points of the toric orbifolds and the torus action on them.

A point is one field element per ray, subject to the nondegeneracy condition
that the zero coordinates fit inside a single cone.  The acting split torus
multiplies coordinate r by the character prod_k kappa_k^(W[k][r]) where W is
the fan's weight matrix.  Orbit membership, canonical orbit representatives
over prime fields, stabilizer group schemes and coarse point counts are all
computed exactly through integer linear algebra: discrete logarithms reduce
multiplicative questions over F_p to linear systems mod p-1, and prime
factorization plus a sign system does the same over Q.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .exact_linalg import (
    FinDiagGroupDesc,
    IntMatrix,
    cokernel,
    solve_integer,
    solve_mod,
)
from .fields import Element, Field, PrimeField, RationalField
from .root_fans import StackyFan, check_fan, fan_faces, weight_matrix

_DLOG_TABLE_BOUND = 200_003
_SCAN_BOUND = 200_000
_ENUM_BOUND = 10**8


@dataclass(frozen=True)
class FanPoint:
    """A field-valued point: one coordinate per ray of the fan."""

    fan: StackyFan
    field: Field
    coords: Tuple[Element, ...]

    def __post_init__(self):
        if len(self.coords) != self.fan.num_rays:
            raise ValueError("one coordinate per ray required")

    def support(self) -> Tuple[int, ...]:
        return tuple(
            r for r, c in enumerate(self.coords) if not self.field.is_zero(c)
        )

    def zero_set(self) -> Tuple[int, ...]:
        return tuple(r for r, c in enumerate(self.coords) if self.field.is_zero(c))

    def coord_ints(self) -> Tuple:
        """Coordinates keyed for sorting (canonical integer reps over F_p)."""
        return tuple(self.field.sort_key(c) for c in self.coords)


@dataclass(frozen=True)
class GroupElement:
    """An element of the acting torus: one unit per free generator."""

    units: Tuple[Element, ...]


def make_point(fan: StackyFan, field: Field, coords: Sequence) -> FanPoint:
    p = FanPoint(fan, field, tuple(field.of(c) for c in coords))
    if not is_nondegenerate(fan, p.coords, field):
        raise ValueError("degenerate point: zero set spans no cone of the fan")
    return p


def is_nondegenerate(fan: StackyFan, coords: Sequence, field: Field) -> bool:
    """True iff the set of rays with zero coordinate lies in some cone."""
    if len(coords) != fan.num_rays:
        raise ValueError("coordinate count does not match ray count")
    zero = {r for r, c in enumerate(coords) if field.is_zero(field.of(c))}
    if not zero:
        return True
    return any(zero.issubset(cone) for cone in fan.max_cones)


@lru_cache(maxsize=None)
def _weights(fan: StackyFan) -> IntMatrix:
    return weight_matrix(fan)


def free_rank(fan: StackyFan) -> int:
    return _weights(fan).rows


def act(g: GroupElement, p: FanPoint) -> FanPoint:
    """Multiply each coordinate by its character value at g."""
    w = _weights(p.fan)
    if len(g.units) != w.rows:
        raise ValueError("group element has wrong number of units")
    f = p.field
    for u in g.units:
        if f.is_zero(u):
            raise ValueError("group element units must be invertible")
    new = []
    for r, c in enumerate(p.coords):
        v = c
        for k in range(w.rows):
            e = w[k, r]
            if e:
                v = f.mul(v, f.pow(g.units[k], e))
        new.append(v)
    return FanPoint(p.fan, f, tuple(new))


# ---------------------------------------------------------------------------
# Multiplicative linear systems: does prod_k kappa_k^A[r][k] = t_r have a
# solution in units of the field?
# ---------------------------------------------------------------------------


class _DlogContext:
    """Discrete logarithms in F_p^* via a fixed generator and a full table."""

    def __init__(self, field: PrimeField):
        if field.p > _DLOG_TABLE_BOUND:
            raise ValueError(f"prime {field.p} exceeds the discrete-log guard")
        self.field = field
        self.g = _primitive_root(field.p)
        table: Dict[int, int] = {}
        x = 1
        for i in range(field.p - 1):
            table[x] = i
            x = (x * self.g) % field.p
        self.table = table

    def log(self, a: int) -> int:
        return self.table[a % self.field.p]


def _primitive_root(p: int) -> int:
    if p == 2:
        return 1
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise AssertionError("no primitive root found")


def _prime_factors(n: int) -> List[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


_DLOG_CACHE: Dict[int, _DlogContext] = {}


def _dlog_context(field: PrimeField) -> _DlogContext:
    ctx = _DLOG_CACHE.get(field.p)
    if ctx is None:
        ctx = _DLOG_CACHE[field.p] = _DlogContext(field)
    return ctx


def _rational_factor_data(values: Sequence[Fraction]):
    """Primes appearing in the values, their valuation vectors, and signs."""
    primes: List[int] = []
    seen = set()
    for v in values:
        for part in (abs(v.numerator), v.denominator):
            for q in _prime_factors(part):
                if q not in seen:
                    seen.add(q)
                    primes.append(q)
    primes.sort()

    def valuation(x: Fraction, q: int) -> int:
        e = 0
        num, den = x.numerator, x.denominator
        while num % q == 0:
            num //= q
            e += 1
        while den % q == 0:
            den //= q
            e -= 1
        return e

    vals = {q: [valuation(v, q) for v in values] for q in primes}
    signs = [0 if v > 0 else 1 for v in values]
    return primes, vals, signs


def solve_units(
    rows: Sequence[Sequence[int]], targets: Sequence[Element], field: Field
) -> Optional[List[Element]]:
    """Solve prod_k kappa_k^rows[r][k] = targets[r] for units kappa.

    Returns one solution or None.  Over F_p the system is linear mod p-1 in
    discrete logarithms; over Q it splits into one integer system per prime
    plus a sign system mod 2.
    """
    ngen = len(rows[0]) if rows else 0
    if not rows:
        return [field.one] * ngen
    A = IntMatrix.from_rows(rows)
    if isinstance(field, PrimeField):
        if field.p == 2:
            # F_2^* is trivial: solvable iff all targets are 1.
            return [1] * ngen if all(t == 1 for t in targets) else None
        ctx = _dlog_context(field)
        b = [ctx.log(t) for t in targets]
        x = solve_mod(A, b, field.p - 1)
        if x is None:
            return None
        return [pow(ctx.g, e, field.p) for e in x]
    if isinstance(field, RationalField):
        values = [Fraction(t) for t in targets]
        primes, vals, signs = _rational_factor_data(values)
        exps = {}
        for q in primes:
            x = solve_integer(A, vals[q])
            if x is None:
                return None
            exps[q] = x
        s = solve_mod(A, signs, 2)
        if s is None:
            return None
        units = []
        for k in range(ngen):
            u = Fraction(-1 if s[k] % 2 else 1)
            for q in primes:
                u *= Fraction(q) ** exps[q][k]
            units.append(u)
        return units
    raise ValueError(f"unsupported field {field.name}")


def _support_system(p: FanPoint, q: FanPoint):
    w = _weights(p.fan)
    support = p.support()
    rows = [[w[k, r] for k in range(w.rows)] for r in support]
    f = p.field
    targets = [f.div(q.coords[r], p.coords[r]) for r in support]
    return rows, targets


def orbit_equal(p: FanPoint, q: FanPoint) -> bool:
    """Decide whether two nondegenerate points lie in the same torus orbit."""
    if p.fan != q.fan:
        raise ValueError("points live on different fans")
    if p.field != q.field:
        raise ValueError("points live over different fields")
    for pt in (p, q):
        if not is_nondegenerate(pt.fan, pt.coords, pt.field):
            raise ValueError("orbit comparison requires nondegenerate points")
    if p.support() != q.support():
        return False
    rows, targets = _support_system(p, q)
    return solve_units(rows, targets, p.field) is not None


def orbit_witness(p: FanPoint, q: FanPoint) -> Optional[GroupElement]:
    """A group element carrying p to q, when one exists."""
    if p.support() != q.support():
        return None
    rows, targets = _support_system(p, q)
    units = solve_units(rows, targets, p.field)
    if units is None:
        return None
    return GroupElement(tuple(p.field.of(u) for u in units))


def stabilizer(p: FanPoint) -> FinDiagGroupDesc:
    """Stabilizer group scheme of a nondegenerate point.

    Computed as the cokernel of the character lattice spanned by the weights
    of the nonzero coordinates; the order is a group-scheme order and does
    not depend on the field.  A positive free rank signals an infinite
    stabilizer (non-complete support configuration).
    """
    if not is_nondegenerate(p.fan, p.coords, p.field):
        raise ValueError("stabilizer requires a nondegenerate point")
    w = _weights(p.fan)
    support = p.support()
    if not support:
        return FinDiagGroupDesc(w.rows, ())
    cols = IntMatrix.from_rows(
        [[w[k, r] for r in support] for k in range(w.rows)]
    )
    return cokernel(cols)


def stabilizer_order(p: FanPoint) -> int:
    desc = stabilizer(p)
    if not desc.is_finite:
        raise ValueError("stabilizer is infinite")
    return desc.order


# ---------------------------------------------------------------------------
# Canonical orbit representatives over prime fields
# ---------------------------------------------------------------------------


def canonical_form(p: FanPoint) -> FanPoint:
    """The lexicographically least point in the orbit of p.

    Coordinates are ordered by ray index and field elements by canonical
    integer representative.  Only defined over prime fields; for rational
    points use :func:`orbit_equal` directly.
    """
    if not isinstance(p.field, PrimeField):
        raise ValueError("canonical forms are defined over prime fields only")
    if not is_nondegenerate(p.fan, p.coords, p.field):
        raise ValueError("canonical form requires a nondegenerate point")
    f = free_rank(p.fan)
    if (p.field.p - 1) ** f <= _SCAN_BOUND:
        return _canonical_by_scan(p)
    return _canonical_by_congruences(p)


def _canonical_by_scan(p: FanPoint) -> FanPoint:
    field = p.field
    best = None
    for units in itertools.product(range(1, field.p), repeat=free_rank(p.fan)):
        q = act(GroupElement(units), p)
        key = q.coord_ints()
        if best is None or key < best[0]:
            best = (key, q)
    return best[1]


def _canonical_by_congruences(p: FanPoint) -> FanPoint:
    """Greedy lexicographic minimization, one coordinate at a time.

    At each nonzero position we pick the least value for which the combined
    congruence system (previous choices plus the new one) stays solvable mod
    p-1; solvability is decided by Smith normal form.
    """
    field = p.field
    ctx = _dlog_context(field)
    w = _weights(p.fan)
    mod = field.p - 1
    rows: List[List[int]] = []
    rhs: List[int] = []
    out = list(p.coords)
    for r, c in enumerate(p.coords):
        if field.is_zero(c):
            continue
        row = [w[k, r] for k in range(w.rows)]
        chosen = None
        for v in range(1, field.p):
            target = field.div(v, c)
            b = ctx.log(target)
            A = IntMatrix.from_rows(rows + [row])
            if solve_mod(A, rhs + [b], mod) is not None:
                chosen = v
                rows.append(row)
                rhs.append(b)
                break
        if chosen is None:
            raise AssertionError("unit system became unsolvable")
        out[r] = chosen
    return FanPoint(p.fan, field, tuple(out))


# ---------------------------------------------------------------------------
# Point counts and exhaustive orbit enumeration
# ---------------------------------------------------------------------------


def _is_prime_power(q: int) -> bool:
    return q >= 2 and len(_prime_factors(q)) == 1


@lru_cache(maxsize=None)
def _complete_fan_faces(fan: StackyFan) -> Tuple[Tuple[int, ...], ...]:
    if not check_fan(fan).all_ok:
        raise ValueError("coarse point count requires a verified complete fan")
    return tuple(fan_faces(fan))


def count_coarse_points(fan: StackyFan, q: int) -> int:
    """Number of F_q points of the coarse toric variety: each cone sigma
    contributes one torus orbit of size (q-1)^(rank - dim sigma)."""
    if not _is_prime_power(q):
        raise ValueError("q must be a prime power")
    return sum((q - 1) ** (fan.rank - len(face)) for face in _complete_fan_faces(fan))


def enumerate_orbits(fan: StackyFan, p: int) -> List[Tuple[FanPoint, int]]:
    """Exhaustively enumerate torus orbits of nondegenerate F_p points.

    Returns (canonical representative, stabilizer group-scheme order) pairs,
    sorted by representative.  Guarded to desk scale.
    """
    field = PrimeField(p)
    if p**fan.num_rays > _ENUM_BOUND:
        raise ValueError("enumeration guard exceeded")
    reps: Dict[Tuple, Tuple[FanPoint, int]] = {}
    for coords in itertools.product(range(p), repeat=fan.num_rays):
        if not is_nondegenerate(fan, coords, field):
            continue
        pt = FanPoint(fan, field, coords)
        canon = canonical_form(pt)
        key = canon.coord_ints()
        if key not in reps:
            reps[key] = (canon, stabilizer_order(canon))
    return [reps[k] for k in sorted(reps)]
