"""Sparse polynomial and rational-expression arithmetic."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricchains.fields import GF, QQ
from toricchains.symbolic import (
    MultiPoly,
    RationalExpr,
    expr_is_zero,
    parse_poly,
    poly_add,
    poly_mul,
    poly_substitute,
)


def _rand_poly(rng, field, num_vars=3, max_terms=4, max_exp=3):
    p = MultiPoly.zero(field, num_vars)
    for _ in range(rng.randint(0, max_terms)):
        exp = tuple(rng.randint(0, max_exp) for _ in range(num_vars))
        p = p + MultiPoly.monomial(field, exp, field.of(rng.randint(-5, 5)))
    return p


coeffs = st.integers(-6, 6)
exps = st.tuples(st.integers(0, 3), st.integers(0, 3))


@st.composite
def polys(draw):
    terms = draw(st.lists(st.tuples(exps, coeffs), max_size=5))
    p = MultiPoly.zero(QQ, 2)
    for exp, c in terms:
        p = p + MultiPoly.monomial(QQ, exp, c)
    return p


class TestRingOps:
    def test_add_zero(self):
        p = parse_poly("x1^2 + 2*x2", 2)
        assert poly_add(p, MultiPoly.zero(QQ, 2)) == p

    def test_difference_of_squares(self):
        x1 = MultiPoly.variable(QQ, 2, 0)
        x2 = MultiPoly.variable(QQ, 2, 1)
        assert poly_mul(x1 + x2, x1 - x2) == x1 * x1 - x2 * x2

    def test_elementary_times_variable_coefficient(self):
        e1 = parse_poly("x1 + x2 + x3", 3)
        x1 = MultiPoly.variable(QQ, 3, 0)
        prod = poly_mul(e1, x1)
        assert prod.terms[(2, 0, 0)] == Fraction(1)

    def test_mismatched_inputs_raise(self):
        with pytest.raises(ValueError):
            poly_add(MultiPoly.zero(QQ, 2), MultiPoly.zero(QQ, 3))
        with pytest.raises(ValueError):
            poly_add(MultiPoly.zero(QQ, 2), MultiPoly.zero(GF(5), 2))

    @given(polys(), polys(), polys())
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    def test_prime_field_arithmetic(self):
        f = GF(7)
        p = MultiPoly.monomial(f, (1, 0), 3)
        q = MultiPoly.monomial(f, (1, 0), 4)
        assert (p + q).is_zero()


class TestRationalExpr:
    def test_zero_over_nonzero(self):
        x1 = MultiPoly.variable(QQ, 1, 0)
        assert expr_is_zero(RationalExpr(MultiPoly.zero(QQ, 1), x1))

    def test_commutator(self):
        x1 = MultiPoly.variable(QQ, 2, 0)
        x2 = MultiPoly.variable(QQ, 2, 1)
        assert expr_is_zero(RationalExpr.from_poly(x1 * x2 - x2 * x1))

    def test_common_denominator_identity(self):
        # (x1+x2)/x1 - 1 - x2/x1 == 0
        x1 = MultiPoly.variable(QQ, 2, 0)
        x2 = MultiPoly.variable(QQ, 2, 1)
        e = (
            RationalExpr(x1 + x2, x1)
            - RationalExpr.const(QQ, 2, 1)
            - RationalExpr(x2, x1)
        )
        assert expr_is_zero(e)

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RationalExpr(MultiPoly.const(QQ, 1, 1), MultiPoly.zero(QQ, 1))

    def test_cross_multiplication_equality(self):
        x1 = MultiPoly.variable(QQ, 1, 0)
        one = MultiPoly.const(QQ, 1, 1)
        a = RationalExpr(x1 * x1, x1)  # x^2/x
        b = RationalExpr(x1, one)  # x
        assert a.equals(b)

    def test_agreement_with_evaluation(self):
        rng = random.Random(2)
        for _ in range(25):
            p = _rand_poly(rng, QQ)
            q = _rand_poly(rng, QQ)
            while q.is_zero():
                q = _rand_poly(rng, QQ)
            e = RationalExpr(p, q) - RationalExpr(p, q)
            assert expr_is_zero(e)
            checked = 0
            while checked < 20:
                pt = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3)]
                try:
                    val = e.evaluate(pt)
                except ZeroDivisionError:
                    continue
                assert val == 0
                checked += 1


class TestSubstitution:
    def test_identity_images(self):
        p = parse_poly("x1*x2 + 3", 2)
        images = [
            RationalExpr.from_poly(MultiPoly.variable(QQ, 2, i)) for i in range(2)
        ]
        out = poly_substitute(p, images)
        assert out.equals(RationalExpr.from_poly(p))

    def test_monomial_quotients(self):
        # x1*x2 with x1 -> a/b, x2 -> c/d gives ac/bd
        f = QQ
        a, b, c, d = (MultiPoly.variable(f, 4, i) for i in range(4))
        p = parse_poly("x1*x2", 2)
        out = poly_substitute(p, [RationalExpr(a, b), RationalExpr(c, d)])
        assert out.equals(RationalExpr(a * c, b * d))

    def test_numeric_evaluation(self):
        p = parse_poly("x1 + x2 + x3", 3)
        images = [RationalExpr.const(QQ, 0, v) for v in (1, 2, 3)]
        out = poly_substitute(p, images)
        assert out.num.terms == {(): Fraction(6)}
        assert out.den.terms == {(): Fraction(1)}

    def test_zero_denominator_image_rejected(self):
        p = parse_poly("x1", 1)
        with pytest.raises(ZeroDivisionError):
            poly_substitute(
                p, [RationalExpr(MultiPoly.const(QQ, 1, 1), MultiPoly.zero(QQ, 1))]
            )


class TestSerialization:
    def test_round_trip_examples(self):
        for text in ("0", "1", "x1", "-x2", "3*x1^2*x2 - 1/2*x3 + 1", "x1*x3 + x2^4"):
            p = parse_poly(text, 3)
            assert parse_poly(p.serialize(), 3) == p

    def test_deterministic_order(self):
        p = parse_poly("x2 + x1", 2)
        q = parse_poly("x1 + x2", 2)
        assert p.serialize() == q.serialize() == "x1 + x2"

    @given(polys())
    @settings(max_examples=60, deadline=None)
    def test_round_trip_random(self, p):
        assert parse_poly(p.serialize(), 2) == p

    def test_prime_field_parse(self):
        f = GF(7)
        p = parse_poly("3*x1 + 5", 1, f)
        assert p.evaluate([f.of(2)]) == f.of(11)
