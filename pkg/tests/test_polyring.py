import math

import pytest
from hypothesis import given, settings, strategies as st

from coxdescent import (FieldTower, InhomogeneousError, Multidegree,
                        MultigradedRing, ParseError, RingMismatchError,
                        degree_leq, make_product_projective,
                        monomials_of_degree, multidegree)

from conftest import random_poly, seeded


@pytest.fixture(scope="module")
def ring(gf101):
    return make_product_projective([1, 1], gf101).ring


class TestConstruction:
    def test_reserved_variable_name(self, gf101):
        with pytest.raises(ValueError):
            MultigradedRing(gf101, ["t", "x"], grading=[[1, 1]])

    def test_positivity_required(self, gf101):
        # no row combination makes both weights positive
        with pytest.raises(ValueError):
            MultigradedRing(gf101, ["x", "y"], grading=[[1, -1]])

    def test_nonstandard_positive_grading_accepted(self, gf101):
        r = MultigradedRing(gf101, ["x", "y"], grading=[[2, -1], [-1, 1]])
        assert r.parse("x*y").multidegree() == Multidegree((1, 0))


class TestArithmetic:
    def test_difference_of_squares(self, ring):
        x0, x1 = ring.var("x0"), ring.var("x1")
        assert (x0 + x1) * (x0 - x1) == x0 * x0 - x1 * x1

    def test_additive_inverse(self, ring):
        f = ring.parse("3*x0*y1 + x1^2")
        assert (f + (-f)).is_zero()

    def test_freshman_dream_gf3(self):
        r = make_product_projective([1, 1], FieldTower(3)).ring
        x0, x1 = r.var("x0"), r.var("x1")
        assert (x0 + x1) ** 3 == x0 ** 3 + x1 ** 3

    def test_ring_mismatch(self, ring, gf101):
        other = make_product_projective([2], gf101).ring
        with pytest.raises(RingMismatchError):
            ring.var("x0") + other.var("x0")

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
    def test_ring_axioms_random(self, s1, s2, s3):
        tw = FieldTower(101)
        r = make_product_projective([1, 1], tw).ring
        f = random_poly(r, Multidegree((1, 1)), seeded(s1))
        g = random_poly(r, Multidegree((2, 0)), seeded(s2))
        h = random_poly(r, Multidegree((0, 1)), seeded(s3))
        assert (f + g) + h == f + (g + h)
        assert f * (g + h) == f * g + f * h
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f


class TestMultidegree:
    def test_bidegree_of_product(self, ring):
        assert ring.parse("x0*y0").multidegree() == Multidegree((1, 1))

    def test_single_variable(self, ring):
        assert ring.var("x0").multidegree() == Multidegree((1, 0))

    def test_inhomogeneous_error_carries_monomials(self, ring):
        with pytest.raises(InhomogeneousError) as exc:
            ring.parse("x0*y0 + x1").multidegree()
        assert exc.value.monomials is not None
        assert len(exc.value.monomials) == 2

    def test_zero_has_no_multidegree(self, ring):
        with pytest.raises(InhomogeneousError):
            multidegree(ring.zero())

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 10 ** 6), st.integers(0, 2), st.integers(0, 2),
           st.integers(0, 2), st.integers(0, 2))
    def test_additive_under_product(self, seed, a, b, c, d):
        tw = FieldTower(101)
        r = make_product_projective([1, 1], tw).ring
        if (a, b) == (0, 0) or (c, d) == (0, 0):
            return
        rng = seeded(seed)
        f = random_poly(r, Multidegree((a, b)), rng)
        g = random_poly(r, Multidegree((c, d)), rng)
        assert (f * g).multidegree() == Multidegree((a + c, b + d))


class TestMonomialsOfDegree:
    def test_bidegree_one_one(self, ring):
        got = {str(m) for m in monomials_of_degree(ring, Multidegree((1, 1)))}
        assert got == {"x0*y0", "x0*y1", "x1*y0", "x1*y1"}

    def test_degree_zero(self, ring):
        assert [str(m) for m in monomials_of_degree(ring, Multidegree((0, 0)))] == ["1"]

    def test_non_effective(self, ring):
        assert monomials_of_degree(ring, Multidegree((-1, 0))) == []

    def test_counts_match_binomials(self, gf101):
        r = make_product_projective([1, 2], gf101).ring
        for a in range(4):
            for b in range(4):
                got = len(monomials_of_degree(r, Multidegree((a, b))))
                assert got == math.comb(a + 1, a) * math.comb(b + 2, b)

    def test_listed_in_monomial_order(self, ring):
        monos = monomials_of_degree(ring, Multidegree((2, 1)))
        keys = [ring.okey(m.leading_exponent()) for m in monos]
        assert keys == sorted(keys, reverse=True)


class TestDegreeLeq:
    def test_examples(self, ring):
        assert degree_leq(Multidegree((1, 0)), Multidegree((1, 1)), ring)
        assert not degree_leq(Multidegree((1, 0)), Multidegree((0, 1)), ring)
        assert degree_leq(Multidegree((2, 2)), Multidegree((2, 2)), ring)

    def test_partial_order_on_box(self, ring):
        box = [Multidegree((a, b)) for a in range(3) for b in range(3)]
        for l1 in box:
            assert degree_leq(l1, l1, ring)
            for l2 in box:
                if degree_leq(l1, l2, ring) and degree_leq(l2, l1, ring):
                    assert l1 == l2
                for l3 in box:
                    if degree_leq(l1, l2, ring) and degree_leq(l2, l3, ring):
                        assert degree_leq(l1, l3, ring)


class TestPrinterParser:
    def test_canonical_examples(self, ring):
        for text in ["x0*y0 + x1*y1", "x0^2*x1", "2*x0 + 100*x1", "1", "x0*y1"]:
            assert str(ring.parse(text)) == text

    def test_parse_str_round_trip_random(self, ring):
        rng = seeded(31)
        for _ in range(25):
            f = random_poly(ring, Multidegree((2, 1)), rng)
            assert ring.parse(str(f)) == f

    def test_extension_coefficients(self, gf9):
        r = make_product_projective([1, 1], gf9).ring
        f = r.parse("(2*t+1)*x0*y0 + t*x1*y1")
        assert str(f) == "(2*t+1)*x0*y0 + t*x1*y1"
        assert r.parse(str(f)) == f

    def test_parse_errors(self, ring):
        for bad in ["x0 +", "q7", "x0^", "(x0", ""]:
            with pytest.raises(ParseError):
                ring.parse(bad)

    def test_whitespace_insensitive(self, ring):
        assert ring.parse(" x0 * y0+x1\t*y1 ") == ring.parse("x0*y0 + x1*y1")
