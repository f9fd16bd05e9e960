import itertools

import pytest

from coxdescent import (FieldTower, IdealHandle, Multidegree, MultigradedRing,
                        SaturationDirectionError, UnitIdealError,
                        ambient_dimension, dimension, height, ideal_equal,
                        intersect, make_product_projective, monomials_of_degree,
                        normal_form, reduced_gb, saturate)

from conftest import (coords_of, echelon, in_span, membership_oracle,
                      piece_monomial_multiples, random_poly, seeded)


@pytest.fixture(scope="module")
def amb(gf101):
    return make_product_projective([1, 1], gf101)


@pytest.fixture(scope="module")
def ring(amb):
    return amb.ring


def mk(ring, *texts):
    return IdealHandle(ring, [ring.parse(s) for s in texts])


class TestReducedGB:
    def test_coprime_leading_monomials(self, ring):
        gb = mk(ring, "x0*y0", "x1*y1").reduced_gb()
        assert {str(g) for g in gb} == {"x0*y0", "x1*y1"}

    def test_row_reduction(self, ring):
        gb = mk(ring, "x0", "x0 + y0").reduced_gb()
        assert [str(g) for g in gb] == ["x0", "y0"]

    def test_already_interreduced(self, ring):
        gb = mk(ring, "x0*y0^2", "x1^2*y1").reduced_gb()
        assert {str(g) for g in gb} == {"x0*y0^2", "x1^2*y1"}

    def test_zero_ideal(self, ring):
        assert mk(ring).reduced_gb() == []
        assert IdealHandle(ring, [ring.zero()]).reduced_gb() == []

    def test_memoized_and_stable(self, ring):
        ideal = mk(ring, "x0*y0 + x1*y1", "x0*y1")
        first = ideal.reduced_gb()
        assert ideal.reduced_gb() == first

    def test_monic_and_sorted(self, ring):
        gb = mk(ring, "3*x0*y0 + x1*y1", "5*x0*y1").reduced_gb()
        for g in gb:
            assert g.leading_coefficient() == ring.tower.one()
        keys = [ring.okey(g.leading_exponent()) for g in gb]
        assert keys == sorted(keys, reverse=True)

    def test_spolys_reduce_to_zero(self, ring):
        # post-hoc Buchberger criterion on a nontrivial ideal
        rng = seeded(5)
        polys = [random_poly(ring, Multidegree((1, 1)), rng),
                 random_poly(ring, Multidegree((2, 1)), rng),
                 random_poly(ring, Multidegree((1, 2)), rng)]
        ideal = IdealHandle(ring, polys)
        gb = ideal.reduced_gb()
        for f, g in itertools.combinations(gb, 2):
            ef, eg = f.leading_exponent(), g.leading_exponent()
            lcm = tuple(max(a, b) for a, b in zip(ef, eg))
            mf = ring.monomial(tuple(l - a for l, a in zip(lcm, ef)))
            mg = ring.monomial(tuple(l - a for l, a in zip(lcm, eg)))
            spoly = mf * f - mg * g
            assert ideal.normal_form(spoly).is_zero()

    def test_gens_reduce_to_zero(self, ring):
        rng = seeded(11)
        polys = [random_poly(ring, Multidegree((2, 2)), rng) for _ in range(3)]
        ideal = IdealHandle(ring, polys)
        for g in polys:
            assert ideal.normal_form(g).is_zero()


class TestNormalForm:
    def test_member(self, ring):
        assert normal_form(ring.parse("x0*y0 + x1*y1"),
                           mk(ring, "x0*y0", "x1*y1")).is_zero()

    def test_nonmember_is_fixed(self, ring):
        nf = normal_form(ring.parse("x0*x1"), mk(ring, "x0*y0", "x1*y1"))
        assert str(nf) == "x0*x1"

    def test_unit_ideal_constant(self, ring):
        assert str(normal_form(ring.one(), mk(ring, "x0"))) == "1"

    def test_idempotent(self, ring):
        rng = seeded(23)
        ideal = mk(ring, "x0*y0", "x1*y1 + x0*y1")
        for _ in range(10):
            f = random_poly(ring, Multidegree((2, 2)), rng)
            nf = ideal.normal_form(f)
            assert ideal.normal_form(nf) == nf


class TestIdealEqual:
    def test_same_span(self, ring):
        assert ideal_equal(mk(ring, "x0", "y0"), mk(ring, "x0 + y0", "y0"))

    def test_saturation_differs(self, amb, ring):
        ideal = mk(ring, "x0*y0", "x1*y1")
        sat = saturate(ideal, amb.irrelevant_ideal())
        assert not ideal_equal(ideal, sat)

    def test_zero_ideals(self, ring):
        assert ideal_equal(mk(ring), IdealHandle(ring, [ring.zero()]))


class TestSaturate:
    def test_zero_direction_rejected(self, ring):
        with pytest.raises(SaturationDirectionError):
            saturate(mk(ring, "x0"), mk(ring))

    def test_known_membership(self, amb, ring):
        sat = saturate(mk(ring, "x0*y0", "x1*y1"), amb.irrelevant_ideal())
        assert sat.contains(ring.parse("x0*x1"))

    def test_fat_point(self, amb, ring):
        sat = saturate(mk(ring, "x0", "x1*y0"), amb.irrelevant_ideal())
        assert [str(g) for g in sat.reduced_gb()] == ["x0", "y0"]

    def test_nonreduced_membership(self, amb, ring):
        ideal = mk(ring, "x0*y0^2", "x1^2*y1")
        sat = saturate(ideal, amb.irrelevant_ideal())
        f = ring.parse("x0^2*x1^2")
        assert sat.contains(f)
        assert not ideal.contains(f)

    def test_full_saturation_against_point_pair_oracle(self, amb, ring):
        # the saturation of (x0y0, x1y1) is the ideal of the two points
        # {x0=y1=0} and {x1=y0=0}, i.e. (x0,y1) intersect (x1,y0); check the
        # intersection degree by degree with plain linear algebra
        sat = saturate(mk(ring, "x0*y0", "x1*y1"), amb.irrelevant_ideal())
        assert {str(g) for g in sat.reduced_gb()} == {
            "x0*x1", "x0*y0", "x1*y1", "y0*y1"}
        a_gens = [ring.parse("x0"), ring.parse("y1")]
        b_gens = [ring.parse("x1"), ring.parse("y0")]
        sat_gens = list(sat.reduced_gb())
        for a in range(4):
            for b in range(4):
                deg = Multidegree((a, b))
                monos = monomials_of_degree(ring, deg)
                rows_a = [coords_of(m, monos) for m in
                          piece_monomial_multiples(a_gens, deg, ring)]
                rows_b = [coords_of(m, monos) for m in
                          piece_monomial_multiples(b_gens, deg, ring)]
                rows_s = [coords_of(m, monos) for m in
                          piece_monomial_multiples(sat_gens, deg, ring)]
                ea = echelon(ring.tower, rows_a)
                eb = echelon(ring.tower, rows_b)
                es = echelon(ring.tower, rows_s)
                both = [r for r in es
                        if in_span(ring.tower, r, ea) and in_span(ring.tower, r, eb)]
                # piece of the saturation = piece of the intersection
                assert len(both) == len(es)
                inter = [r for r in echelon(ring.tower, rows_a + rows_b)]
                dim_a, dim_b = len(ea), len(eb)
                dim_int = dim_a + dim_b - len(inter)
                assert len(es) == dim_int

    def test_contains_input_and_idempotent(self, amb, ring):
        rng = seeded(17)
        g = amb.irrelevant_ideal()
        for _ in range(5):
            ideal = IdealHandle(ring, [
                random_poly(ring, Multidegree((1, 1)), rng),
                random_poly(ring, Multidegree((2, 1)), rng)])
            sat = saturate(ideal, g)
            assert sat.contains_ideal(ideal)
            assert ideal_equal(saturate(sat, g), sat)

    def test_saturate_by_itself_is_unit(self, amb, ring):
        ideal = mk(ring, "x0*y0", "x1*y1")
        assert saturate(ideal, ideal).is_unit()


class TestIntersect:
    def test_principal_ideals(self, ring):
        got = intersect(mk(ring, "x0"), mk(ring, "y0"))
        assert [str(g) for g in got.reduced_gb()] == ["x0*y0"]

    def test_agrees_with_piecewise_oracle(self, ring):
        a = mk(ring, "x0", "y1")
        b = mk(ring, "x1", "y0")
        got = intersect(a, b)
        for a_, b_ in [(2, 1), (1, 1), (2, 2)]:
            deg = Multidegree((a_, b_))
            monos = monomials_of_degree(ring, deg)
            rows = [coords_of(m, monos) for m in
                    piece_monomial_multiples(list(got.reduced_gb()), deg, ring)]
            for m in monomials_of_degree(ring, deg):
                inside = (a.contains(m) and b.contains(m))
                assert in_span(ring.tower, coords_of(m, monos),
                               echelon(ring.tower, rows)) == inside


class TestDimensionHeight:
    def test_point_ideal(self, ring):
        assert dimension(mk(ring, "x0", "y0")) == 2

    def test_two_point_union_by_subset_oracle(self, ring):
        ideal = mk(ring, "x0*y0", "x1*y1")
        assert dimension(ideal) == 2
        # brute-force all 16 variable subsets against the LT supports
        supports = [set(i for i, e in enumerate(g.leading_exponent()) if e)
                    for g in ideal.reduced_gb()]
        best = 0
        for mask in range(16):
            subset = {i for i in range(4) if mask >> i & 1}
            if all(not s <= subset for s in supports):
                best = max(best, len(subset))
        assert best == 2

    def test_zero_ideal(self, ring):
        assert dimension(mk(ring)) == 4

    def test_unit_ideal_errors(self, ring):
        with pytest.raises(UnitIdealError):
            dimension(mk(ring, "1"))
        with pytest.raises(UnitIdealError):
            height(mk(ring, "x0", "x1", "1"))

    def test_heights(self, amb, ring):
        assert height(mk(ring, "x0*y0", "x1*y1")) == 2
        assert height(amb.irrelevant_ideal()) == 2
        assert height(mk(ring, "x0")) == 1

    def test_dimension_subset_oracle_random(self, gf101):
        ring = make_product_projective([1, 2], gf101).ring
        rng = seeded(41)
        for _ in range(5):
            ideal = IdealHandle(ring, [
                random_poly(ring, Multidegree((1, 1)), rng),
                random_poly(ring, Multidegree((0, 2)), rng)])
            supports = [set(i for i, e in enumerate(g.leading_exponent()) if e)
                        for g in ideal.reduced_gb()]
            n = len(ring.variables)
            best = 0
            for mask in range(1 << n):
                subset = {i for i in range(n) if mask >> i & 1}
                if all(not s <= subset for s in supports):
                    best = max(best, len(subset))
            assert dimension(ideal) == best

    def test_ambient_dimension_polynomial_ring(self, ring):
        assert ambient_dimension(ring) == 4


class TestMembershipOracle:
    def test_matches_linear_algebra(self, ring):
        rng = seeded(101)
        gens = [random_poly(ring, Multidegree((1, 1)), rng),
                random_poly(ring, Multidegree((2, 0)), rng)]
        ideal = IdealHandle(ring, gens)
        for deg in [Multidegree((2, 1)), Multidegree((2, 2)), Multidegree((3, 1))]:
            for _ in range(8):
                f = random_poly(ring, deg, rng)
                assert ideal.contains(f) == membership_oracle(ring, f, gens)
            # known members must agree too
            m = monomials_of_degree(ring, deg - gens[0].multidegree())
            if m:
                f = rng.choice(m) * gens[0]
                assert ideal.contains(f)
                assert membership_oracle(ring, f, gens)


class TestSaturatedByHigherHeightDirection:
    def test_low_height_ideal_saturated_against_high_height_direction(self):
        # ideals of height = #gens are saturated with respect to any
        # direction of strictly larger height in a polynomial ring
        tw = FieldTower(101)
        ring = MultigradedRing(tw, ["x", "y", "z", "w"], grading=[[1, 1, 1, 1]])
        g = IdealHandle(ring, list(ring.gens()))
        rng = seeded(59)
        done = 0
        while done < 8:
            s = rng.choice([1, 2])
            fs = [random_poly(ring, Multidegree((rng.choice([1, 2]),)), rng)
                  for _ in range(s)]
            ideal = IdealHandle(ring, fs)
            if height(ideal) != s:
                continue
            assert ideal_equal(saturate(ideal, g), ideal)
            done += 1
