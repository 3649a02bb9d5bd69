import random
from fractions import Fraction

import pytest

from dynatomic.errors import DegreeGuardError
from dynatomic.maps import (
    MapSpec,
    dynatomic_degree,
    dynatomic_poly,
    dynatomic_poly_generic,
    iterate,
    iterate_generic,
    verify_product_identity,
)
from dynatomic.polynomials import Poly, format_bipoly
from dynatomic.rationals import enumerate_rationals_by_height

Z = Poly.identity()


class TestIterate:
    def test_two_steps(self):
        assert iterate(MapSpec(2, Fraction(1)), 2) == Z**4 + 2 * Z**2 + 2

    def test_zero_steps_is_identity(self):
        assert iterate(MapSpec(3, Fraction(-7, 2)), 0) == Z

    def test_cubic_one_step(self):
        assert iterate(MapSpec(3, Fraction(-1)), 1) == Z**3 - 1

    def test_degree_grows_like_d_power_n(self):
        spec = MapSpec(3, Fraction(2, 5))
        for n in range(4):
            assert iterate(spec, n).degree() == 3**n

    def test_memoized_identical(self):
        spec = MapSpec(2, Fraction(1, 7))
        assert iterate(spec, 4) is iterate(MapSpec(2, Fraction(1, 7)), 4)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            iterate(MapSpec(2, Fraction(0)), -1)


class TestMapSpec:
    def test_rejects_degree_one(self):
        with pytest.raises(ValueError):
            MapSpec(1, Fraction(0))

    def test_coerces_c(self):
        assert MapSpec(2, 3).c == Fraction(3)


class TestDynatomicPoly:
    def test_period_one(self):
        assert dynatomic_poly(MapSpec(2, Fraction(5, 9)), 1) == Z**2 - Z + Fraction(5, 9)

    def test_period_two_long_division_oracle(self):
        spec = MapSpec(2, Fraction(-4, 7))
        numerator = iterate(spec, 2) - Z
        denominator = iterate(spec, 1) - Z
        assert dynatomic_poly(spec, 2) * denominator == numerator
        assert dynatomic_poly(spec, 2) == Z**2 + Z + Fraction(3, 7)

    def test_period_three_at_zero(self):
        assert dynatomic_poly(MapSpec(2, Fraction(0)), 3) == (Z**8 - Z).exact_div(Z**2 - Z)

    def test_monic(self):
        for n in (1, 2, 3, 4):
            assert dynatomic_poly(MapSpec(2, Fraction(3, 5)), n).leading_coefficient() == 1


class TestDynatomicGeneric:
    def test_period_two(self):
        assert format_bipoly(dynatomic_poly_generic(2, 2)) == "z^2 + z + (c + 1)"

    def test_period_one(self):
        assert format_bipoly(dynatomic_poly_generic(2, 1)) == "z^2 - z + c"

    def test_cubic_period_one(self):
        assert format_bipoly(dynatomic_poly_generic(3, 1)) == "z^3 - z + c"

    def test_specialization_commutes_50_random(self):
        rng = random.Random(61)
        pool = [(2, n) for n in range(1, 6)] + [(3, n) for n in range(1, 4)] + [(4, 1), (4, 2)]
        for _ in range(50):
            d, n = pool[rng.randrange(len(pool))]
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            assert dynatomic_poly_generic(d, n).evaluate_c(c) == dynatomic_poly(
                MapSpec(d, c), n
            )

    def test_generic_iterate_specializes(self):
        c = Fraction(-3, 4)
        assert iterate_generic(2, 3).evaluate_c(c) == iterate(MapSpec(2, c), 3)


class TestDynatomicDegree:
    @pytest.mark.parametrize(
        "d,n,expected", [(2, 1, 2), (2, 6, 54), (3, 2, 6), (2, 4, 12), (2, 11, 2046)]
    )
    def test_examples(self, d, n, expected):
        assert dynatomic_degree(d, n) == expected

    def test_degree_matches_constructed_polynomial(self):
        for d, n_max in ((2, 8), (3, 5), (4, 5)):
            for n in range(1, n_max + 1):
                got = dynatomic_poly(MapSpec(d, Fraction(0)), n).degree()
                assert got == dynatomic_degree(d, n), (d, n)

    def test_guard_refuses_oversized(self):
        with pytest.raises(DegreeGuardError):
            dynatomic_poly(MapSpec(3, Fraction(0)), 8)  # degree 6480
        with pytest.raises(DegreeGuardError):
            dynatomic_poly_generic(2, 13)


class TestProductIdentity:
    def test_single_factor(self):
        assert verify_product_identity(MapSpec(2, Fraction(1)), 1)

    def test_period_two_expansion(self):
        assert verify_product_identity(MapSpec(2, Fraction(-1)), 2)

    def test_six_cycle_parameter(self):
        assert verify_product_identity(MapSpec(2, Fraction(-71, 48)), 6)

    def test_battery_quadratic(self):
        cs = list(enumerate_rationals_by_height(10))
        rng = random.Random(101)
        sample = [cs[rng.randrange(len(cs))] for _ in range(8)]
        for c in sample:
            for n in range(1, 7):
                assert verify_product_identity(MapSpec(2, c), n), (c, n)

    def test_battery_cubic(self):
        rng = random.Random(103)
        cs = list(enumerate_rationals_by_height(10))
        sample = [cs[rng.randrange(len(cs))] for _ in range(4)]
        for c in sample:
            for n in range(1, 6):
                assert verify_product_identity(MapSpec(3, c), n), (c, n)
