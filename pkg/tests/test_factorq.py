import random
from fractions import Fraction

import pytest

from dynatomic.factorq import Factorization, factor_over_q, is_irreducible, rational_roots
from dynatomic.maps import MapSpec, dynatomic_poly
from dynatomic.polynomials import Poly
from _oracles import brute_force_irreducible, clustering_factor_candidates

Z = Poly.identity()


def make_irreducible(rng, max_degree=4):
    """Random irreducible polynomial from families with planted irreducibility."""
    kind = rng.randint(0, 2)
    if kind == 0:  # linear, always irreducible
        return Z * rng.randint(1, 5) + rng.randint(-9, 9)
    if kind == 1:  # quadratic with negative discriminant
        b = rng.randint(-4, 4)
        return Z**2 + b * Z + Poly.constant(b * b + rng.randint(1, 9))
    # Eisenstein at 2: z^k + 2*a*z + 2 with odd constant contribution controlled
    k = rng.randint(2, max_degree)
    return Z**k + 2 * rng.randint(-3, 3) * Z + 2


class TestFactorExamples:
    def test_difference_of_squares(self):
        fac = factor_over_q(Z**2 - 1)
        assert fac.content == 1
        assert fac.factors == ((Z - 1, 1), (Z + 1, 1))

    def test_third_dynatomic_at_zero_is_irreducible(self):
        f = Poly([1] * 7)  # the period-3 dynatomic polynomial at c = 0
        assert dynatomic_poly(MapSpec(2, Fraction(0)), 3) == f
        assert brute_force_irreducible(f)  # independent clustering oracle
        fac = factor_over_q(f)
        assert fac.is_irreducible()

    def test_third_dynatomic_at_minus_two_splits(self):
        f = dynatomic_poly(MapSpec(2, Fraction(-2)), 3)
        fac = factor_over_q(f)
        assert len(fac.factors) > 1
        assert fac.expand() == f
        # cross-check the found factors against the clustering oracle
        oracle_factors = {p for p in clustering_factor_candidates(f) if p.degree() == 3}
        got = {p.monic() for p, _ in fac.factors}
        assert got == oracle_factors
        assert got == {
            Z**3 - 3 * Z + 1,
            Z**3 + Z**2 - 2 * Z - 1,
        }

    def test_fourth_dynatomic_at_zero_reducible(self):
        f = dynatomic_poly(MapSpec(2, Fraction(0)), 4)
        assert not is_irreducible(f)

    def test_content_and_multiplicity(self):
        f = (2 * Z + 1) ** 2 * (Z - 3) * Fraction(5, 7)
        fac = factor_over_q(f)
        assert fac.expand() == f
        assert dict((p, m) for p, m in fac.factors) == {2 * Z + 1: 2, Z - 3: 1}

    def test_rejects_constants_and_zero(self):
        with pytest.raises(ValueError):
            factor_over_q(Poly.zero())
        with pytest.raises(ValueError):
            factor_over_q(Poly.constant(5))


class TestFactorProperties:
    def test_roundtrip_200_random_products(self):
        rng = random.Random(424)
        for _ in range(200):
            f = Poly.one()
            planted = []
            for _ in range(rng.randint(1, 3)):
                p = make_irreducible(rng)
                planted.append(p)
                f = f * p
            fac = factor_over_q(f)
            assert fac.expand() == f

    def test_output_factors_irreducible_by_oracle(self):
        rng = random.Random(99)
        for _ in range(40):
            f = Poly.one()
            for _ in range(rng.randint(1, 3)):
                f = f * make_irreducible(rng, max_degree=3)
            for p, _ in factor_over_q(f).factors:
                if p.degree() <= 8:
                    assert brute_force_irreducible(p)

    def test_merge_of_coprime_factorizations(self):
        rng = random.Random(7)
        for _ in range(40):
            f = make_irreducible(rng) * make_irreducible(rng)
            g = make_irreducible(rng)
            if f.gcd(g).degree() != 0:
                continue
            merged = factor_over_q(f * g)
            separate: dict[Poly, int] = {}
            for part in (factor_over_q(f), factor_over_q(g)):
                for p, m in part.factors:
                    separate[p] = separate.get(p, 0) + m
            assert dict(merged.factors) == separate

    def test_determinism(self):
        f = dynatomic_poly(MapSpec(2, Fraction(-2)), 4)
        assert factor_over_q(f) == factor_over_q(f)

    def test_canonical_order(self):
        fac = factor_over_q((Z - 2) * (Z + 1) * (Z**2 + 1))
        degrees = [p.degree() for p, _ in fac.factors]
        assert degrees == sorted(degrees)
        same_degree = [p for p, _ in fac.factors if p.degree() == 1]
        keys = [tuple(reversed(p.coeffs)) for p in same_degree]
        assert keys == sorted(keys)

    def test_big_denominator_factorization(self):
        # quadratic factors with denominator 48, same shape as the 6-cycle data
        f = (Z**2 + 2 * Z + Fraction(37, 48)) * (Z**2 + Z + Fraction(1, 48))
        fac = factor_over_q(f)
        assert fac.expand() == f
        assert [p.degree() for p, _ in fac.factors] == [2, 2]

    def test_splits_mod_every_prime_but_irreducible(self):
        # minimal polynomial of sqrt(2) + sqrt(3): reducible mod every prime,
        # so the recombination search actually has to work
        f = Z**4 - 10 * Z**2 + 1
        assert is_irreducible(f)
        assert brute_force_irreducible(f)

    def test_recombination_of_hard_quartics(self):
        f = (Z**4 - 10 * Z**2 + 1) * (Z**4 - 2)
        fac = factor_over_q(f)
        assert fac.expand() == f
        assert sorted(p.degree() for p, _ in fac.factors) == [4, 4]

    def test_nonmonic_factors(self):
        # cubic has no rational roots (checked +-1, +-1/3), quadratic has disc < 0
        f = (3 * Z**3 + 2 * Z + 1) * (2 * Z**2 + 7 * Z + 11)
        fac = factor_over_q(f)
        assert fac.expand() == f
        assert sorted(p.degree() for p, _ in fac.factors) == [2, 3]


class TestRationalRoots:
    def test_period_two_at_minus_one(self):
        assert rational_roots(Z**2 + Z) == [(Fraction(-1), 1), (Fraction(0), 1)]

    def test_negative_discriminant_has_none(self):
        assert rational_roots(Z**2 + Z + 2) == []

    def test_double_root(self):
        assert rational_roots((Z + Fraction(1, 2)) ** 2) == [(Fraction(-1, 2), 2)]

    def test_roots_actually_vanish(self):
        rng = random.Random(55)
        for _ in range(50):
            f = Poly.one()
            for _ in range(rng.randint(1, 4)):
                f = f * (rng.randint(1, 4) * Z + rng.randint(-6, 6))
            f = f * (Z**2 + 1)
            for root, mult in rational_roots(f):
                assert f(root) == 0
                assert mult >= 1

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            rational_roots(Poly.zero())


class TestIsIrreducible:
    def test_quadratic_without_roots(self):
        assert is_irreducible(Z**2 + Z + 1)

    def test_difference_of_squares(self):
        assert not is_irreducible(Z**2 - 1)

    def test_rejects_constants(self):
        with pytest.raises(ValueError):
            is_irreducible(Poly.constant(3))

    def test_repeated_factor_not_irreducible(self):
        assert not is_irreducible((Z + 1) ** 2)

    @pytest.mark.parametrize("n,expected", [(2, True), (3, True), (4, False), (5, True)])
    def test_dynatomic_at_zero_vs_mersenne(self, n, expected):
        f = dynatomic_poly(MapSpec(2, Fraction(0)), n)
        assert is_irreducible(f) is expected


class TestFactorization:
    def test_expand_and_degree_bookkeeping(self):
        f = dynatomic_poly(MapSpec(2, Fraction(-2)), 5)
        fac = factor_over_q(f)
        assert isinstance(fac, Factorization)
        assert sum(p.degree() * m for p, m in fac.factors) == f.degree()
        assert fac.factor_degrees() == [5, 10, 15]
