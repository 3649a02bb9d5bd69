"""Iterates of z -> z^d + c and dynatomic polynomials, exact and symbolic.

The period-N dynatomic polynomial is obtained by one exact division of
grouped products over the divisor lattice: numerator over divisors with
Mobius sign +1, denominator over sign -1.  Division is exact as a polynomial
identity in both z and c, so a nonzero remainder is a fatal bug, not a data
condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DegreeGuardError
from .polynomials import BiPoly, Poly
from .rationals import divisors, mobius

DEGREE_GUARD = 5000


@dataclass(frozen=True)
class MapSpec:
    """The unicritical map z -> z^d + c."""

    d: int
    c: Fraction

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"map degree must be >= 2, got {self.d}")
        if not isinstance(self.c, Fraction):
            object.__setattr__(self, "c", Fraction(self.c))

    def __str__(self) -> str:
        return f"z^{self.d} + {self.c}" if self.c >= 0 else f"z^{self.d} - {-self.c}"


@lru_cache(maxsize=None)
def _iterate_cached(d: int, c: Fraction, n: int) -> Poly:
    if n == 0:
        return Poly.identity()
    prev = _iterate_cached(d, c, n - 1)
    return prev**d + Poly.constant(c)


def iterate(spec: MapSpec, n: int) -> Poly:
    """The n-th iterate as a polynomial of degree d^n; the 0-th is z."""
    if n < 0:
        raise ValueError(f"iterate count must be >= 0, got {n}")
    return _iterate_cached(spec.d, spec.c, n)


@lru_cache(maxsize=None)
def _iterate_generic_cached(d: int, n: int) -> BiPoly:
    if n == 0:
        return BiPoly.identity()
    prev = _iterate_generic_cached(d, n - 1)
    return prev**d + BiPoly.parameter()


def iterate_generic(d: int, n: int) -> BiPoly:
    """The n-th iterate with the parameter c kept symbolic."""
    if d < 2:
        raise ValueError(f"map degree must be >= 2, got {d}")
    if n < 0:
        raise ValueError(f"iterate count must be >= 0, got {n}")
    return _iterate_generic_cached(d, n)


def dynatomic_degree(d: int, n: int) -> int:
    """Degree of the period-n dynatomic polynomial: sum mu(n/m) d^m over m | n."""
    if d < 2:
        raise ValueError(f"map degree must be >= 2, got {d}")
    if n < 1:
        raise ValueError(f"period must be >= 1, got {n}")
    return sum(mobius(n // m) * d**m for m in divisors(n))


def check_degree_guard(d: int, n: int) -> None:
    deg = dynatomic_degree(d, n)
    if deg > DEGREE_GUARD:
        raise DegreeGuardError(
            f"dynatomic degree {deg} for (d={d}, N={n}) exceeds the guard {DEGREE_GUARD}"
        )


def dynatomic_poly(spec: MapSpec, n: int) -> Poly:
    """Period-n dynatomic polynomial of z^d + c at a specific rational c."""
    check_degree_guard(spec.d, n)
    z = Poly.identity()
    numerator = Poly.one()
    denominator = Poly.one()
    for m in divisors(n):
        mu = mobius(n // m)
        if mu == 0:
            continue
        term = iterate(spec, m) - z
        if mu == 1:
            numerator = numerator * term
        else:
            denominator = denominator * term
    return numerator.exact_div(denominator)


def dynatomic_poly_generic(d: int, n: int) -> BiPoly:
    """Period-n dynatomic polynomial with c symbolic, in Q[c][z]."""
    check_degree_guard(d, n)
    z = BiPoly.identity()
    numerator = BiPoly((Poly.one(),))
    denominator = BiPoly((Poly.one(),))
    for m in divisors(n):
        mu = mobius(n // m)
        if mu == 0:
            continue
        term = iterate_generic(d, m) - z
        if mu == 1:
            numerator = numerator * term
        else:
            denominator = denominator * term
    return numerator.exact_div(denominator)


def verify_product_identity(spec: MapSpec, n: int) -> bool:
    """Check that the dynatomic polynomials over divisors of n multiply to phi^n(z) - z."""
    if n < 1:
        raise ValueError(f"period must be >= 1, got {n}")
    product = Poly.one()
    for m in divisors(n):
        product = product * dynatomic_poly(spec, m)
    return product == iterate(spec, n) - Poly.identity()
