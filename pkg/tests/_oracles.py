"""Independent test oracles.

These deliberately avoid the code paths they check: root clustering runs at
200+ bits through mpmath and candidate factors are validated by exact
division only, so a reducibility verdict is an exact certificate and an
irreducibility verdict exhausts every root subset.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

import mpmath

from dynatomic.errors import NonExactDivisionError
from dynatomic.polynomials import Poly

# 70 decimal digits ~ 230 bits
ORACLE_DPS = 70
_RECONSTRUCT_DENOMINATOR = 10**24


def mpf_to_fraction(x: mpmath.mpf) -> Fraction:
    """Exact rational value of an mpf (binary float of arbitrary precision)."""
    sign, man, exp, _ = x._mpf_
    if man == 0:
        return Fraction(0)
    value = Fraction(man) * (Fraction(2) ** exp)
    return -value if sign else value


def high_precision_roots(f: Poly) -> list[mpmath.mpc]:
    with mpmath.workdps(ORACLE_DPS):
        coeffs = [
            mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator)
            for c in reversed(f.coeffs)
        ]
        return list(mpmath.polyroots(coeffs, maxsteps=400, extraprec=240))


def _reconstruct_rational(value: mpmath.mpc) -> Fraction | None:
    with mpmath.workdps(ORACLE_DPS):
        if abs(mpmath.im(value)) > mpmath.mpf(10) ** (-ORACLE_DPS // 2):
            return None
        exact = mpf_to_fraction(mpmath.re(value))
    approx = exact.limit_denominator(_RECONSTRUCT_DENOMINATOR)
    if abs(approx - exact) > Fraction(1, 10 ** (ORACLE_DPS // 2)):
        return None
    return approx


def clustering_factor_candidates(f: Poly) -> list[Poly]:
    """All monic nontrivial factors of f found by root clustering + exact division."""
    n = f.degree()
    monic = f.monic()
    roots = high_precision_roots(monic)
    found = []
    for size in range(1, n // 2 + 1):
        for subset in combinations(range(n), size):
            coeffs = [mpmath.mpc(1)]
            with mpmath.workdps(ORACLE_DPS):
                for i in subset:
                    r = roots[i]
                    coeffs = [mpmath.mpc(0)] + coeffs
                    for j in range(len(coeffs) - 1):
                        coeffs[j] -= r * coeffs[j + 1]
            rational = [_reconstruct_rational(c) for c in coeffs]
            if any(c is None for c in rational):
                continue
            candidate = Poly(rational)  # type: ignore[arg-type]
            if candidate.degree() != size:
                continue
            try:
                monic.exact_div(candidate)
            except NonExactDivisionError:
                continue
            found.append(candidate)
    return found


def brute_force_irreducible(f: Poly) -> bool:
    """Exhaustive subset check; use only at small degree (<= 10 or so)."""
    if f.degree() < 1:
        raise ValueError("needs a nonconstant polynomial")
    if f.degree() == 1:
        return True
    return not clustering_factor_candidates(f)


def brute_force_rational_count(max_height: int) -> int:
    """Count reduced a/b with max(|a|, b) <= H by double loop."""
    total = 0
    for a in range(-max_height, max_height + 1):
        for b in range(1, max_height + 1):
            if gcd(abs(a), b) == 1 and max(abs(a), b) <= max_height:
                total += 1
    return total


def naive_gcd(f: Poly, g: Poly) -> Poly:
    """Monic Euclidean gcd straight over Q; independent of the subresultant path."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a
