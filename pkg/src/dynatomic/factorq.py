"""Complete factorization of univariate polynomials over Q.

Pipeline: primitive integer form -> squarefree (Yun) decomposition -> modular
factorization (deterministic Berlekamp) -> quadratic Hensel lifting to a
Landau-Mignotte bound -> Zassenhaus subset recombination with trailing
coefficient pruning and exact trial division.  Output is fully exact and
deterministic; irreducible factors are primitive integer polynomials with
positive leading coefficient, listed by (degree, coefficients).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, isqrt, log2
from typing import Iterator

from .polynomials import Poly, _convolve, _zz_normalize, _zz_primitive

# -- arithmetic mod p on coefficient lists ----------------------------------


def _trunc_sym(f: list[int], m: int) -> list[int]:
    """Reduce coefficients into the symmetric range (-m/2, m/2]."""
    half = m // 2
    out = []
    for c in f:
        r = c % m
        if r > half:
            r -= m
        out.append(r)
    return _zz_normalize(out)


def _gf_trunc(f: list[int], p: int) -> list[int]:
    return _zz_normalize([c % p for c in f])


def _gf_mul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    return _gf_trunc(_convolve(f, g), p)


def _gf_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    if not g:
        raise ZeroDivisionError("gf division by zero")
    rem = [c % p for c in f]
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    quot = [0] * max(len(rem) - dg, 0)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k] % p
        if c:
            q = c * inv % p
            quot[k - dg] = q
            for i in range(dg + 1):
                rem[k - dg + i] = (rem[k - dg + i] - q * g[i]) % p
    return _zz_normalize(quot), _zz_normalize(rem[:dg])


def _gf_monic(f: list[int], p: int) -> list[int]:
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def _gf_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    a, b = _gf_trunc(f, p), _gf_trunc(g, p)
    while b:
        a, b = b, _gf_divmod(a, b, p)[1]
    return _gf_monic(a, p) if a else []


def _gf_gcdex(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    """Bezout pair (s, t) with s*f + t*g = 1 mod p; requires gcd(f, g) = 1."""
    r0, r1 = _gf_trunc(f, p), _gf_trunc(g, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_trunc(_sub(s0, _convolve(q, s1) if q and s1 else []), p)
        t0, t1 = t1, _gf_trunc(_sub(t0, _convolve(q, t1) if q and t1 else []), p)
    if len(r0) != 1:
        raise ValueError("gcdex arguments are not coprime")
    inv = pow(r0[0], -1, p)
    return _gf_trunc([c * inv for c in s0], p), _gf_trunc([c * inv for c in t0], p)


def _sub(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _zz_normalize(out)


def _add(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] += c
    return _zz_normalize(out)


def _gf_pow_mod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    b = _gf_divmod(base, f, p)[1]
    while e:
        if e & 1:
            result = _gf_divmod(_gf_mul(result, b, p), f, p)[1]
        e >>= 1
        if e:
            b = _gf_divmod(_gf_mul(b, b, p), f, p)[1]
    return result


def _gf_is_squarefree(f: list[int], p: int) -> bool:
    deriv = _gf_trunc([i * c for i, c in enumerate(f)][1:], p)
    if not deriv:
        return False
    return len(_gf_gcd(f, deriv, p)) == 1


# -- deterministic Berlekamp -------------------------------------------------


def _frobenius_rows(f: list[int], p: int) -> list[list[int]]:
    """Rows are coefficient vectors of z^(p*i) mod f, i = 0..deg f - 1."""
    n = len(f) - 1
    zp = _gf_pow_mod([0, 1], p, f, p)
    rows = [[1] + [0] * (n - 1)]
    cur = [1]
    for _ in range(1, n):
        cur = _gf_divmod(_gf_mul(cur, zp, p), f, p)[1]
        rows.append(list(cur) + [0] * (n - len(cur)))
    return rows


def _nullspace_dimension_and_basis(rows: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {v : v * M = 0} over F_p for the square matrix with given rows."""
    n = len(rows)
    # transpose of (M - I); right-nullspace of it equals the left-nullspace of M - I
    a = [[(rows[j][i] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    pivots: dict[int, int] = {}
    row = 0
    for col in range(n):
        sel = None
        for r in range(row, n):
            if a[r][col] % p:
                sel = r
                break
        if sel is None:
            continue
        a[row], a[sel] = a[sel], a[row]
        inv = pow(a[row][col], -1, p)
        a[row] = [c * inv % p for c in a[row]]
        for r in range(n):
            if r != row and a[r][col]:
                factor = a[r][col]
                a[r] = [(c - factor * d) % p for c, d in zip(a[r], a[row])]
        pivots[col] = row
        row += 1
    basis = []
    for col in range(n):
        if col in pivots:
            continue
        v = [0] * n
        v[col] = 1
        for pcol, prow in pivots.items():
            v[pcol] = (-a[prow][col]) % p
        basis.append(v)
    return basis


def _berlekamp_factor_count(f: list[int], p: int) -> tuple[int, list[list[int]]]:
    fm = _gf_monic(_gf_trunc(f, p), p)
    if len(fm) - 1 <= 1:
        return 1, []
    basis = _nullspace_dimension_and_basis(_frobenius_rows(fm, p), p)
    return len(basis), basis


def _berlekamp_split(f: list[int], p: int, basis: list[list[int]]) -> list[list[int]]:
    """Split monic squarefree f mod p into monic irreducible factors (sorted)."""
    fm = _gf_monic(_gf_trunc(f, p), p)
    r = len(basis)
    factors = [fm]
    if r > 1:
        for v in basis:
            vpoly = _zz_normalize(list(v))
            if len(vpoly) <= 1:
                continue  # constants never split anything
            updated: list[list[int]] = []
            for u in factors:
                if len(u) - 1 <= 1:
                    updated.append(u)
                    continue
                pieces: list[list[int]] = []
                rem = u
                for a in range(p):
                    if len(rem) - 1 < 1:
                        break
                    g = _gf_gcd(rem, _sub(vpoly, [a]), p)
                    if len(g) - 1 >= 1:
                        pieces.append(g)
                        rem = _gf_divmod(rem, g, p)[0]
                if len(rem) - 1 >= 1:
                    pieces.append(rem)
                updated.extend(pieces)
            factors = updated
            if len(factors) == r:
                break
    factors.sort(key=lambda u: (len(u), u))
    return factors


# -- Hensel lifting ----------------------------------------------------------


def _zz_divmod_monic(f: list[int], h: list[int]) -> tuple[list[int], list[int]]:
    """Long division by a monic integer polynomial; stays in Z[x]."""
    rem = list(f)
    dh = len(h) - 1
    quot = [0] * max(len(rem) - dh, 0)
    for k in range(len(rem) - 1, dh - 1, -1):
        c = rem[k]
        if c:
            quot[k - dh] = c
            for i in range(dh + 1):
                rem[k - dh + i] -= c * h[i]
    return _zz_normalize(quot), _zz_normalize(rem[:dh])


def _mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    return _convolve(a, b)


def _hensel_step(
    m: int,
    f: list[int],
    g: list[int],
    h: list[int],
    s: list[int],
    t: list[int],
) -> tuple[list[int], list[int], list[int], list[int]]:
    """One quadratic lift: from f = g*h, s*g + t*h = 1 (mod m) to the same mod m^2.

    Requires h monic; returns (G, H, S, T) with H monic.
    """
    mm = m * m
    e = _trunc_sym(_sub(f, _mul(g, h)), mm)
    q, r = _zz_divmod_monic(_mul(s, e), h)
    q, r = _trunc_sym(q, mm), _trunc_sym(r, mm)
    big_g = _trunc_sym(_add(g, _add(_mul(t, e), _mul(q, g))), mm)
    big_h = _trunc_sym(_add(h, r), mm)
    b = _trunc_sym(_sub(_add(_mul(s, big_g), _mul(t, big_h)), [1]), mm)
    c, d = _zz_divmod_monic(_mul(s, b), big_h)
    c, d = _trunc_sym(c, mm), _trunc_sym(d, mm)
    big_s = _trunc_sym(_sub(s, d), mm)
    big_t = _trunc_sym(_sub(t, _add(_mul(t, b), _mul(c, big_g))), mm)
    return big_g, big_h, big_s, big_t


def _hensel_lift(p: int, f: list[int], facs: list[list[int]], l: int) -> list[list[int]]:
    """Lift monic pairwise-coprime factors of f mod p to factors mod p^l.

    Returns monic integer polynomials F_i with f = lc(f) * prod F_i (mod p^l).
    """
    r = len(facs)
    lc = f[-1]
    pl = p**l
    if r == 1:
        inv = pow(lc % pl, -1, pl)
        return [_trunc_sym([c * inv for c in f], pl)]
    m = p
    k = r // 2
    d = int(ceil(log2(l))) if l > 1 else 1
    g: list[int] = [lc % p]
    for fac in facs[:k]:
        g = _gf_mul(g, fac, p)
    h: list[int] = [1]
    for fac in facs[k:]:
        h = _gf_mul(h, fac, p)
    s, t = _gf_gcdex(g, h, p)
    g, h = _trunc_sym(g, p), _trunc_sym(h, p)
    s, t = _trunc_sym(s, p), _trunc_sym(t, p)
    for _ in range(d):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift(p, g, facs[:k], l) + _hensel_lift(p, h, facs[k:], l)


# -- Zassenhaus --------------------------------------------------------------


def _primes() -> Iterator[int]:
    yield 2
    n = 3
    while True:
        if all(n % q for q in range(3, isqrt(n) + 1, 2)):
            yield n
        n += 2


def _zz_exact_div_or_none(f: list[int], g: list[int]) -> list[int] | None:
    """Quotient of f by g in Z[x] if exact, else None."""
    if len(f) < len(g):
        return None
    rem = list(f)
    dg = len(g) - 1
    lcg = g[-1]
    quot = [0] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if c:
            if c % lcg:
                return None
            q = c // lcg
            quot[k - dg] = q
            for i in range(dg + 1):
                rem[k - dg + i] -= q * g[i]
    if any(rem[:dg]):
        return None
    return quot


def _mignotte_bound(f: list[int]) -> int:
    n = len(f) - 1
    a = max(abs(c) for c in f)
    s = isqrt(n + 1)
    if s * s < n + 1:
        s += 1
    return s * (1 << n) * a * abs(f[-1])


def _select_prime(f: list[int]) -> tuple[int, list[list[int]]] | None:
    """First 5 usable primes, keep the one with fewest modular factors.

    Returns None as soon as some reduction proves f irreducible over Z.
    """
    lc = f[-1]
    candidates: list[tuple[int, int, list[list[int]]]] = []
    for p in _primes():
        if lc % p == 0:
            continue
        fp = _gf_trunc(f, p)
        if len(fp) != len(f) or not _gf_is_squarefree(fp, p):
            continue
        n_factors, basis = _berlekamp_factor_count(fp, p)
        if n_factors == 1:
            return None
        candidates.append((n_factors, p, basis))
        if len(candidates) == 5:
            break
    best = min(candidates, key=lambda item: (item[0], item[1]))
    return best[1], _berlekamp_split(f, best[1], best[2])


def _zz_factor_squarefree(f: list[int]) -> list[list[int]]:
    """Irreducible factors of a primitive squarefree integer polynomial, lc > 0."""
    n = len(f) - 1
    if n == 1:
        return [list(f)]
    if f[0] == 0:
        # squarefree, so z divides exactly once
        return sorted([[0, 1]] + _zz_factor_squarefree(f[1:]), key=lambda u: (len(u), u))
    selected = _select_prime(f)
    if selected is None:
        return [list(f)]
    p, modular = selected
    bound = _mignotte_bound(f)
    l = 1
    pl = p
    while pl <= 2 * bound:
        pl *= p
        l += 1
    lifted = _hensel_lift(p, f, modular, l)

    factors: list[list[int]] = []
    rest = list(f)
    indices = list(range(len(lifted)))
    s = 1
    while 2 * s <= len(indices):
        found = False
        b = rest[-1]
        tc = rest[0]
        for subset in combinations(indices, s):
            if b == 1:
                q = b
                for i in subset:
                    q = q * lifted[i][0] % pl
                q = q - pl if q > pl // 2 else q
                if q and tc % q:
                    continue
            cand = [b]
            for i in subset:
                cand = _mul(cand, lifted[i])
            cand = _zz_primitive(_trunc_sym(cand, pl))
            if cand and cand[0] and tc % cand[0]:
                continue
            quot = _zz_exact_div_or_none(rest, cand)
            if quot is not None:
                factors.append(cand)
                rest = _zz_primitive(quot)
                indices = [i for i in indices if i not in subset]
                found = True
                break
        if not found:
            s += 1
    if len(rest) - 1 >= 1:
        factors.append(rest)
    factors.sort(key=lambda u: (len(u), list(reversed(u))))
    return factors


# -- public API --------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """content * prod(factor^multiplicity) reconstructs the input exactly.

    Factors are irreducible primitive integer polynomials with positive
    leading coefficient, in canonical (degree, descending-coefficient) order.
    """

    content: Fraction
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        out = Poly.constant(self.content)
        for fac, mult in self.factors:
            out = out * fac**mult
        return out

    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def factor_degrees(self) -> list[int]:
        out: list[int] = []
        for fac, mult in self.factors:
            out.extend([fac.degree()] * mult)
        return sorted(out)


def _canonical_key(fac: Poly) -> tuple:
    return (fac.degree(), tuple(reversed(fac.coeffs)))


def factor_over_q(f: Poly) -> Factorization:
    """Factor a nonconstant rational polynomial into irreducibles over Q."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree() < 1:
        raise ValueError("cannot factor a constant polynomial")
    content = f.leading_coefficient()
    collected: list[tuple[Poly, int]] = []
    for part, mult in f.squarefree_decomposition():
        part_int, part_content = part.primitive_integer_form()
        content *= part_content**mult
        for fac in _zz_factor_squarefree(part_int.integer_coefficients()):
            collected.append((Poly(fac), mult))
    collected.sort(key=lambda item: _canonical_key(item[0]))
    return Factorization(content=Fraction(content), factors=tuple(collected))


def is_irreducible(f: Poly) -> bool:
    """True iff f is irreducible over Q (single factor, multiplicity 1)."""
    if f.is_zero() or f.degree() < 1:
        raise ValueError("irreducibility is about nonconstant polynomials")
    return factor_over_q(f).is_irreducible()


def rational_roots(f: Poly) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicities, ascending; [] if none."""
    if f.is_zero():
        raise ValueError("zero polynomial has every root")
    if f.degree() < 1:
        return []
    roots = []
    for fac, mult in factor_over_q(f).factors:
        if fac.degree() == 1:
            b, a = fac.coeffs
            roots.append((Fraction(-b, a), mult))
    roots.sort()
    return roots
