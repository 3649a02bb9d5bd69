"""Dense exact polynomial arithmetic.

`Poly` is a univariate polynomial over Q stored as a coefficient list
(index = power).  `BiPoly` is a polynomial in z whose coefficients are
`Poly` objects in the parameter c, i.e. an element of Q[c][z].

Multiplication lifts coefficient vectors to a common integer denominator and
convolves machine-free Python ints; gcds run on primitive integer forms via
the subresultant PRS.  Everything is exact; nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Sequence

from .errors import NonExactDivisionError, PolynomialZeroDivisionError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _lcm(a: int, b: int) -> int:
    return a * b // int_gcd(a, b)


def _lift_common_denominator(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    """Represent a rational vector as (integer vector, positive denominator)."""
    den = 1
    for c in coeffs:
        den = _lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


class Poly:
    """Immutable dense polynomial over Q in one variable (conventionally z)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self._coeffs,))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> Poly:
        return cls(())

    @classmethod
    def one(cls) -> Poly:
        return cls((1,))

    @classmethod
    def identity(cls) -> Poly:
        """The polynomial z."""
        return cls((0, 1))

    @classmethod
    def constant(cls, q: Fraction | int) -> Poly:
        return cls((q,))

    @classmethod
    def monomial(cls, power: int, coeff: Fraction | int = 1) -> Poly:
        return cls([0] * power + [coeff])

    # -- structure ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            return _ZERO
        return self._coeffs[-1]

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._coeffs[0] if self._coeffs else _ZERO

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return _ZERO

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self._coeffs)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self._coeffs])

    def __sub__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return Poly.zero()
        na, da = _lift_common_denominator(self._coeffs)
        nb, db = _lift_common_denominator(other._coeffs)
        nums = _convolve(na, nb)
        den = da * db
        return Poly([Fraction(n, den) for n in nums])

    __rmul__ = __mul__

    def scale(self, q: Fraction | int) -> Poly:
        q = Fraction(q)
        return Poly([c * q for c in self._coeffs])

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def derivative(self) -> Poly:
        return Poly([i * c for i, c in enumerate(self._coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation; works for Fraction, int, and any ring element."""
        if not self._coeffs:
            return _ZERO if isinstance(x, (int, Fraction)) else x * 0
        acc = self._coeffs[-1] if isinstance(x, (int, Fraction)) else x * 0 + self._coeffs[-1]
        for c in reversed(self._coeffs[:-1]):
            acc = acc * x + c
        return acc

    def monic(self) -> Poly:
        if not self._coeffs:
            raise PolynomialZeroDivisionError("no monic form of the zero polynomial")
        lc = self._coeffs[-1]
        if lc == 1:
            return self
        return Poly([c / lc for c in self._coeffs])

    # -- division ----------------------------------------------------------

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise PolynomialZeroDivisionError("polynomial division by zero")
        if self.degree() < other.degree():
            return Poly.zero(), self
        rem = list(self._coeffs)
        div = other._coeffs
        dd = len(div) - 1
        lc = div[-1]
        quot = [_ZERO] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c:
                q = c / lc
                quot[k - dd] = q
                for i in range(dd + 1):
                    rem[k - dd + i] -= q * div[i]
        return Poly(quot), Poly(rem[:dd])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        """Quotient when the division is exact; raises NonExactDivisionError otherwise."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise NonExactDivisionError(
                f"remainder of degree {r.degree()} in supposedly exact division"
            )
        return q

    # -- integer forms, gcd, squarefree ------------------------------------

    def primitive_integer_form(self) -> tuple[Poly, Fraction]:
        """Write f = content * primitive with integer primitive, gcd 1, positive lc.

        Returns (primitive, content).  Rejects the zero polynomial.
        """
        if self.is_zero():
            raise ValueError("zero polynomial has no primitive form")
        nums, den = _lift_common_denominator(self._coeffs)
        g = 0
        for n in nums:
            g = int_gcd(g, abs(n))
        if nums[-1] < 0:
            g = -g
        return Poly([n // g for n in nums]), Fraction(g, den)

    def integer_coefficients(self) -> list[int]:
        """Coefficient list as ints; rejects non-integer coefficients."""
        out = []
        for c in self._coeffs:
            if c.denominator != 1:
                raise ValueError("polynomial has non-integer coefficients")
            out.append(c.numerator)
        return out

    def gcd(self, other: Poly) -> Poly:
        """Monic gcd over Q, computed on primitive integer forms."""
        if self.is_zero():
            return other.monic() if not other.is_zero() else Poly.zero()
        if other.is_zero():
            return self.monic()
        f = self.primitive_integer_form()[0].integer_coefficients()
        g = other.primitive_integer_form()[0].integer_coefficients()
        return Poly(_zz_gcd(f, g)).monic()

    def squarefree_part(self) -> Poly:
        """Monic product of the distinct irreducible factors."""
        if self.degree() < 1:
            raise ValueError("squarefree part needs degree >= 1")
        return self.exact_div(self.gcd(self.derivative())).monic()

    def squarefree_decomposition(self) -> list[tuple[Poly, int]]:
        """Yun decomposition: pairwise-coprime squarefree parts with multiplicities.

        The product of part^multiplicity equals self up to a nonzero constant.
        Parts are monic, listed by ascending multiplicity.
        """
        if self.is_zero():
            raise ValueError("zero polynomial has no squarefree decomposition")
        f = self.monic() if self.degree() >= 0 else self
        if f.degree() < 1:
            return []
        out: list[tuple[Poly, int]] = []
        df = f.derivative()
        a = f.gcd(df)
        b = f.exact_div(a)
        c = df.exact_div(a)
        d = c - b.derivative()
        i = 1
        while b.degree() > 0:
            p = b.gcd(d)
            if p.degree() > 0:
                out.append((p, i))
            b = b.exact_div(p)
            c = d.exact_div(p)
            d = c - b.derivative()
            i += 1
        return out


def _coerce(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.constant(value)
    return NotImplemented


def compose(outer: Poly, inner: Poly) -> Poly:
    """outer(inner(z)) by Horner over Poly coefficients."""
    acc = Poly.zero()
    for c in reversed(outer.coeffs):
        acc = acc * inner + Poly.constant(c)
    return acc


# -- integer-coefficient kernel -------------------------------------------


def _zz_degree(f: list[int]) -> int:
    return len(f) - 1


def _zz_normalize(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _zz_content(f: Sequence[int]) -> int:
    g = 0
    for c in f:
        g = int_gcd(g, abs(c))
    return g


def _zz_primitive(f: list[int]) -> list[int]:
    g = _zz_content(f)
    if g == 0:
        return []
    if f[-1] < 0:
        g = -g
    return [c // g for c in f]


def _zz_pseudo_rem(f: list[int], g: list[int]) -> list[int]:
    """prem(f, g): lc(g)^(deg f - deg g + 1) * f reduced mod g, all in Z[x]."""
    df, dg = _zz_degree(f), _zz_degree(g)
    lcg = g[-1]
    r = list(f)
    steps = df - dg + 1
    while r and _zz_degree(r) >= dg:
        lead = r[-1]
        shift = _zz_degree(r) - dg
        r = [lcg * c for c in r]
        for i, gc in enumerate(g):
            r[shift + i] -= lead * gc
        _zz_normalize(r)
        steps -= 1
    if steps > 0:
        m = lcg**steps
        r = [m * c for c in r]
    return r


def _zz_gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd in Z[x] via the subresultant PRS (controls coefficient growth)."""
    f = _zz_primitive(_zz_normalize(list(f)))
    g = _zz_primitive(_zz_normalize(list(g)))
    if not f:
        return g
    if not g:
        return f
    if _zz_degree(f) < _zz_degree(g):
        f, g = g, f
    h = 1
    s = 1
    while True:
        delta = _zz_degree(f) - _zz_degree(g)
        r = _zz_pseudo_rem(f, g)
        if not r:
            return _zz_primitive(g)
        if _zz_degree(r) == 0:
            return [1]
        f, g = g, [c // (s * h**delta) for c in r]
        s = f[-1]
        if delta > 0:
            h = s**delta // h ** (delta - 1)
    # unreachable


# -- bivariate layer -------------------------------------------------------


class BiPoly:
    """Polynomial in z with coefficients in Q[c], stored dense in z."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Poly] = ()):
        cs = [c if isinstance(c, Poly) else Poly.constant(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    def __reduce__(self):
        return (BiPoly, (self._coeffs,))

    @classmethod
    def zero(cls) -> BiPoly:
        return cls(())

    @classmethod
    def identity(cls) -> BiPoly:
        """The polynomial z."""
        return cls((Poly.zero(), Poly.one()))

    @classmethod
    def parameter(cls) -> BiPoly:
        """The polynomial c (constant in z)."""
        return cls((Poly.identity(),))

    @property
    def coeffs(self) -> tuple[Poly, ...]:
        return self._coeffs

    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"BiPoly({list(self._coeffs)!r})"

    def __str__(self) -> str:
        return format_bipoly(self)

    def __add__(self, other) -> BiPoly:
        other = _coerce_bipoly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly([-c for c in self._coeffs])

    def __sub__(self, other) -> BiPoly:
        other = _coerce_bipoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> BiPoly:
        other = _coerce_bipoly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> BiPoly:
        other = _coerce_bipoly(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return BiPoly.zero()
        out = [Poly.zero()] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a.is_zero():
                for j, b in enumerate(other._coeffs):
                    if not b.is_zero():
                        out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BiPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly((Poly.one(),))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def exact_div(self, other: BiPoly) -> BiPoly:
        """Exact long division in Q[c][z]; every coefficient step must divide exactly."""
        if other.is_zero():
            raise PolynomialZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return BiPoly.zero()
        if self.degree() < other.degree():
            raise NonExactDivisionError("dividend degree below divisor degree")
        rem = list(self._coeffs)
        div = other._coeffs
        dd = len(div) - 1
        lc = div[-1]
        quot = [Poly.zero()] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            q = c.exact_div(lc)
            quot[k - dd] = q
            for i in range(dd + 1):
                rem[k - dd + i] = rem[k - dd + i] - q * div[i]
        if any(not r.is_zero() for r in rem):
            raise NonExactDivisionError("nonzero remainder in bivariate division")
        return BiPoly(quot)

    def evaluate_c(self, c_value: Fraction | int) -> Poly:
        """Specialize the parameter c, leaving a univariate polynomial in z."""
        c_value = Fraction(c_value)
        return Poly([p(c_value) for p in self._coeffs])


def _coerce_bipoly(value) -> BiPoly:
    if isinstance(value, BiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return BiPoly((Poly.constant(value),))
    if isinstance(value, Poly):
        return BiPoly((value,))
    return NotImplemented


# -- canonical text form ---------------------------------------------------


def _format_power(var: str, power: int) -> str:
    if power == 0:
        return ""
    if power == 1:
        return var
    return f"{var}^{power}"


def _rational_term(q: Fraction, power: int, var: str) -> tuple[str, str]:
    """Render q * var^power as (joiner_sign, body); joiner '-' flips to magnitude."""
    if power == 0:
        if q.denominator == 1:
            return ("-", str(-q)) if q < 0 else ("+", str(q))
        # negative non-integer constants keep the parenthesized form
        return ("+", f"({q})") if q < 0 else ("+", str(q))
    pw = _format_power(var, power)
    if q == 1:
        return "+", pw
    if q == -1:
        return "-", pw
    if q.denominator == 1:
        return ("-", f"{-q}*{pw}") if q < 0 else ("+", f"{q}*{pw}")
    return ("+", f"({q})*{pw}") if q < 0 else ("+", f"{q}*{pw}")


def format_poly(p: Poly, var: str = "z") -> str:
    """Canonical text: descending powers, e.g. "z^6 + (-7/4)*z^3 + 1/2"."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for power in range(p.degree(), -1, -1):
        q = p.coefficient(power)
        if q == 0:
            continue
        sign, body = _rational_term(q, power, var)
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {'-' if sign == '-' else '+'} {body}")
    return "".join(parts)


def _bipoly_term(coeff: Poly, power: int, var: str, cvar: str) -> tuple[str, str]:
    if coeff.is_constant():
        return _rational_term(coeff.constant_value(), power, var)
    n_terms = sum(1 for q in coeff.coeffs if q != 0)
    inner = format_poly(coeff, cvar)
    pw = _format_power(var, power)
    if n_terms > 1:
        body = f"({inner})"
    elif inner.startswith("-"):
        return "-", f"{inner[1:]}*{pw}" if pw else inner[1:]
    else:
        body = inner
    return "+", f"{body}*{pw}" if pw else body


def format_bipoly(p: BiPoly, var: str = "z", cvar: str = "c") -> str:
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for power in range(p.degree(), -1, -1):
        coeff = p.coeffs[power]
        if coeff.is_zero():
            continue
        sign, body = _bipoly_term(coeff, power, var, cvar)
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {'-' if sign == '-' else '+'} {body}")
    return "".join(parts)


def parse_poly(text: str, var: str = "z") -> Poly:
    """Parse the canonical text form back into a Poly.

    Accepts optional whitespace, parenthesized signed rationals, '*' between
    coefficient and variable, and '^' powers.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return Poly.zero()
    # split into signed terms at parenthesis depth 0
    terms: list[tuple[int, str]] = []
    depth = 0
    sign = 1
    buf: list[str] = []
    for ch in s:
        if ch == "(":
            depth += 1
            buf.append(ch)
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
            buf.append(ch)
        elif ch in "+-" and depth == 0:
            if "".join(buf).strip():
                terms.append((sign, "".join(buf).strip()))
                sign = 1
            elif terms:
                raise ValueError(f"dangling sign in {text!r}")
            if ch == "-":
                sign = -sign
            buf = []
        else:
            buf.append(ch)
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    last = "".join(buf).strip()
    if not last:
        raise ValueError(f"trailing operator in {text!r}")
    terms.append((sign, last))

    coeffs: dict[int, Fraction] = {}
    for tsign, term in terms:
        coeff, power = _parse_term(term, var, text)
        coeffs[power] = coeffs.get(power, _ZERO) + tsign * coeff
    top = max(coeffs) if coeffs else 0
    return Poly([coeffs.get(i, _ZERO) for i in range(top + 1)])


def _parse_term(term: str, var: str, original: str) -> tuple[Fraction, int]:
    body = term.replace(" ", "")
    coeff = _ONE
    saw_coeff = False
    if body.startswith("("):
        close = body.index(")")
        inner = body[1:close]
        coeff = _parse_fraction(inner, original)
        saw_coeff = True
        body = body[close + 1 :]
        if body.startswith("*"):
            body = body[1:]
    if not body:
        return coeff, 0
    if body.startswith(var):
        rest = body[len(var) :]
    else:
        # leading bare number, possibly followed by * var
        stop = len(body)
        for i, ch in enumerate(body):
            if ch == "*" or ch == var:
                stop = i
                break
        num = body[:stop]
        if not num:
            raise ValueError(f"cannot parse term {term!r} in {original!r}")
        coeff = coeff * _parse_fraction(num, original) if saw_coeff else _parse_fraction(num, original)
        body = body[stop:]
        if body.startswith("*"):
            body = body[1:]
        if not body:
            return coeff, 0
        if not body.startswith(var):
            raise ValueError(f"unexpected variable in term {term!r} of {original!r}")
        rest = body[len(var) :]
    if not rest:
        return coeff, 1
    if not rest.startswith("^"):
        raise ValueError(f"cannot parse term {term!r} in {original!r}")
    try:
        power = int(rest[1:])
    except ValueError as exc:
        raise ValueError(f"bad exponent in term {term!r} of {original!r}") from exc
    if power < 0:
        raise ValueError(f"negative exponent in {original!r}")
    return coeff, power


def _parse_fraction(text: str, original: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {text!r} in {original!r}") from exc
