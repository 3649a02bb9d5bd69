"""Arithmetic in Q[z]/(f), exact linear algebra over Q, and quadratic fields.

A `QuotientAlgebra` is the quotient by a monic irreducible modulus; its
elements house periodic points algebraically.  Internally elements live in a
rescaled basis w = L*z in which the modulus is monic with integer
coefficients, so products reduce with pure integer row operations and only
one gcd normalization per result.  The public representative is still a
polynomial in z of degree < D over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Sequence

from .errors import NotQuadraticIrrational, ParentMismatchError
from .polynomials import Poly, _convolve

_ZERO = Fraction(0)


class QuotientAlgebra:
    """Q[z]/(modulus) for a monic modulus of degree D >= 1.

    Irreducibility of the modulus is the caller's responsibility (obtain it
    from a factorization); arithmetic works regardless, field axioms do not.
    """

    __slots__ = ("modulus", "degree", "_scale", "_scale_powers", "_int_modulus")

    def __init__(self, modulus: Poly):
        if modulus.degree() < 1:
            raise ValueError("modulus must have degree >= 1")
        modulus = modulus.monic()
        object.__setattr__(self, "modulus", modulus)
        d = modulus.degree()
        object.__setattr__(self, "degree", d)
        scale = 1
        for c in modulus.coeffs:
            scale = scale * c.denominator // int_gcd(scale, c.denominator)
        powers = [1] * (d + 1)
        for k in range(1, d + 1):
            powers[k] = powers[k - 1] * scale
        # w = scale*z satisfies the monic integer polynomial below
        int_mod = [modulus.coefficient(k).numerator * (powers[d - k] // modulus.coefficient(k).denominator)
                   for k in range(d)] + [1]
        object.__setattr__(self, "_scale", scale)
        object.__setattr__(self, "_scale_powers", tuple(powers))
        object.__setattr__(self, "_int_modulus", tuple(int_mod))

    def __setattr__(self, name, value):
        raise AttributeError("QuotientAlgebra is immutable")

    def __reduce__(self):
        return (QuotientAlgebra, (self.modulus,))

    def __eq__(self, other) -> bool:
        return isinstance(other, QuotientAlgebra) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(self.modulus)

    def __repr__(self) -> str:
        return f"QuotientAlgebra({self.modulus!r})"

    # -- element construction ------------------------------------------------

    def element(self, rep: Poly | Fraction | int) -> AlgElement:
        """Class of a polynomial (reduced mod the modulus) or of a rational."""
        if isinstance(rep, (Fraction, int)):
            rep = Poly.constant(rep)
        if rep.degree() >= self.degree:
            rep = rep % self.modulus
        coeffs = rep.coeffs
        den = 1
        for k, c in enumerate(coeffs):
            q = c.denominator * self._scale_powers[k]
            den = den * q // int_gcd(den, q)
        nums = [0] * self.degree
        for k, c in enumerate(coeffs):
            nums[k] = c.numerator * (den // (c.denominator * self._scale_powers[k]))
        return AlgElement(self, *_normalize(nums, den))

    def zero(self) -> AlgElement:
        return AlgElement(self, (0,) * self.degree, 1)

    def one(self) -> AlgElement:
        return self.element(1)

    def generator(self) -> AlgElement:
        """The class of z itself."""
        return self.element(Poly.identity())

    def _reduce(self, nums: list[int], den: int) -> AlgElement:
        """Reduce a raw w-basis integer vector of any length mod the modulus."""
        g = self._int_modulus
        d = self.degree
        for k in range(len(nums) - 1, d - 1, -1):
            c = nums[k]
            if c:
                nums[k] = 0
                for i in range(d):
                    nums[k - d + i] -= c * g[i]
        return AlgElement(self, *_normalize(nums[:d] + [0] * (d - len(nums)), den))


def _normalize(nums: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    g = abs(den)
    for n in nums:
        g = int_gcd(g, n)
        if g == 1:
            break
    if g == 0:
        return tuple(nums), 1
    if den < 0:
        g = -g
    return tuple(n // g for n in nums), den // g


class AlgElement:
    """Element of a QuotientAlgebra; immutable, exact, hashable."""

    __slots__ = ("parent", "_nums", "_den")

    def __init__(self, parent: QuotientAlgebra, nums: tuple[int, ...], den: int):
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "_nums", nums)
        object.__setattr__(self, "_den", den)

    def __setattr__(self, name, value):
        raise AttributeError("AlgElement is immutable")

    def __reduce__(self):
        return (AlgElement, (self.parent, self._nums, self._den))

    # -- views ---------------------------------------------------------------

    @property
    def representative(self) -> Poly:
        """Representative polynomial in z of degree < D."""
        sp = self.parent._scale_powers
        return Poly([Fraction(n * sp[k], self._den) for k, n in enumerate(self._nums)])

    def coordinates(self) -> list[Fraction]:
        """Coordinates in the internal basis; a Q-vector space view for linear algebra."""
        return [Fraction(n, self._den) for n in self._nums]

    def is_rational(self) -> bool:
        return not any(self._nums[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self._nums[0], self._den)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgElement):
            return (
                self.parent == other.parent
                and self._nums == other._nums
                and self._den == other._den
            )
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_rational() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._nums, self._den))

    def __repr__(self) -> str:
        return f"AlgElement({self.representative!s})"

    # -- arithmetic ------------------------------------------------------------

    def _check_parent(self, other: AlgElement) -> None:
        if self.parent is not other.parent and self.parent != other.parent:
            raise ParentMismatchError("elements belong to different algebras")

    def __add__(self, other) -> AlgElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_parent(other)
        da, db = self._den, other._den
        g = int_gcd(da, db)
        ma, mb = db // g, da // g
        nums = [a * ma + b * mb for a, b in zip(self._nums, other._nums)]
        return AlgElement(self.parent, *_normalize(nums, da * ma))

    __radd__ = __add__

    def __neg__(self) -> AlgElement:
        return AlgElement(self.parent, tuple(-n for n in self._nums), self._den)

    def __sub__(self, other) -> AlgElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> AlgElement:
        return (-self) + other

    def __mul__(self, other) -> AlgElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_parent(other)
        if not any(self._nums) or not any(other._nums):
            return self.parent.zero()
        nums = _convolve(self._nums, other._nums)
        return self.parent._reduce(nums, self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> AlgElement:
        if n < 0:
            raise ValueError("negative powers are not defined in the algebra")
        result = self.parent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def _coerce(self, other) -> "AlgElement":
        if isinstance(other, AlgElement):
            return other
        if isinstance(other, (int, Fraction)):
            return self.parent.element(other)
        return NotImplemented


def alg_mul(x: AlgElement, y: AlgElement) -> AlgElement:
    """Product in the shared parent algebra (ParentMismatchError otherwise)."""
    return x * y


def apply_phi(x: AlgElement, d: int, c: Fraction) -> AlgElement:
    """Image of x under z -> z^d + c, reduced in the algebra."""
    if d < 2:
        raise ValueError("map degree must be >= 2")
    return x**d + c


# -- exact linear algebra ----------------------------------------------------


class _RationalRowSpace:
    """Incremental row-reduced span of Q-vectors; exact, deterministic."""

    def __init__(self, dimension: int):
        self.dimension = dimension
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def _reduce(self, vec: list[Fraction]) -> list[Fraction]:
        for row, piv in zip(self.rows, self.pivots):
            c = vec[piv]
            if c:
                vec = [a - c * b for a, b in zip(vec, row)]
        return vec

    def add(self, vec: Sequence[Fraction]) -> bool:
        """Insert a vector; True if it enlarged the span."""
        red = self._reduce(list(vec))
        piv = next((i for i, c in enumerate(red) if c), None)
        if piv is None:
            return False
        inv = red[piv]
        red = [c / inv for c in red]
        self.rows.append(red)
        self.pivots.append(piv)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def minimal_polynomial(x: AlgElement) -> Poly:
    """Monic polynomial of least degree vanishing at x.

    Found as the first linear dependency among 1, x, x^2, ... by exact
    Gaussian elimination; the degree divides the algebra degree when the
    modulus is irreducible.
    """
    d = x.parent.degree
    rows: list[tuple[list[Fraction], list[Fraction]]] = []
    power = x.parent.one()
    for m in range(d + 1):
        vec = power.coordinates()
        combo = [_ZERO] * (d + 2)
        combo[m] = Fraction(1)
        # reduce (vec, combo) against stored reduced rows
        for row_vec, row_combo in rows:
            piv = next(i for i, c in enumerate(row_vec) if c)
            c = vec[piv]
            if c:
                vec = [a - c * b for a, b in zip(vec, row_vec)]
                combo = [a - c * b for a, b in zip(combo, row_combo)]
        piv = next((i for i, c in enumerate(vec) if c), None)
        if piv is None:
            # combo encodes sum combo_k x^k = 0 with combo_m = 1
            return Poly(combo[: m + 1])
        inv = vec[piv]
        rows.append(([c / inv for c in vec], [c / inv for c in combo]))
        power = power * x
    raise AssertionError("no dependency among D+1 powers; broken algebra")


def subfield_degree(generators: Sequence[AlgElement]) -> int:
    """Degree over Q of the subfield generated by the given elements.

    Computed as the Q-dimension of the unital subalgebra spanned by all
    monomials in the generators (a finite-dimensional domain inside a field
    is the subfield itself).  Exact, deterministic, and polynomial time.
    """
    if not generators:
        raise ValueError("need at least one generator")
    parent = generators[0].parent
    for g in generators[1:]:
        if g.parent is not parent and g.parent != parent:
            raise ParentMismatchError("generators belong to different algebras")
    space = _RationalRowSpace(parent.degree)
    one = parent.one()
    space.add(one.coordinates())
    queue = [one]
    while queue:
        v = queue.pop(0)
        for g in generators:
            w = v * g
            if space.add(w.coordinates()):
                queue.append(w)
    return space.rank


def subfield_degree_sweep(generators: Sequence[AlgElement], max_lambda: int | None = None) -> int:
    """Subfield degree via the primitive-element sweep s = sum g_i * lam^(i-1).

    The sweep over lam in {0..D^2} with early exit mirrors the design the
    span-based `subfield_degree` replaces; kept as an independent cross-check.
    """
    if not generators:
        raise ValueError("need at least one generator")
    parent = generators[0].parent
    for g in generators[1:]:
        if g.parent is not parent and g.parent != parent:
            raise ParentMismatchError("generators belong to different algebras")
    d = parent.degree
    limit = d * d if max_lambda is None else max_lambda
    best = 1
    streak = 0
    for lam in range(limit + 1):
        s = parent.zero()
        scale = 1
        for g in generators:
            s = s + g * scale
            scale *= lam
        m = minimal_polynomial(s).degree()
        if m > best:
            best, streak = m, 1
        elif m == best:
            streak += 1
        else:
            streak = 0
        if best == d:
            break
        if d % best == 0 and streak >= d:
            break
    return best


# -- quadratic normal forms --------------------------------------------------


def _extract_square(n: int) -> tuple[int, int]:
    """n = t^2 * s with s squarefree (sign kept on s); returns (t, s)."""
    if n == 0:
        return 1, 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    t = 1
    s = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            t *= p ** (e // 2)
            if e % 2:
                s *= p
        p += 1 if p == 2 else 2
    s *= n
    return t, sign * s


@dataclass(frozen=True)
class QuadraticElement:
    """a + b*sqrt(disc) with squarefree disc; disc is None for plain rationals."""

    disc: int | None
    a: Fraction
    b: Fraction

    def __post_init__(self):
        if self.disc is None:
            if self.b != 0:
                raise ValueError("irrational part requires a discriminant")
        elif self.disc in (0, 1):
            raise ValueError("discriminant must be squarefree and not 0 or 1")

    @classmethod
    def rational(cls, q: Fraction | int) -> QuadraticElement:
        return cls(None, Fraction(q), _ZERO)

    def _joint_disc(self, other: QuadraticElement) -> int | None:
        if self.disc is None:
            return other.disc
        if other.disc is None or other.disc == self.disc:
            return self.disc
        raise ValueError("elements of different quadratic fields")

    def __add__(self, other) -> QuadraticElement:
        other = _coerce_quadratic(other)
        d = self._joint_disc(other)
        b = self.b + other.b
        return QuadraticElement(d if b else None, self.a + other.a, b)

    __radd__ = __add__

    def __neg__(self) -> QuadraticElement:
        return QuadraticElement(self.disc, -self.a, -self.b)

    def __sub__(self, other) -> QuadraticElement:
        return self + (-_coerce_quadratic(other))

    def __rsub__(self, other) -> QuadraticElement:
        return (-self) + other

    def __mul__(self, other) -> QuadraticElement:
        other = _coerce_quadratic(other)
        d = self._joint_disc(other)
        a = self.a * other.a + (self.b * other.b * d if d is not None else 0)
        b = self.a * other.b + self.b * other.a
        return QuadraticElement(d if b else None, a, b)

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticElement:
        return QuadraticElement(self.disc, self.a, -self.b) if self.b else self

    def is_rational(self) -> bool:
        return self.b == 0

    def apply_phi(self, d: int, c: Fraction) -> QuadraticElement:
        out = QuadraticElement.rational(1)
        for _ in range(d):
            out = out * self
        return out + QuadraticElement.rational(c)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.disc})"
        if self.b == 1:
            tail = root
        elif self.b == -1:
            tail = f"-{root}"
        else:
            tail = f"{self.b}*{root}"
        if self.a == 0:
            return tail
        if tail.startswith("-"):
            return f"{self.a} - {tail[1:]}"
        return f"{self.a} + {tail}"


def _coerce_quadratic(value) -> QuadraticElement:
    if isinstance(value, QuadraticElement):
        return value
    if isinstance(value, (int, Fraction)):
        return QuadraticElement.rational(value)
    raise TypeError(f"cannot mix QuadraticElement with {type(value)!r}")


def as_quadratic(f: Poly) -> tuple[QuadraticElement, QuadraticElement]:
    """Both roots of an irreducible rational quadratic, in a +- b*sqrt(D) form.

    Raises NotQuadraticIrrational when the discriminant is a rational square
    (i.e. the roots are rational).  The root with positive sqrt coefficient
    comes first.
    """
    if f.degree() != 2:
        raise ValueError("as_quadratic needs a degree-2 polynomial")
    a2, a1, a0 = f.coefficient(2), f.coefficient(1), f.coefficient(0)
    disc = a1 * a1 - 4 * a2 * a0
    if disc == 0:
        raise NotQuadraticIrrational("double rational root")
    t, s = _extract_square(disc.numerator * disc.denominator)
    if s == 1:
        raise NotQuadraticIrrational("discriminant is a perfect rational square")
    mid = -a1 / (2 * a2)
    rad = abs(Fraction(t, disc.denominator) / (2 * a2))
    return (
        QuadraticElement(s, mid, rad),
        QuadraticElement(s, mid, -rad),
    )


def realize_quadratic(base_factor: Poly, elements: Sequence[AlgElement]) -> list[QuadraticElement]:
    """Map elements of Q[z]/(quadratic factor) to explicit a + b*sqrt(D) values.

    The class of z goes to the root with positive sqrt coefficient.
    """
    root = as_quadratic(base_factor.monic())[0]
    out = []
    for el in elements:
        rep = el.representative
        value = QuadraticElement.rational(rep.coefficient(0)) + rep.coefficient(1) * root
        out.append(value)
    return out
