"""Periodic orbits of z^d + c extracted algebraically from dynatomic factors.

Each irreducible factor of the period-N dynatomic polynomial yields an orbit
of the class of z inside Q[z]/(factor).  The exact period is established by
direct iteration in the algebra, never inferred from root membership, so
degenerate parameters (where dynatomic roots have smaller period) are
detected and flagged rather than miscounted.  Factors whose roots lie on the
same Galois orbit of cycles are merged into a single record.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import NonPeriodicError
from .factorq import factor_over_q
from .maps import MapSpec, check_degree_guard, dynatomic_poly
from .numberfield import (
    AlgElement,
    QuadraticElement,
    QuotientAlgebra,
    apply_phi,
    minimal_polynomial,
    realize_quadratic,
)
from .polynomials import Poly, format_poly
from .rationals import format_rational


@dataclass(frozen=True)
class CycleRecord:
    """One Galois orbit of cycles: base factor, orbit, and its symmetric data.

    `orbit` lists the forward images of the class of z in Q[z]/(factor);
    `symmetric_functions` are e_1..e_k of the orbit (k = exact_period) and
    e_1 equals `trace`.  `merged_factors` lists every irreducible factor of
    the dynatomic polynomial whose roots lie on this orbit of cycles.
    """

    spec: MapSpec
    n_requested: int
    factor: Poly
    multiplicity: int
    field_degree: int
    exact_period: int
    orbit: tuple[AlgElement, ...]
    symmetric_functions: tuple[AlgElement, ...]
    trace: AlgElement
    merged_factors: tuple[Poly, ...]
    quadratic_points: tuple[QuadraticElement, ...] | None

    @property
    def degenerate(self) -> bool:
        return self.exact_period < self.n_requested

    @property
    def discriminant(self) -> int | None:
        """Squarefree discriminant of the quadratic field, when D = 2."""
        if self.quadratic_points is None:
            return None
        for point in self.quadratic_points:
            if point.disc is not None:
                return point.disc
        return None

    def rational_orbit(self) -> list[Fraction]:
        if self.field_degree != 1:
            raise ValueError("orbit is not rational")
        return [el.as_rational() for el in self.orbit]

    def point_strings(self) -> list[str]:
        if self.quadratic_points is not None:
            return [str(p) for p in self.quadratic_points]
        return [format_poly(el.representative) for el in self.orbit]

    def to_json_dict(self) -> dict:
        trace = (
            format_rational(self.trace.as_rational())
            if self.trace.is_rational()
            else format_poly(self.trace.representative)
        )
        return {
            "d": self.spec.d,
            "c": format_rational(self.spec.c),
            "N": self.n_requested,
            "exact_period": self.exact_period,
            "field_degree": self.field_degree,
            "discriminant": self.discriminant,
            "points": self.point_strings(),
            "trace": trace,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _orbit_of_generator(
    algebra: QuotientAlgebra, spec: MapSpec, max_steps: int
) -> tuple[list[AlgElement], int]:
    escape = abs(spec.c) + 1  # rational points beyond this grow forever
    start = algebra.generator()
    orbit = [start]
    x = start
    for step in range(1, max_steps + 1):
        if x.is_rational() and abs(x.as_rational()) > escape:
            raise NonPeriodicError(
                f"value {x.as_rational()} escapes; the root is not periodic"
            )
        x = apply_phi(x, spec.d, spec.c)
        if x == start:
            return orbit, step
        orbit.append(x)
    raise NonPeriodicError(
        f"no return to start within {max_steps} steps; "
        "factor roots are not periodic under this map"
    )


def _symmetric_functions(orbit: list[AlgElement], algebra: QuotientAlgebra) -> list[AlgElement]:
    """e_1..e_k of the orbit, from expanding prod (T - z_i) in the algebra."""
    coeffs = [algebra.one()]
    for z in orbit:
        nxt = [algebra.zero()] * (len(coeffs) + 1)
        for j, cj in enumerate(coeffs):
            nxt[j + 1] = nxt[j + 1] + cj
            nxt[j] = nxt[j] - cj * z
        coeffs = nxt
    k = len(orbit)
    return [coeffs[k - i] if (i % 2 == 0) else -coeffs[k - i] for i in range(1, k + 1)]


def _build_record(
    factor: Poly, multiplicity: int, spec: MapSpec, n_requested: int, max_steps: int
) -> CycleRecord:
    algebra = QuotientAlgebra(factor)
    orbit, period = _orbit_of_generator(algebra, spec, max_steps)
    if len(set(orbit)) != len(orbit):
        raise NonPeriodicError("orbit revisited an element before returning to start")
    sym = _symmetric_functions(orbit, algebra)
    d_field = algebra.degree
    quadratic: tuple[QuadraticElement, ...] | None = None
    if d_field == 1:
        quadratic = tuple(QuadraticElement.rational(el.as_rational()) for el in orbit)
    elif d_field == 2:
        quadratic = tuple(realize_quadratic(algebra.modulus, orbit))
    return CycleRecord(
        spec=spec,
        n_requested=n_requested,
        factor=algebra.modulus,
        multiplicity=multiplicity,
        field_degree=d_field,
        exact_period=period,
        orbit=tuple(orbit),
        symmetric_functions=tuple(sym),
        trace=sym[0],
        merged_factors=(algebra.modulus,),
        quadratic_points=quadratic,
    )


def orbit_in_algebra(factor: Poly, spec: MapSpec, max_steps: int = 100) -> CycleRecord:
    """Orbit of the class of z in Q[z]/(factor) under z -> z^d + c.

    The factor must be irreducible with periodic roots (callers obtain it
    from a dynatomic factorization); NonPeriodicError signals a misuse.
    """
    record = _build_record(factor, 1, spec, 0, max_steps)
    # standalone use: requested period is whatever the orbit shows
    return replace(record, n_requested=record.exact_period)


def _merge_records(records: list[CycleRecord]) -> list[CycleRecord]:
    """Merge records whose factors meet the same Galois orbit of cycles.

    Galois conjugation commutes with the map, so two factors belong to the
    same orbit of cycles exactly when one equals the minimal polynomial of
    some orbit element of the other (the orbit element itself is the explicit
    embedding certificate).  Minimal polynomials are only computed inside
    groups that share (field degree, exact period, multiplicity) and have
    more than one member.
    """
    groups: dict[tuple[int, int, int], list[CycleRecord]] = defaultdict(list)
    for rec in records:
        groups[(rec.field_degree, rec.exact_period, rec.multiplicity)].append(rec)

    kept_members: dict[int, list[Poly]] = {}
    for group in groups.values():
        if len(group) == 1:
            kept_members[id(group[0])] = [group[0].factor]
            continue
        owners: list[tuple[CycleRecord, set[Poly], list[Poly]]] = []
        for rec in group:
            minpolys = {minimal_polynomial(el) for el in rec.orbit}
            owner = next((o for o in owners if rec.factor in o[1]), None)
            if owner is None:
                owners.append((rec, minpolys, [rec.factor]))
            else:
                owner[1].update(minpolys)
                owner[2].append(rec.factor)
        for rec, _, members in owners:
            kept_members[id(rec)] = members

    out = []
    for rec in records:  # preserve canonical factor order
        if id(rec) in kept_members:
            members = sorted(kept_members[id(rec)], key=lambda p: tuple(reversed(p.coeffs)))
            out.append(replace(rec, merged_factors=tuple(members)))
    return out


def cycles_from_dynatomic(spec: MapSpec, n: int) -> list[CycleRecord]:
    """One CycleRecord per Galois orbit of cycles among the period-n dynatomic roots.

    Records with exact period < n are retained and flagged as degenerate so
    aggregate decisions can tell "no exact-period-n point exists" apart from
    "all of them behave".
    """
    if n < 1:
        raise ValueError(f"period must be >= 1, got {n}")
    check_degree_guard(spec.d, n)
    phi_n = dynatomic_poly(spec, n)
    factorization = factor_over_q(phi_n)
    records = [
        _build_record(factor.monic(), mult, spec, n, max_steps=n)
        for factor, mult in factorization.factors
    ]
    return _merge_records(records)


def rational_cycles(spec: MapSpec, n: int) -> list[CycleRecord]:
    """Cycles of exact period n whose points are rational."""
    return [
        rec
        for rec in cycles_from_dynatomic(spec, n)
        if rec.field_degree == 1 and rec.exact_period == n
    ]


def quadratic_cycles(spec: MapSpec, n: int) -> list[CycleRecord]:
    """Cycles of exact period n realized in a quadratic field."""
    return [
        rec
        for rec in cycles_from_dynatomic(spec, n)
        if rec.field_degree == 2 and rec.exact_period == n
    ]
