"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Everything is exact arithmetic; every comparison is equality with zero
tolerance.  The expensive height sweeps are shared through a single corpus
run per session (parallel across available cores, deterministic output).
"""

import os

import pytest

from dynatomic.verify import CORPUS, ItemResult, run_corpus

CRITERIA = {
    1: (
        ("six-cycle",),
        "unique quadratic 6-cycle at c = -71/48 with the expected exact values",
    ),
    2: (
        ("reducible-at-minus-two",),
        "dynatomic polynomials at c = -2 reducible for N = 3..6",
    ),
    3: (
        ("mersenne-reducible", "mersenne-irreducible"),
        "c = 0 reducibility tracks whether 2^N - 1 is a Mersenne prime",
    ),
    4: (
        ("two-cycle-uniqueness",),
        "at most one 2-cycle for every h(c) <= 20, aggregate never fails",
    ),
    5: (
        ("period-three-holds",),
        "period-3 sweep over h(c) <= 10 reports zero failures",
    ),
    6: (
        ("period-five-probe",),
        "no quadratic 5-cycles where the period-5 verdict holds, h(c) <= 6",
    ),
    7: (
        ("product-identity",),
        "iterate factorization identity for d in (2, 3), n <= 6",
    ),
    8: (
        ("degree-formula",),
        "dynatomic degree equals the divisor sum for d in (2, 3, 4), N <= 6",
    ),
    9: (
        ("cross-consistency",),
        "methods never disagree; irreducibility forces a holding aggregate",
    ),
    10: (
        ("trace-rationality",),
        "holding quadratic cycles always have rational trace",
    ),
}


@pytest.fixture(scope="session")
def corpus() -> dict[str, ItemResult]:
    jobs = os.cpu_count() or 1
    results = run_corpus(jobs=jobs)
    assert len(results) == len(CORPUS)
    return {item.name: item for item in results}


def _evaluate(corpus, number):
    names, description = CRITERIA[number]
    items = [corpus[name] for name in names]
    passed = all(item.passed for item in items)
    details = [line for item in items for line in item.lines()]
    return passed, description, details


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_acceptance_criterion(corpus, capsys, number):
    passed, description, details = _evaluate(corpus, number)
    with capsys.disabled():
        status = "PASS" if passed else "FAIL"
        print(f"\nACCEPTANCE {number:2d} {status}: {description}")
    assert passed, "\n".join(details)
