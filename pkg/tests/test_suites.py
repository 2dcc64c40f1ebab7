"""Tests for src/suites.py — instance builders and lemma families."""

import random

import pytest

from sympower.algebra import MAX_RANDOM_RANK
from suites import (
    FAMILIES,
    SUITES,
    SuiteResult,
    correspondence_chains,
    extensions,
    functoriality_instances,
    local_algebras,
    radicial_data,
    run_lemma_suites,
    split_algebras,
)


@pytest.fixture
def tiny(settings):
    counts = {family: 2 for family in FAMILIES}
    return {**settings, "suites": {"small": counts, "full": counts}}


class TestBuilders:
    def test_extensions_are_proper(self):
        for label, field, over in extensions():
            assert field.degree_over(over) >= 2, label

    def test_local_algebras_requested_count(self):
        algebras = local_algebras(random.Random(0), 20)
        assert len(algebras) == 20
        assert algebras[0][1].rank == 1

    def test_split_algebras_are_deterministic(self):
        first = [label for label, _ in split_algebras(random.Random("0:split"), 4)]
        again = [label for label, _ in split_algebras(random.Random("0:split"), 4)]
        assert first == again
        assert all(label.startswith("GF(") for label in first)

    def test_radicial_data_degrees(self):
        degrees = [v.generic_fiber().degree() for _, v in radicial_data()]
        assert degrees == [2, 3, 5, 4, 2, 3, 4]

    def test_random_local_algebras_stay_small(self):
        algebras = local_algebras(random.Random(0), 40)
        drawn = [algebra for label, algebra in algebras if label.startswith("random local")]
        assert drawn
        assert all(algebra.rank <= MAX_RANDOM_RANK for algebra in drawn)

    def test_chains_compose(self):
        chains = correspondence_chains(random.Random(0), 4, 1, 3)
        for _, chain in chains:
            assert [c.source.variables for c in chain] == [("x",), ("y",), ("z",)]
            assert all(a.target is b.source for a, b in zip(chain, chain[1:]))

    def test_functoriality_instances_per_chain(self):
        instances = functoriality_instances(random.Random(0), 2)
        assert [inst.plugin.name for inst in instances] == ["Ga", "Gm", "Mu(2)", "Ga", "Gm", "Mu(4)"]
        assert all(inst.other.target is inst.beta.target for inst in instances)


class TestSuiteResult:
    def test_failures_recorded(self):
        result = SuiteResult("reduction")
        result.record("a", True)
        result.record("b", False)
        assert (result.passed, result.failed, result.failures) == (1, 1, ["b"])
        assert result.status == "fail"


class TestRunLemmaSuites:
    def test_every_family_runs(self):
        assert set(SUITES) == set(FAMILIES)

    @pytest.mark.parametrize("seed", [0, 1])
    def test_small_run_passes(self, tiny, seed):
        results = run_lemma_suites(seed, "small", tiny)
        assert [r.family for r in results] == list(FAMILIES)
        assert all(r.failed == 0 for r in results), [r.failures for r in results]
        assert all(r.passed > 0 for r in results)

    def test_every_radicial_datum_checked(self):
        result = SUITES["radicial"](random.Random("0:radicial"), len(radicial_data()))
        assert result.passed == len(radicial_data()) and result.failed == 0, result.failures

    def test_same_seed_same_instances(self, tiny):
        first = run_lemma_suites(3, "small", tiny)
        again = run_lemma_suites(3, "small", tiny)
        assert [(r.family, r.passed) for r in first] == [(r.family, r.passed) for r in again]
