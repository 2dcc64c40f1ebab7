"""Tests for src/correspondence.py and src/normalize.py — generic cycles, pullback, composition."""

import random

import pytest

from errors import ClosureUnavailable, InvalidComponent, NonIntegralComponent, TowerMismatch
from correspondence import Correspondence, associativity_check, compose, pullback_along_point
from kernel.fields import GF, QQ, AlgebraicExtension, RationalFunctionField
from kernel.upoly import UPoly
from normalize import cycles_equal
from suites import correspondence_chains

CHAINS = correspondence_chains(random.Random("associativity"), 6, 0, 3)


@pytest.fixture
def point(variety):
    return variety("P", ())


@pytest.fixture
def line_y(variety):
    return variety("A", ("y",))


@pytest.fixture
def line_z(variety):
    return variety("B", ("z",))


@pytest.fixture
def sqrt2(corr, point, line_y):
    return corr("a", point, line_y, (1, ["y^2 - 2"]))


@pytest.fixture
def square(corr, line_y, line_z):
    """Graph of z = y^2."""
    return corr("b", line_y, line_z, (1, ["z - y^2"]))


class TestGenericFiber:
    def test_irrational_point(self, sqrt2):
        cycle = sqrt2.generic_fiber()
        assert len(cycle.points) == 1
        p = cycle.points[0]
        assert p.multiplicity == 1
        assert p.degree_over(QQ) == 2
        assert p.coordinates[0] ** 2 == 2

    def test_rational_point_with_multiplicity(self, corr, point, line_y):
        alpha = corr("c", point, line_y, (3, ["y - 5"]))
        cycle = alpha.generic_fiber()
        assert [(p.multiplicity, str(p.coordinates[0])) for p in cycle.points] == [(3, "5")]
        assert alpha.degree() == 3

    def test_graph_has_degree_one(self, square):
        assert square.degree() == 1
        p = square.generic_fiber().points[0]
        assert str(p.coordinates[0]) == "y^2"

    def test_signed_sum(self, corr, point, line_y):
        alpha = corr("c", point, line_y, (2, ["y^2 - 2"]), (-1, ["y - 1"]))
        assert alpha.degree() == 3

    def test_explain(self, sqrt2):
        assert sqrt2.generic_fiber().explain() == ["1 × [y=a] over Q[a]/(a^2 - 2) (degree 2)"]

    def test_reducible_component_rejected(self, corr, point, line_y):
        alpha = corr("c", point, line_y, (1, ["y^2 - 1"]))
        with pytest.raises(NonIntegralComponent):
            alpha.generic_fiber()


class TestValidation:
    def test_finite_cover_is_valid(self, corr, variety, line_y):
        x_line = variety("X", ("x",))
        alpha = corr("c", x_line, line_y, (1, ["y^2 - x"]))
        statuses = {row.label: row.status for row in alpha.validate()}
        assert statuses["c component 1: finite over X"] == "pass"
        assert statuses["c component 1: generic fiber integral"] == "pass"
        alpha.ensure_valid()

    def test_vertical_line_is_not_finite(self, corr, variety, line_y):
        x_line = variety("X", ("x",))
        alpha = corr("c", x_line, line_y, (1, ["x"]))
        statuses = {row.label: row.status for row in alpha.validate()}
        assert statuses["c component 1: finite over X"] == "fail"
        with pytest.raises(InvalidComponent):
            alpha.ensure_valid()

    def test_split_fiber_fails_integrality(self, corr, point, line_y):
        alpha = corr("c", point, line_y, (1, ["y^2 - 1"]))
        statuses = {row.label: row.status for row in alpha.validate()}
        assert statuses["c component 1: generic fiber integral"] == "fail"

    def test_shared_coordinates_rejected(self, line_y, variety):
        other = variety("C", ("y",))
        with pytest.raises(ValueError):
            Correspondence("c", line_y, other, [])


class TestPullback:
    def test_graph_at_irrational_point(self, square):
        field = AlgebraicExtension(QQ, "r", UPoly(QQ, [-2, 0, 1]))
        pulled = pullback_along_point(square, field, [field.gen])
        assert [(str(p.coordinates[0]), p.length) for p in pulled] == [("2", 1)]

    def test_ramified_point_has_length_two(self, corr, line_y, line_z):
        beta = corr("b", line_y, line_z, (1, ["z^2 - y"]))
        pulled = pullback_along_point(beta, QQ, [QQ(0)])
        assert [(str(p.coordinates[0]), p.length) for p in pulled] == [("0", 2)]

    def test_square_splits_over_function_field(self, corr, line_y, line_z):
        beta = corr("b", line_y, line_z, (1, ["z^2 - y"]))
        k = RationalFunctionField(QQ, "t")
        pulled = pullback_along_point(beta, k, [k.gen ** 2])
        assert sorted(str(p.coordinates[0]) for p in pulled) == ["-t", "t"]
        assert all(p.length == 1 for p in pulled)


class TestComposition:
    def test_push_through_square(self, sqrt2, square):
        cycle = compose(sqrt2, square)
        assert cycle.render() == "2*[z - 2]"
        assert cycle.degree() == 2
        assert cycle.check_on_target()

    def test_degrees_multiply(self, corr, sqrt2, line_y, line_z):
        beta = corr("b", line_y, line_z, (1, ["z^2 - y"]))
        assert compose(sqrt2, beta).degree() == 4

    def test_presentations_normalize_alike(self, corr, point, line_y):
        doubled = corr("c", point, line_y, (2, ["y^2 - 2"]))
        summed = corr("d", point, line_y, (1, ["y^2 - 2"]), (1, ["y^2 - 2"]))
        assert cycles_equal(doubled.generic_fiber(), summed.generic_fiber())
        assert doubled.generic_fiber().render() == "2*[y^2 - 2]"

    def test_zero_multiplicity_drops_out(self, corr, point, line_y):
        alpha = corr("c", point, line_y, (1, ["y^2 - 2"]), (0, ["y - 7"]))
        assert alpha.generic_fiber().render() == "1*[y^2 - 2]"

    def test_associativity(self, corr, sqrt2, line_y, line_z, variety):
        line_w = variety("W", ("w",))
        beta = corr("b", line_y, line_z, (1, ["z^2 - y"]))
        gamma = corr("g", line_z, line_w, (1, ["w - z^2"]))
        assert associativity_check(sqrt2, beta, gamma)

    def test_associativity_needs_closure(self, corr, point, variety):
        plane = variety("U", ("u", "v"))
        line_z = variety("Z", ("z",))
        line_w = variety("W", ("w",))
        alpha = corr("a", point, plane, (1, ["u - 1", "v - 2"]))
        beta = corr("b", plane, line_z, (1, ["z - u - v"]))
        gamma = corr("g", line_z, line_w, (1, ["w - z"]))
        with pytest.raises(ClosureUnavailable):
            associativity_check(alpha, beta, gamma)

    @pytest.mark.parametrize("chain", [c for _, c in CHAINS], ids=[label for label, _ in CHAINS])
    def test_associativity_on_seeded_chains(self, chain):
        assert len(chain) == 3
        assert associativity_check(*chain)

    def test_sum_keeps_every_component(self, corr, sqrt2, point, line_y):
        other = corr("b", point, line_y, (2, ["y - 3"]))
        total = sqrt2 + other
        assert total.render() == "1*[y^2 - 2] + 2*[y - 3]"
        assert cycles_equal(total.generic_fiber(), sqrt2.generic_fiber() + other.generic_fiber())

    def test_sum_needs_matching_spaces(self, corr, sqrt2, point, line_z):
        with pytest.raises(TowerMismatch):
            sqrt2 + corr("b", point, line_z, (1, ["z - 1"]))

    def test_finite_field_composition(self, corr, variety):
        base = GF(3)
        p = variety("P", (), base=base)
        y = variety("A", ("y",), base=base)
        z = variety("B", ("z",), base=base)
        alpha = corr("a", p, y, (1, ["y^2 + 1"]))
        beta = corr("b", y, z, (1, ["z - y^2"]))
        assert compose(alpha, beta).render() == "2*[z + 1]"
