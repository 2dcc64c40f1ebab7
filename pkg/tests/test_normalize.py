"""Tests for src/normalize.py — canonical points, merging and cycle rendering."""

import pytest

from correspondence import pushforward_cycle
from kernel.fields import QQ, AlgebraicExtension
from kernel.upoly import UPoly
from normalize import merge_points, normalize_point, render_cycle


@pytest.fixture
def sqrt2():
    return AlgebraicExtension(QQ, "r", UPoly(QQ, [-2, 0, 1]))


def point(field, value, m=1):
    return normalize_point(QQ, ("z",), field, [value], m)


class TestNormalizePoint:
    def test_generator_gives_minimal_polynomial(self, sqrt2):
        p = point(sqrt2, sqrt2.gen)
        assert p.render() == "1*[z^2 - 2]"
        assert p.degree == 2

    def test_rational_coordinate_scales_multiplicity(self, sqrt2):
        p = point(sqrt2, sqrt2.gen ** 2)
        assert p.render() == "2*[z - 2]"
        assert p.degree == 1

    def test_conjugates_share_a_prime(self, sqrt2):
        assert point(sqrt2, sqrt2.gen).key == point(sqrt2, -sqrt2.gen).key


class TestMergePoints:
    def test_opposite_multiplicities_cancel(self, sqrt2):
        assert merge_points([point(sqrt2, sqrt2.gen), point(sqrt2, -sqrt2.gen, -1)]) == []

    def test_identical_primes_add(self, sqrt2):
        merged = merge_points([point(QQ, QQ(3)), point(sqrt2, sqrt2.gen), point(QQ, QQ(3), 2)])
        assert [p.render() for p in merged] == ["3*[z - 3]", "1*[z^2 - 2]"]

    def test_empty_cycle_renders_zero(self):
        assert render_cycle([]) == "0"


class TestCycles:
    def test_sorted_by_degree(self, corr, variety):
        alpha = corr("c", variety("P", ()), variety("A", ("y",)), (1, ["y^2 - 2"]), (1, ["y - 3"]))
        assert alpha.generic_fiber().render() == "1*[y - 3] + 1*[y^2 - 2]"

    def test_pushforward_along_square(self, corr, variety, poly):
        alpha = corr("a", variety("P", ()), variety("A", ("y",)), (1, ["y^2 - 2"]))
        pushed = pushforward_cycle(alpha.generic_fiber(), [poly(QQ, ("y",), "y^2")], variety("W", ("w",)))
        assert pushed.render() == "2*[w - 2]"
        assert pushed.degree() == 2
