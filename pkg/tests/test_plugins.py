"""Tests for src/plugins.py — group laws, point checks and products."""

import pytest

from errors import NotAPluginPoint
from kernel.fields import QQ
from plugins import GA, GM, Product, RootsOfUnity, builtin


class TestBuiltins:
    def test_lookup(self):
        assert builtin("Ga") is GA
        assert builtin("Gm") is GM
        assert builtin("Mu", 3).n == 3

    def test_unknown_plugin(self):
        with pytest.raises(KeyError):
            builtin("Gx")

    def test_mu_needs_positive_order(self):
        with pytest.raises(ValueError):
            RootsOfUnity(0)

    def test_group_laws(self):
        assert GA.combine(QQ(2), QQ(3)) == 5
        assert GA.multiple(QQ(2), 3) == 6
        assert GM.combine(QQ(2), QQ(3)) == 6
        assert GM.multiple(QQ(2), 3) == 8
        assert GA.identity(QQ) == 0
        assert GM.identity(QQ) == 1


class TestPointChecks:
    def test_zero_is_not_multiplicative(self):
        with pytest.raises(NotAPluginPoint):
            GM.check_point(QQ(0))
        GA.check_point(QQ(0))

    def test_roots_of_unity(self, gaussian):
        RootsOfUnity(4).check_point(gaussian.gen)
        with pytest.raises(NotAPluginPoint):
            RootsOfUnity(2).check_point(gaussian.gen)


class TestProduct:
    def test_flattens_and_names(self):
        p = Product([GA, Product([GM, GA])])
        assert p.name == "Ga*Gm*Ga"
        assert p.arity == 3

    def test_needs_two_factors(self):
        with pytest.raises(ValueError):
            Product([GA])

    def test_componentwise_law(self):
        p = Product([GA, GM])
        assert p.combine((QQ(1), QQ(2)), (QQ(3), QQ(4))) == (QQ(4), QQ(8))
        assert p.render((QQ(4), QQ(8))) == "(4, 8)"

    def test_point_shape_checked(self):
        p = Product([GA, GM])
        with pytest.raises(NotAPluginPoint):
            p.check_point(QQ(1))
        with pytest.raises(NotAPluginPoint):
            p.check_point((QQ(1), QQ(0)))
