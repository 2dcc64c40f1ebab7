"""Tests for src/kernel/fields.py — tower arithmetic, coercion and descent."""

import random
from fractions import Fraction

import pytest

from errors import DivisionByZero, NotFiniteOverPrefix, NotInSubfield, TowerMismatch
from kernel.fields import GF, QQ, AlgebraicExtension, RationalFunctionField
from kernel.minpoly import trace_and_norm
from kernel.upoly import UPoly


class TestPrimeFields:
    def test_rational_arithmetic_is_exact(self):
        assert QQ(1) / QQ(3) + QQ(Fraction(2, 3)) == QQ(1)

    def test_gf_reduces_modulo_p(self):
        f5 = GF(5)
        assert f5(7) == f5(2)
        assert f5(3) * f5(2) == f5.one
        assert str(f5(-1)) == "4"

    def test_non_prime_characteristic_rejected(self):
        with pytest.raises(ValueError):
            GF(4)

    def test_division_by_zero_raises(self):
        with pytest.raises(DivisionByZero):
            QQ(1) / QQ(0)

    def test_fraction_with_p_in_denominator_has_no_image(self):
        with pytest.raises(DivisionByZero):
            GF(3)(Fraction(1, 3))

    def test_elements_of_different_towers_do_not_mix(self):
        with pytest.raises(TowerMismatch):
            QQ(1) + GF(5)(1)

    def test_elements_of_different_towers_compare_unequal(self):
        assert QQ(1) != GF(5)(1)


class TestAlgebraicExtension:
    def test_generator_satisfies_minimal_polynomial(self, gaussian):
        i = gaussian.gen
        assert i * i == -1

    def test_inverse(self, gaussian):
        i = gaussian.gen
        assert (1 + i) * (1 + i).inverse() == gaussian.one
        assert (1 + i).inverse() == (1 - i) / 2

    def test_render(self, gaussian):
        assert str(1 + gaussian.gen) == "i + 1"
        assert str(gaussian.gen * 0) == "0"

    def test_base_elements_coerce_up(self, gaussian):
        assert gaussian.gen + QQ(2) == 2 + gaussian.gen

    def test_finite_field_size_and_order(self, gf4):
        a = gf4.gen
        assert gf4.is_finite
        assert gf4.size == 4
        assert a ** 3 == gf4.one
        assert a ** 2 == a + 1

    def test_pth_root_inverts_frobenius(self, gf4):
        a = gf4.gen
        assert gf4.pth_root(a ** 2) == a

    def test_tower_degree(self):
        r2 = AlgebraicExtension(QQ, "r", UPoly(QQ, [-2, 0, 1]))
        r4 = AlgebraicExtension(r2, "q", UPoly(r2, [-r2.gen, 0, 1]))
        assert r4.degree_over(QQ) == 4
        assert r4.degree_over(r2) == 2
        assert r4.gen ** 4 == 2
        assert [name for name, _ in r4.generators()] == ["r", "q"]

    def test_coordinates_round_trip(self, gaussian):
        x = 3 - 2 * gaussian.gen
        coords = gaussian.coordinates(x, QQ)
        assert coords == [QQ(3), QQ(-2)]
        assert gaussian.from_coordinates(coords, QQ) == x

    def test_descend(self, gaussian):
        i = gaussian.gen
        assert gaussian.descend(i * i, QQ) == QQ(-1)
        with pytest.raises(NotInSubfield):
            gaussian.descend(i, QQ)

    def test_fresh_name_avoids_generators(self, gaussian):
        assert gaussian.fresh_name("i") == "i_1"
        assert gaussian.fresh_name("a") == "a"


class TestRationalFunctionField:
    def test_fractions_reduce(self):
        k = RationalFunctionField(QQ, "s")
        s = k.gen
        assert (s * s + s) / s == s + 1

    def test_is_polynomial(self):
        k = RationalFunctionField(QQ, "s")
        s = k.gen
        assert k.is_polynomial(s ** 2 + 1)
        assert not k.is_polynomial(1 / s)

    def test_not_finite_over_prime_field(self):
        k = RationalFunctionField(GF(2), "s")
        assert not k.is_finite
        with pytest.raises(NotFiniteOverPrefix):
            k.degree_over(GF(2))

    def test_descend_constant(self):
        k = RationalFunctionField(QQ, "s")
        assert k.descend(k(3), QQ) == QQ(3)
        with pytest.raises(NotInSubfield):
            k.descend(k.gen, QQ)


def sample_fields():
    r2 = AlgebraicExtension(QQ, "r", UPoly(QQ, [-2, 0, 1]))
    f2 = GF(2)
    return {
        "Q": QQ,
        "F7": GF(7),
        "Q(r)": r2,
        "Q(r, b)": AlgebraicExtension(r2, "b", UPoly(r2, [-(r2.gen + 1), 0, 0, 1])),
        "F8": AlgebraicExtension(f2, "a", UPoly(f2, [1, 1, 0, 1])),
        "F3(s)": RationalFunctionField(GF(3), "s"),
    }


FIELDS = sample_fields()
EXTENSIONS = [("Q(r)", "Q"), ("Q(r, b)", "Q"), ("Q(r, b)", "Q(r)")]


class TestFieldProperties:
    @pytest.mark.parametrize("name", list(FIELDS))
    @pytest.mark.parametrize("seed", range(4))
    def test_inverse(self, name, seed):
        field = FIELDS[name]
        rng = random.Random(seed)
        for _ in range(5):
            a = field.random_element(rng)
            if a:
                assert (a * a.inverse()).is_one()

    @pytest.mark.parametrize("top, bottom", EXTENSIONS)
    @pytest.mark.parametrize("seed", range(4))
    def test_norm_multiplicative_and_trace_additive(self, top, bottom, seed):
        field, over = FIELDS[top], FIELDS[bottom]
        rng = random.Random(seed)
        a, b = field.random_element(rng), field.random_element(rng)
        tr_a, nm_a = trace_and_norm(a, over)
        tr_b, nm_b = trace_and_norm(b, over)
        nm_ab = trace_and_norm(a * b, over)[1]
        assert nm_ab == nm_a * nm_b
        assert trace_and_norm(a + b, over)[0] == tr_a + tr_b

    @pytest.mark.parametrize("seed", range(4))
    def test_norm_over_finite_field(self, seed):
        field = FIELDS["F8"]
        rng = random.Random(seed)
        a, b = field.random_element(rng), field.random_element(rng)
        assert trace_and_norm(a * b, GF(2))[1] == trace_and_norm(a, GF(2))[1] * trace_and_norm(b, GF(2))[1]

    @pytest.mark.parametrize("seed", range(4))
    def test_trace_and_norm_through_the_tower(self, seed):
        top, middle = FIELDS["Q(r, b)"], FIELDS["Q(r)"]
        a = top.random_element(random.Random(seed))
        tr, nm = trace_and_norm(a, middle)
        assert trace_and_norm(a, QQ) == (trace_and_norm(tr, QQ)[0], trace_and_norm(nm, QQ)[1])
