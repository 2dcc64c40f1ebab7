"""Tests for univariate polynomials, linear algebra, factorization and minimal polynomials."""

import itertools
import random

import pytest

from errors import DivisionByZero, NonSquare, ReducibleMinimalPolynomial
from kernel.factor import checked_extension, is_irreducible, roots, squarefree_decomposition, univ_factor
from kernel.fields import GF, QQ, AlgebraicExtension, RationalFunctionField
from kernel.linalg import charpoly, det, inverse, kernel, mat_mul, matrix_polynomial, rank, solve, zeros
from kernel.minpoly import characteristic_polynomial, minimal_polynomial, polynomial_norm, trace_and_norm
from kernel.upoly import UPoly


def matrix(field, rows):
    return [[field(x) for x in row] for row in rows]


def rendered(factors):
    return [(g.render("t"), e) for g, e in factors]


class TestUPoly:
    def test_render(self, upoly):
        assert upoly(QQ, -2, 0, 1).render("t") == "t^2 - 2"
        assert upoly(QQ, 1, -3, 2).render("y") == "2*y^2 - 3*y + 1"
        assert upoly(QQ).render("t") == "0"

    def test_zero_has_degree_minus_one(self, upoly):
        assert upoly(QQ, 0, 0).deg == -1

    def test_divmod(self, upoly):
        q, r = upoly(QQ, 1, 0, 0, 1).divmod(upoly(QQ, 1, 1))
        assert q == upoly(QQ, 1, -1, 1)
        assert not r

    def test_division_by_zero(self, upoly):
        with pytest.raises(DivisionByZero):
            upoly(QQ, 1, 1).divmod(upoly(QQ))

    def test_gcd_is_monic(self, upoly):
        f = upoly(QQ, -2, 0, 2)
        g = upoly(QQ, 3, 3)
        assert f.gcd(g) == upoly(QQ, 1, 1)

    def test_xgcd_bezout(self, upoly):
        f, g = upoly(QQ, 1, 0, 1), upoly(QQ, 1, 1)
        d, s, t = f.xgcd(g)
        assert d.is_one()
        assert s * f + t * g == d

    def test_evaluation_in_extension(self, upoly, gaussian):
        assert upoly(QQ, 1, 0, 1)(gaussian.gen) == 0

    def test_compose(self, upoly):
        assert upoly(QQ, 0, 0, 1).compose(upoly(QQ, 1, 1)) == upoly(QQ, 1, 2, 1)


class TestLinearAlgebra:
    def test_determinant(self):
        assert det(matrix(QQ, [[1, 2], [3, 4]])) == -2

    def test_empty_determinant_needs_one(self):
        assert det([], QQ.one) == 1
        with pytest.raises(ValueError):
            det([])

    def test_non_square_rejected(self):
        with pytest.raises(NonSquare):
            det(matrix(QQ, [[1, 2]]))

    def test_inverse(self):
        m = matrix(QQ, [[2, 1], [1, 1]])
        assert mat_mul(m, inverse(m)) == matrix(QQ, [[1, 0], [0, 1]])

    def test_rank_and_kernel(self):
        m = matrix(QQ, [[1, 2], [2, 4]])
        assert rank(m) == 1
        assert kernel(m) == [[QQ(-2), QQ(1)]]

    def test_solve_inconsistent(self):
        m = matrix(QQ, [[1, 1], [1, 1]])
        assert solve(m, [QQ(1), QQ(2)]) is None
        assert solve(m, [QQ(2), QQ(2)]) == [QQ(2), QQ(0)]

    def test_cayley_hamilton(self):
        m = matrix(GF(7), [[1, 2, 0], [3, 4, 5], [6, 0, 1]])
        assert matrix_polynomial(charpoly(m), m) == zeros(GF(7), 3, 3)

    def test_rotation_charpoly(self):
        assert charpoly(matrix(QQ, [[0, -1], [1, 0]])).render("t") == "t^2 + 1"


class TestFactorization:
    def test_rational(self, upoly):
        f = upoly(QQ, -1, 0, 0, 0, 1)
        assert rendered(univ_factor(f)) == [("t + 1", 1), ("t - 1", 1), ("t^2 + 1", 1)]

    def test_prime_field_repeated_factor(self, upoly):
        assert rendered(univ_factor(upoly(GF(2), 1, 0, 1))) == [("t + 1", 2)]

    def test_finite_extension(self, upoly, gf4):
        # t^4 + t splits completely over GF(4)
        f = UPoly(gf4, [0, 1, 0, 0, 1])
        assert len(univ_factor(f)) == 4
        assert all(g.deg == 1 for g, _ in univ_factor(f))

    def test_number_field(self, gaussian):
        f = UPoly(gaussian, [1, 0, 1])
        assert rendered(univ_factor(f)) == [("t + i", 1), ("t - i", 1)]
        assert not is_irreducible(f)

    def test_irreducible_over_rationals(self, upoly):
        assert is_irreducible(upoly(QQ, -2, 0, 1))
        assert not is_irreducible(upoly(QQ, -4, 0, 1))

    def test_constants_have_no_factors(self, upoly):
        assert univ_factor(upoly(QQ, 5)) == []
        with pytest.raises(ValueError):
            univ_factor(upoly(QQ))

    def test_roots(self, upoly):
        assert sorted(r.rep for r in roots(upoly(GF(5), -4, 0, 1))) == [2, 3]

    def test_squarefree_decomposition(self, upoly):
        f = upoly(QQ, 2, -3, 0, 1)  # (t - 1)^2 (t + 2)
        assert rendered(squarefree_decomposition(f)) == [("t + 2", 1), ("t - 1", 2)]

    def test_squarefree_decomposition_inseparable(self, upoly):
        assert rendered(squarefree_decomposition(upoly(GF(2), 1, 0, 1))) == [("t + 1", 2)]

    def test_binomial_over_inseparable_tower(self):
        k = RationalFunctionField(GF(2), "s")
        s = k.gen
        assert univ_factor(UPoly(k, [-s, 0, 1])) == [(UPoly(k, [-s, 0, 1]), 1)]
        root = AlgebraicExtension(k, "a", UPoly(k, [-s, 0, 1]))
        f = UPoly(root, [-root.gen, 0, 1])
        assert univ_factor(f) == [(f, 1)]
        assert is_irreducible(f)

    def test_binomial_of_a_square_is_not_irreducible(self):
        k = RationalFunctionField(GF(2), "s")
        s = k.gen
        factors = univ_factor(UPoly(k, [-(s ** 2), 0, 0, 0, 1]))
        assert [(g.deg, e) for g, e in factors] == [(2, 2)]
        assert factors[0][0] == UPoly(k, [-s, 0, 1])


def finite_fields():
    f2, f3, f11 = GF(2), GF(3), GF(11)
    return [
        GF(7),
        AlgebraicExtension(f2, "a", UPoly(f2, [1, 1, 0, 1])),
        AlgebraicExtension(f3, "a", UPoly(f3, [1, 0, 1])),
        AlgebraicExtension(f11, "a", UPoly(f11, [1, 0, 1])),
    ]


def elements(field):
    p = field.characteristic
    n = field.degree_over(field.prime_field)
    return [field.from_coordinates(list(vec), field.prime_field)
            for vec in itertools.product(range(p), repeat=n)]


class TestFactorizationAgainstRoots:
    """Factorizations checked against every element of fields with at most 121 elements."""

    @pytest.mark.parametrize("field", finite_fields(), ids=["F7", "F8", "F9", "F121"])
    @pytest.mark.parametrize("seed", range(3))
    def test_random_monic_polynomials(self, field, seed):
        rng = random.Random(seed)
        points = elements(field)
        assert len(points) == field.size
        for degree in range(2, 7):
            f = UPoly(field, [field.random_element(rng) for _ in range(degree)] + [field.one])
            factors = univ_factor(f)
            product = UPoly.one(field)
            for g, e in factors:
                product = product * g ** e
            assert product == f
            for g, _ in factors:
                if g.deg > 1:
                    assert all(g(x) for x in points), g.render("t")
            linear = [g for g, _ in factors if g.deg == 1]
            assert len(linear) == sum(1 for x in points if not f(x))


class TestCheckedExtension:
    def test_reducible_rejected(self, upoly):
        with pytest.raises(ReducibleMinimalPolynomial):
            checked_extension(QQ, "x", upoly(QQ, -1, 0, 1))

    def test_off_skips_verification(self, upoly):
        field, verified = checked_extension(QQ, "x", upoly(QQ, -1, 0, 1), policy="off")
        assert not verified
        assert field.degree == 2

    def test_auto_skips_high_degree_over_infinite_base(self, upoly):
        _, verified = checked_extension(QQ, "x", upoly(QQ, -2, 0, 0, 0, 0, 1), degree_bound=4)
        assert not verified

    def test_auto_checks_finite_base(self, upoly):
        _, verified = checked_extension(GF(3), "x", upoly(GF(3), 1, 0, 1))
        assert verified


class TestMinimalPolynomial:
    def test_gaussian_integer(self, gaussian):
        x = 1 + gaussian.gen
        assert minimal_polynomial(x, QQ).render("t") == "t^2 - 2*t + 2"
        assert trace_and_norm(x, QQ) == (QQ(2), QQ(2))
        assert characteristic_polynomial(x, QQ) == minimal_polynomial(x, QQ)

    def test_element_of_base_has_linear_minpoly(self, gaussian):
        assert minimal_polynomial(gaussian(3), QQ).render("t") == "t - 3"

    def test_tower(self):
        r2 = AlgebraicExtension(QQ, "r", UPoly(QQ, [-2, 0, 1]))
        r4 = AlgebraicExtension(r2, "q", UPoly(r2, [-r2.gen, 0, 1]))
        assert minimal_polynomial(r4.gen, QQ).render("t") == "t^4 - 2"
        assert minimal_polynomial(r4.gen, r2).render("t") == "t^2 - r"

    def test_finite_field(self, gf4):
        assert minimal_polynomial(gf4.gen, GF(2)).render("t") == "t^2 + t + 1"

    def test_polynomial_norm(self, gaussian):
        g = UPoly(gaussian, [-gaussian.gen, 1])
        assert polynomial_norm(g).render("t") == "t^2 + 1"
