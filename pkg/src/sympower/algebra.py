"""Finite free commutative algebras over a field, given by structure constants.

Elements are coordinate lists over the base field in the algebra's basis.
``structure[i][j]`` is the coordinate list of e_i·e_j.
"""

import logging
import random

from ideals.groebner import Ideal, buchberger
from ideals.quotient import ArtinianQuotient, quotient_basis
from kernel.linalg import det, inverse, mat_vec, trace, transpose
from kernel.mpoly import MultiPoly

logger = logging.getLogger("transfers.sympower.algebra")

MAX_RANDOM_RANK = 4


class FiniteFreeAlgebra:
    def __init__(self, base, structure, unit, names=None, quotient: ArtinianQuotient | None = None,
                 check: bool = True):
        self.base = base
        self.rank = len(unit)
        self.structure = [[[base.coerce(c) for c in cell] for cell in row] for row in structure]
        self.unit = [base.coerce(c) for c in unit]
        self.names = list(names) if names else [f"e{i + 1}" for i in range(self.rank)]
        self.quotient = quotient
        self.extension = None
        if check:
            self._check()

    def __repr__(self) -> str:
        return f"FiniteFreeAlgebra(rank={self.rank}, base={self.base})"

    def _check(self) -> None:
        d = self.rank
        for i in range(d):
            for j in range(i + 1, d):
                if self.structure[i][j] != self.structure[j][i]:
                    raise ValueError(f"structure constants not commutative at ({i}, {j})")
        for j in range(d):
            if self.multiply(self.unit, self.basis_vector(j)) != self.basis_vector(j):
                raise ValueError(f"unit law fails on {self.names[j]}")
        for i in range(d):
            for j in range(d):
                left = self.structure[i][j]
                for k in range(d):
                    if self.multiply(left, self.basis_vector(k)) != \
                            self.multiply(self.basis_vector(i), self.structure[j][k]):
                        raise ValueError(f"associativity fails on ({i}, {j}, {k})")

    # -- elements ---------------------------------------------------------

    def zero(self) -> list:
        return [self.base.zero] * self.rank

    def one(self) -> list:
        return list(self.unit)

    def basis_vector(self, i: int) -> list:
        v = self.zero()
        v[i] = self.base.one
        return v

    def scalar(self, c) -> list:
        c = self.base.coerce(c)
        return [c * u for u in self.unit]

    def add(self, a: list, b: list) -> list:
        return [x + y for x, y in zip(a, b)]

    def scale(self, a: list, c) -> list:
        return [x * c for x in a]

    def multiply(self, a: list, b: list) -> list:
        out = self.zero()
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                xy = x * y
                for k, c in enumerate(self.structure[i][j]):
                    if c:
                        out[k] = out[k] + xy * c
        return out

    def power(self, a: list, n: int) -> list:
        result, base = self.one(), a
        while n:
            if n & 1:
                result = self.multiply(result, base)
            n >>= 1
            if n:
                base = self.multiply(base, base)
        return result

    def multiplication_matrix(self, a: list) -> list[list]:
        return transpose([self.multiply(a, self.basis_vector(j)) for j in range(self.rank)])

    def norm(self, a: list):
        return det(self.multiplication_matrix(a), self.base.one)

    def trace(self, a: list):
        if not self.rank:
            return self.base.zero
        return trace(self.multiplication_matrix(a))

    def is_unit(self, a: list) -> bool:
        return bool(self.norm(a))

    def from_polynomial(self, f: MultiPoly) -> list:
        if self.quotient is None:
            raise ValueError("algebra was not built from a quotient ring")
        return self.quotient.coordinates(f)

    def as_polynomial(self, a: list) -> MultiPoly:
        """The element as a combination of standard monomials (quotient algebras only)."""
        if self.quotient is None:
            raise ValueError("algebra was not built from a quotient ring")
        acc = MultiPoly.zero(self.base, self.quotient.variables)
        for c, b in zip(a, self.quotient.basis_polys()):
            if c:
                acc = acc + b.scale(c)
        return acc

    def render(self, a: list) -> str:
        terms = [f"({c})*{name}" for c, name in zip(a, self.names) if c]
        return " + ".join(terms) or "0"

    # -- constructions ----------------------------------------------------

    @classmethod
    def from_extension(cls, field, over) -> "FiniteFreeAlgebra":
        """A finite field extension as an algebra over a prefix of its tower."""
        basis = field.basis_over(over)
        structure = [[field.coordinates(a * b, over) for b in basis] for a in basis]
        names = [str(b) for b in basis]
        algebra = cls(over, structure, field.coordinates(field.one, over), names, check=False)
        algebra.extension = field
        return algebra

    @classmethod
    def from_quotient(cls, quotient: ArtinianQuotient) -> "FiniteFreeAlgebra":
        basis = quotient.basis_polys()
        structure = [[quotient.coordinates(a * b) for b in basis] for a in basis]
        one = MultiPoly.constant(quotient.field, quotient.variables, 1)
        return cls(quotient.field, structure, quotient.coordinates(one),
                   quotient.render_basis(), quotient=quotient, check=False)

    @classmethod
    def product(cls, first: "FiniteFreeAlgebra", second: "FiniteFreeAlgebra") -> "FiniteFreeAlgebra":
        """first × second with the concatenated basis."""
        base = first.base
        d1, d2 = first.rank, second.rank
        zero_cell = [base.zero] * (d1 + d2)
        structure = [[list(zero_cell) for _ in range(d1 + d2)] for _ in range(d1 + d2)]
        for i in range(d1):
            for j in range(d1):
                structure[i][j] = list(first.structure[i][j]) + [base.zero] * d2
        for i in range(d2):
            for j in range(d2):
                structure[d1 + i][d1 + j] = [base.zero] * d1 + list(second.structure[i][j])
        names = [f"{n}'" for n in first.names] + [f"{n}''" for n in second.names]
        return cls(base, structure, first.unit + second.unit, names, check=False)

    def base_change(self, field) -> "FiniteFreeAlgebra":
        return FiniteFreeAlgebra(field, self.structure, self.unit, self.names, check=False)

    def change_basis(self, p: list[list]) -> "FiniteFreeAlgebra":
        """New basis e'_j = Σ_i p[i][j] e_i (p invertible)."""
        p_inv = inverse(p)
        columns = transpose(p)
        structure = [[mat_vec(p_inv, self.multiply(a, b)) for b in columns] for a in columns]
        names = [f"{n}*" for n in self.names]
        return FiniteFreeAlgebra(self.base, structure, mat_vec(p_inv, self.unit), names)

    def tensor_over_base(self, other: "FiniteFreeAlgebra") -> "FiniteFreeAlgebra":
        """self ⊗ other with basis e_i ⊗ f_j in row-major order."""
        d1, d2 = self.rank, other.rank
        structure = []
        for i1 in range(d1):
            for j1 in range(d2):
                row = []
                for i2 in range(d1):
                    for j2 in range(d2):
                        left, right = self.structure[i1][i2], other.structure[j1][j2]
                        row.append([x * y for x in left for y in right])
                structure.append(row)
        unit = [x * y for x in self.unit for y in other.unit]
        names = [f"{a}⊗{b}" for a in self.names for b in other.names]
        return FiniteFreeAlgebra(self.base, structure, unit, names, check=False)


def random_invertible(field, n: int, rng: random.Random) -> list[list]:
    while True:
        m = [[field.random_element(rng) for _ in range(n)] for _ in range(n)]
        if det(m, field.one):
            return m


def local_quotient(field, rng: random.Random, nvars: int = 2, max_rank: int = MAX_RANDOM_RANK) -> ArtinianQuotient:
    """K[x1..xn]/(m³ + random quadratic relations): local with residue field K.

    Quadratic relations are added until the rank is at most ``max_rank``.
    """
    if max_rank < 1 + nvars:
        raise ValueError(f"a local algebra on {nvars} variables has rank at least {1 + nvars}")
    variables = tuple(f"x{i + 1}" for i in range(nvars))
    xs = [MultiPoly.variable(field, variables, v) for v in variables]
    gens = []
    for i in range(nvars):
        for j in range(i, nvars):
            for k in range(j, nvars):
                gens.append(xs[i] * xs[j] * xs[k])
    quadratics = [xs[i] * xs[j] for i in range(nvars) for j in range(i, nvars)]
    while True:
        quotient = quotient_basis(buchberger(Ideal(field, variables, tuple(gens))))
        if quotient.dimension <= max_rank:
            return quotient
        acc = MultiPoly.zero(field, variables)
        for q in quadratics:
            acc = acc + q.scale(field.random_element(rng))
        gens.append(acc)


def random_local_algebra(field, rng: random.Random, nvars: int = 2,
                         max_rank: int = MAX_RANDOM_RANK) -> FiniteFreeAlgebra:
    """A random artinian local algebra with residue field `field`, in a random basis."""
    algebra = FiniteFreeAlgebra.from_quotient(local_quotient(field, rng, nvars, max_rank))
    return algebra.change_basis(random_invertible(field, algebra.rank, rng))
