"""The functional u: B^⊙d → A given by the action on ∧^d B.

For x = Σ s_i e_i one has x^{⊗d} = Σ_Γ s^Γ e_Γ and u(x^{⊗d}) = det(x·), so
u(e_Γ) is the coefficient of s^Γ in the generic norm det(Σ s_i M_{e_i}).
``u_on_orbit`` computes the same number by expanding the wedge directly.
"""

import logging
import random

from kernel.linalg import det, transpose
from kernel.mpoly import MultiPoly
from sympower.algebra import FiniteFreeAlgebra, random_invertible
from sympower.orbits import (
    SymElem,
    additive_symmetrization,
    distinct_permutations,
    orbit_basis,
    tensor_power,
)

logger = logging.getLogger("transfers.sympower.umap")


def norm_variables(rank: int) -> tuple[str, ...]:
    return tuple(f"s{i + 1}" for i in range(rank))


def generic_norm(algebra: FiniteFreeAlgebra) -> MultiPoly:
    """det(Σ s_i M_{e_i}) in base[s1..sd]."""
    base, d = algebra.base, algebra.rank
    variables = norm_variables(d)
    if d == 0:
        return MultiPoly.constant(base, variables, 1)
    s = [MultiPoly.variable(base, variables, v) for v in variables]
    matrix = [[MultiPoly.zero(base, variables) for _ in range(d)] for _ in range(d)]
    for i in range(d):
        m = algebra.multiplication_matrix(algebra.basis_vector(i))
        for r in range(d):
            for c in range(d):
                if m[r][c]:
                    matrix[r][c] = matrix[r][c] + s[i].scale(m[r][c])
    return det(matrix)


def _exponent(orbit: tuple, rank: int) -> tuple:
    exp = [0] * rank
    for i in orbit:
        exp[i] += 1
    return tuple(exp)


def u_map(algebra: FiniteFreeAlgebra) -> dict[tuple, object]:
    """u(e_Γ) for every orbit Γ of the window [0, rank − 1] with d = rank."""
    cached = getattr(algebra, "_u_values", None)
    if cached is not None:
        return cached
    d = algebra.rank
    norm = generic_norm(algebra)
    zero = algebra.base.zero
    if d == 0:
        values = {(): algebra.base.one}
    else:
        values = {orbit: norm.terms.get(_exponent(orbit, d), zero)
                  for orbit in orbit_basis(d, (0, d - 1))}
    algebra._u_values = values
    logger.debug("u computed on %d orbits (rank %d)", len(values), d)
    return values


def u_on_orbit(algebra: FiniteFreeAlgebra, orbit: tuple):
    """e_Γ·(e1∧…∧ed) expanded: Σ over distinct orderings of det[e_{γk}·e_k]."""
    d = algebra.rank
    acc = algebra.base.zero
    products = {}
    for gamma in distinct_permutations(orbit):
        columns = []
        for k, i in enumerate(gamma):
            if (i, k) not in products:
                products[(i, k)] = algebra.structure[i][k]
            col = products[(i, k)]
            if not any(col) or col in columns:
                columns = None
                break
            columns.append(col)
        if columns is None:
            continue
        acc = acc + det(transpose(columns), algebra.base.one)
    return acc


def u_apply(algebra: FiniteFreeAlgebra, x: SymElem):
    if x.d != algebra.rank:
        raise ValueError(f"u is defined on B^⊙{algebra.rank}, got degree {x.d}")
    values = u_map(algebra)
    acc = algebra.base.zero
    for orbit, c in x.coeffs.items():
        v = values.get(orbit)
        if v:
            acc = acc + c * v
    return acc


def u_basis_independence_check(algebra: FiniteFreeAlgebra, change=None,
                               rng: random.Random | None = None, samples: int = 3) -> bool:
    """Recompute u in another basis and compare on intrinsic elements.

    Compares N_B(P s') with N_B'(s') as polynomials, and u on b^{⊗d} and on
    the additive symmetrization of random b in both bases.
    """
    rng = rng or random.Random(0)
    base, d = algebra.base, algebra.rank
    if change is None:
        change = random_invertible(base, d, rng)
    other = algebra.change_basis(change)
    variables = norm_variables(d)
    primed = [MultiPoly.variable(base, variables, v) for v in variables]
    images = []
    for i in range(d):
        acc = MultiPoly.zero(base, variables)
        for j in range(d):
            if change[i][j]:
                acc = acc + primed[j].scale(change[i][j])
        images.append(acc)
    if d and generic_norm(algebra).compose(images) != generic_norm(other):
        return False
    for _ in range(samples):
        new_coords = [base.random_element(rng) for _ in range(d)]
        old_coords = [sum((change[i][j] * new_coords[j] for j in range(d)), base.zero)
                      for i in range(d)]
        if u_apply(algebra, tensor_power(algebra, old_coords, d)) != \
                u_apply(other, tensor_power(other, new_coords, d)):
            return False
        if u_apply(algebra, additive_symmetrization(algebra, old_coords, d)) != \
                u_apply(other, additive_symmetrization(other, new_coords, d)):
            return False
    return True
