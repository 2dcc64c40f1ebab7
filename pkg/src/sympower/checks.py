"""Executable statements about u and f_*: each check returns True or False."""

import logging

from ideals.decompose import decompose_zero_dim
from kernel.factor import univ_factor
from kernel.linalg import charpoly
from kernel.minpoly import trace_and_norm
from plugins import GA, GM
from sympower.algebra import FiniteFreeAlgebra
from sympower.orbits import orbit_basis, orbit_size
from sympower.pushforward import pushforward
from sympower.umap import u_map

logger = logging.getLogger("transfers.sympower.checks")


def residue_values(algebra: FiniteFreeAlgebra) -> list:
    """φ(e_i) for the residue map of a local algebra with residue field the base.

    Each basis element's multiplication matrix must have a single eigenvalue
    in the base field.
    """
    values = []
    for i in range(algebra.rank):
        chi = charpoly(algebra.multiplication_matrix(algebra.basis_vector(i)), algebra.base)
        factors = univ_factor(chi)
        if len(factors) != 1 or factors[0][0].deg != 1:
            raise ValueError(f"{algebra} is not local with residue field {algebra.base}")
        values.append(-factors[0][0].coeff(0))
    return values


def section_value(section: list, g: list):
    acc = None
    for s, c in zip(section, g):
        term = s * c
        acc = term if acc is None else acc + term
    return acc


def reduction_check(algebra: FiniteFreeAlgebra, section: list | None = None) -> bool:
    """u(e_Γ) equals multiply-then-residue: |orbit Γ| · Π_{i∈Γ} φ(e_i)."""
    phi = section if section is not None else residue_values(algebra)
    values = u_map(algebra)
    base = algebra.base
    for orbit, u in values.items():
        expected = base.one * orbit_size(orbit)
        for i in orbit:
            expected = expected * phi[i]
        if u != expected:
            logger.info("u(e%s) = %s, residue gives %s", list(orbit), u, expected)
            return False
    return True


def field_norm_trace_check(field, over, element) -> bool:
    """Pushforward along a field extension is Tr for 𝔾_a and Nm for 𝔾_m."""
    algebra = FiniteFreeAlgebra.from_extension(field, over)
    g = field.coordinates(element, over)
    tr, nm = trace_and_norm(field.coerce(element), over)
    if pushforward(algebra, GA, g) != tr:
        return False
    if element and pushforward(algebra, GM, g) != nm:
        return False
    return True


def split_p(first: FiniteFreeAlgebra, second: FiniteFreeAlgebra) -> dict:
    """p: (B₁×B₂)^⊙(d₁+d₂) → B₁^⊙d₁ ⊗ B₂^⊙d₂ on orbit bases.

    e_Γ goes to e_Γ₁ ⊗ e_Γ₂ when Γ has exactly d₁ indices in B₁'s window
    (Γ₂ re-indexed into B₂), and to 0 (None) otherwise.
    """
    d1, d2 = first.rank, second.rank
    d = d1 + d2
    out = {}
    for orbit in orbit_basis(d, (0, d - 1)) if d else [()]:
        left = tuple(i for i in orbit if i < d1)
        right = tuple(i - d1 for i in orbit if i >= d1)
        out[orbit] = (left, right) if len(left) == d1 else None
    return out


def p_diagram_check(first: FiniteFreeAlgebra, second: FiniteFreeAlgebra) -> bool:
    """(u₁⊗u₂)∘p = u on (B₁×B₂)^⊙(d₁+d₂)."""
    product = FiniteFreeAlgebra.product(first, second)
    u = u_map(product)
    u1, u2 = u_map(first), u_map(second)
    zero = product.base.zero
    for orbit, image in split_p(first, second).items():
        expected = zero if image is None else u1[image[0]] * u2[image[1]]
        if u[orbit] != expected:
            return False
    return True


def reduction_scheme_check(algebra: FiniteFreeAlgebra, plugin, g: list, section: list | None = None) -> bool:
    """For connected B with a section s: f_*g = d·s(g), resp. s(g)^d."""
    section = section if section is not None else residue_values(algebra)
    value = section_value(section, g)
    expected = plugin.multiple(value, algebra.rank)
    return pushforward(algebra, plugin, g) == expected


def split_algebra_check(algebra: FiniteFreeAlgebra, plugin, g: list) -> bool:
    """For B split over its base: f_*g = Σ d_i·(g at point i), d_i the local dimensions."""
    points = decompose_zero_dim(algebra.quotient)
    if any(p.residue_degree != 1 for p in points):
        raise ValueError("algebra does not split over its base field")
    poly = algebra.as_polynomial(g)
    expected = plugin.identity(algebra.base)
    for p in points:
        expected = plugin.combine(expected, plugin.multiple(poly.evaluate(list(p.coordinates)),
                                                            p.local_dimension))
    return pushforward(algebra, plugin, g) == expected


def coproduct_pushforward_check(first: FiniteFreeAlgebra, second: FiniteFreeAlgebra,
                                g1: list, g2: list, plugin) -> bool:
    """f₁_*g₁ + f₂_*g₂ = (f₁, f₂)_*(g₁, g₂) on B₁ × B₂."""
    product = FiniteFreeAlgebra.product(first, second)
    left = plugin.combine(pushforward(first, plugin, g1), pushforward(second, plugin, g2))
    return left == pushforward(product, plugin, list(g1) + list(g2))


def base_change_check(algebra: FiniteFreeAlgebra, field, plugin, g: list) -> bool:
    """Push forward then extend scalars = extend scalars then push forward."""
    down = field.coerce(pushforward(algebra, plugin, g))
    extended = algebra.base_change(field)
    return down == pushforward(extended, plugin, [field.coerce(c) for c in g])


def diagonal_algebra(field, over) -> tuple[FiniteFreeAlgebra, list]:
    """L ⊗_K L over L (left factor) and its multiplication section to L."""
    algebra = FiniteFreeAlgebra.from_extension(field, over).base_change(field)
    return algebra, field.basis_over(over)
