"""Minimal polynomials, traces and norms for finite extensions in a tower."""

import logging

from errors import NotFiniteOverPrefix
from kernel.fields import AlgebraicExtension
from kernel.linalg import charpoly, det, solve, trace, transpose
from kernel.upoly import UPoly

logger = logging.getLogger("transfers.kernel.minpoly")


def multiplication_matrix(a, over) -> list[list]:
    """Matrix of x -> a·x on the field of a, in its monomial basis over `over`.

    Column j holds the coordinates of a times the j-th basis element.
    """
    field = a.field
    columns = [field.coordinates(a * b, over) for b in field.basis_over(over)]
    return transpose(columns)


def minimal_polynomial(a, over) -> UPoly:
    """Monic minimal polynomial of a over the prefix `over`."""
    field = a.field
    n = field.degree_over(over)
    powers = [field.coordinates(field.one, over)]
    current = field.one
    for k in range(1, n + 1):
        current = current * a
        target = field.coordinates(current, over)
        system = transpose(powers)
        combination = solve(system, target)
        if combination is not None:
            return UPoly._raw(over, [-c for c in combination] + [over.one])
        powers.append(target)
    raise NotFiniteOverPrefix(f"no dependence among powers of {a} over {over}")


def characteristic_polynomial(a, over) -> UPoly:
    return charpoly(multiplication_matrix(a, over), over)


def trace_and_norm(a, over) -> tuple:
    m = multiplication_matrix(a, over)
    return trace(m), det(m, over.one)


def polynomial_norm(g: UPoly) -> UPoly:
    """Norm of g ∈ L[t] down to K[t], for L = K[α] the top algebraic step.

    Computed as the determinant of multiplication by g on the free K[t]-module
    L[t] with basis 1, α, …, α^(d-1).
    """
    field = g.field
    if not isinstance(field, AlgebraicExtension):
        raise NotFiniteOverPrefix(f"{field} is not an algebraic step")
    base = field.base
    d = field.degree
    basis = field.basis_over(base)
    entries = [[UPoly.zero(base) for _ in range(d)] for _ in range(d)]
    for j, b in enumerate(basis):
        for k, c in enumerate(g.coeffs):
            if not c:
                continue
            coords = field.coordinates(c * b, base)
            for i, x in enumerate(coords):
                if x:
                    entries[i][j] = entries[i][j] + UPoly.monomial(base, x, k)
    return det(entries, UPoly.one(base)).monic()
