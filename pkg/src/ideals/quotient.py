"""Finite-dimensional quotients K[x̄]/I given by a zero-dimensional Gröbner basis."""

import logging
from dataclasses import dataclass

from errors import NotZeroDimensional
from ideals.groebner import GroebnerBasis, is_zero_dimensional
from ideals.order import divides
from kernel.mpoly import MultiPoly, render_monomial

logger = logging.getLogger("transfers.ideals.quotient")


@dataclass
class ArtinianQuotient:
    gb: GroebnerBasis
    monomials: list[tuple]
    matrices: list[list[list]]

    @property
    def field(self):
        return self.gb.field

    @property
    def variables(self) -> tuple:
        return self.gb.variables

    @property
    def dimension(self) -> int:
        return len(self.monomials)

    def basis_polys(self) -> list[MultiPoly]:
        one = self.field.one
        return [MultiPoly._raw(self.field, self.variables, {m: one}) for m in self.monomials]

    def coordinates(self, f: MultiPoly) -> list:
        """Coordinates of the normal form of f in the standard-monomial basis."""
        r = self.gb.reduce(f)
        field = self.field
        return [field.coerce(r.terms[m]) if m in r.terms else field.zero for m in self.monomials]

    def multiplication_matrix(self, f: MultiPoly) -> list[list]:
        columns = [self.coordinates(f * b) for b in self.basis_polys()]
        return [list(row) for row in zip(*columns)] if columns else []

    def render_basis(self) -> list[str]:
        return [render_monomial(self.variables, m) or "1" for m in self.monomials]


def standard_monomials(gb: GroebnerBasis) -> list[tuple]:
    if gb.is_unit():
        return []
    n = len(gb.variables)
    leads = gb.leading_exponents
    seen = {(0,) * n}
    frontier = [(0,) * n]
    found = []
    while frontier:
        m = frontier.pop()
        if any(divides(lead, m) for lead in leads):
            continue
        found.append(m)
        for i in range(n):
            nxt = m[:i] + (m[i] + 1,) + m[i + 1:]
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return sorted(found, key=gb.order.key)


def quotient_basis(gb: GroebnerBasis) -> ArtinianQuotient:
    if not is_zero_dimensional(gb):
        raise NotZeroDimensional(f"ideal {gb.render()} is not zero-dimensional")
    monomials = standard_monomials(gb)
    quotient = ArtinianQuotient(gb, monomials, [])
    for name in gb.variables:
        x = MultiPoly.variable(gb.field, gb.variables, name)
        quotient.matrices.append(quotient.multiplication_matrix(x))
    logger.debug("Quotient of dimension %d over %s", len(monomials), gb.field)
    return quotient
