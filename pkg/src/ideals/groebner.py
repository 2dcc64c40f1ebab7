"""Ideal presentations and reduced Gröbner bases (Buchberger with criteria)."""

import logging
from dataclasses import dataclass, field as dataclass_field

from ideals.order import DEGREVLEX, TermOrder, divides, lcm
from kernel.mpoly import MultiPoly, render_monomial

logger = logging.getLogger("transfers.ideals.groebner")


@dataclass(frozen=True)
class Ideal:
    """Generators of an ideal of field[variables]."""

    field: object
    variables: tuple
    generators: tuple = ()

    def __post_init__(self):
        gens = []
        for g in self.generators:
            if g.variables != self.variables:
                g = g.embed(self.variables)
            if g.field != self.field:
                g = g.change_field(self.field)
            if g:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "variables", tuple(self.variables))

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.field, self.variables, self.generators + other.generators)

    def with_generators(self, extra) -> "Ideal":
        return Ideal(self.field, self.variables, self.generators + tuple(extra))

    def render(self) -> str:
        return ", ".join(g.render() for g in self.generators)


@dataclass
class GroebnerBasis:
    field: object
    variables: tuple
    order: TermOrder
    polys: list = dataclass_field(default_factory=list)

    @property
    def leading_exponents(self) -> list[tuple]:
        return [g.leading(self.order)[0] for g in self.polys]

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.polys)

    def reduce(self, f: MultiPoly) -> MultiPoly:
        if f.variables != self.variables:
            f = f.embed(self.variables)
        return normal_form(f, self.polys, self.order)

    def contains(self, f: MultiPoly) -> bool:
        return not self.reduce(f)

    def ideal(self) -> Ideal:
        return Ideal(self.field, self.variables, tuple(self.polys))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (self.variables == other.variables and self.order == other.order
                and self.polys == other.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def render(self) -> str:
        return "{" + ", ".join(g.render() for g in self.polys) + "}"


def normal_form(f: MultiPoly, basis: list[MultiPoly], order: TermOrder) -> MultiPoly:
    """Full reduction of f by a list of monic polynomials."""
    leads = [g.leading(order)[0] for g in basis]
    pending = dict(f.terms)
    remainder = {}
    while pending:
        exp = max(pending, key=order.key)
        c = pending[exp]
        for g, lead in zip(basis, leads):
            if divides(lead, exp):
                shift = tuple(a - b for a, b in zip(exp, lead))
                for ge, gc in g.terms.items():
                    e = tuple(a + b for a, b in zip(ge, shift))
                    v = pending.get(e)
                    v = -(c * gc) if v is None else v - c * gc
                    if v:
                        pending[e] = v
                    else:
                        pending.pop(e, None)
                break
        else:
            remainder[exp] = c
            del pending[exp]
    return MultiPoly._raw(f.field, f.variables, remainder)


def s_polynomial(f: MultiPoly, g: MultiPoly, order: TermOrder) -> MultiPoly:
    ef, cf = f.leading(order)
    eg, cg = g.leading(order)
    m = lcm(ef, eg)
    left = f.mul_term(tuple(a - b for a, b in zip(m, ef)), cf.inverse())
    right = g.mul_term(tuple(a - b for a, b in zip(m, eg)), cg.inverse())
    return left - right


def _chain_criterion(i: int, j: int, leads: list[tuple], pairs: set) -> bool:
    """True when some third lead divides lcm(i, j) and both of its pairs are done."""
    m = lcm(leads[i], leads[j])
    for k in range(len(leads)):
        if k in (i, j) or leads[k] is None:
            continue
        if divides(leads[k], m) and (min(i, k), max(i, k)) not in pairs \
                and (min(j, k), max(j, k)) not in pairs:
            return True
    return False


def buchberger(ideal: Ideal, order: TermOrder = DEGREVLEX) -> GroebnerBasis:
    """Reduced Gröbner basis, sorted by leading monomial (ascending)."""
    polys: list[MultiPoly] = []
    leads: list[tuple | None] = []
    pairs: set[tuple[int, int]] = set()

    def add(h: MultiPoly) -> None:
        h = h.monic(order)
        polys.append(h)
        leads.append(h.leading(order)[0])
        new = len(polys) - 1
        for i in range(new):
            if leads[i] is not None:
                pairs.add((i, new))

    for g in ideal.generators:
        r = normal_form(g, [p for p, l in zip(polys, leads) if l is not None], order)
        if r:
            add(r)
            if r.is_constant():
                return _unit_basis(ideal, order)

    reductions = 0
    while pairs:
        i, j = min(pairs, key=lambda p: (order.key(lcm(leads[p[0]], leads[p[1]])), p))
        pairs.discard((i, j))
        if leads[i] is None or leads[j] is None:
            continue
        if all(a == 0 or b == 0 for a, b in zip(leads[i], leads[j])):
            continue
        if _chain_criterion(i, j, leads, pairs):
            continue
        active = [p for p, l in zip(polys, leads) if l is not None]
        r = normal_form(s_polynomial(polys[i], polys[j], order), active, order)
        reductions += 1
        if r:
            if r.is_constant():
                return _unit_basis(ideal, order)
            add(r)
            logger.debug("S-pair (%d, %d) added a basis element with lead %s", i, j,
                         render_monomial(ideal.variables, leads[-1]))

    basis = _reduce_basis([p for p, l in zip(polys, leads) if l is not None], order)
    logger.debug("Gröbner basis of %d elements after %d reductions", len(basis), reductions)
    return GroebnerBasis(ideal.field, ideal.variables, order, basis)


def _unit_basis(ideal: Ideal, order: TermOrder) -> GroebnerBasis:
    return GroebnerBasis(ideal.field, ideal.variables, order,
                         [MultiPoly.constant(ideal.field, ideal.variables, 1)])


def _reduce_basis(polys: list[MultiPoly], order: TermOrder) -> list[MultiPoly]:
    polys = sorted(polys, key=lambda p: order.key(p.leading(order)[0]))
    minimal: list[MultiPoly] = []
    for p in polys:
        lead = p.leading(order)[0]
        if not any(divides(q.leading(order)[0], lead) for q in minimal):
            minimal.append(p)
    reduced = []
    for k, p in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        reduced.append(normal_form(p, others, order).monic(order))
    return sorted(reduced, key=lambda p: order.key(p.leading(order)[0]))


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """Leading terms contain a pure power of every variable (the unit ideal counts)."""
    if gb.is_unit():
        return True
    leads = gb.leading_exponents
    for i in range(len(gb.variables)):
        if not any(e[i] > 0 and sum(e) == e[i] for e in leads):
            return False
    return True


def intersect(a: Ideal, b: Ideal) -> GroebnerBasis:
    """I ∩ J by eliminating s from s·I + (1 − s)·J."""
    s_name = "s"
    while s_name in a.variables:
        s_name += "_"
    variables = a.variables + (s_name,)
    s = MultiPoly.variable(a.field, variables, s_name)
    gens = [g.embed(variables) * s for g in a.generators]
    gens += [g.embed(variables) * (1 - s) for g in b.generators]
    order = TermOrder("block", len(a.variables))
    gb = buchberger(Ideal(a.field, variables, tuple(gens)), order)
    kept = [MultiPoly._raw(g.field, a.variables, {e[:-1]: c for e, c in g.terms.items()})
            for g in gb.polys if g.degree_in(len(a.variables)) <= 0]
    return buchberger(Ideal(a.field, a.variables, tuple(kept)), DEGREVLEX)
