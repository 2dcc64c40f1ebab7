"""Closed points, local lengths and fibers of zero-dimensional ideals.

A closed point is presented as a residue field (a tower over the ground
field built by adjoining roots of irreducible factors) together with its
coordinates in that field. Lengths come from the generalized eigenspaces of
a separating linear form.
"""

import logging
from dataclasses import dataclass

from errors import DecompositionError, SeparatingFormNotFound
from ideals.groebner import GroebnerBasis, Ideal, buchberger, is_zero_dimensional
from ideals.order import DEGREVLEX, TermOrder, block, divides
from ideals.quotient import ArtinianQuotient, quotient_basis, standard_monomials
from kernel.factor import univ_factor
from kernel.fields import AlgebraicExtension, FieldElem, RationalFunctionField
from kernel.linalg import charpoly, mat_mul, matrix_polynomial, rank, solve, transpose
from kernel.minpoly import minimal_polynomial
from kernel.mpoly import MultiPoly

logger = logging.getLogger("transfers.ideals.decompose")

DEFAULT_ATTEMPTS = 24


@dataclass
class LocalPoint:
    """A closed point of Spec K[x̄]/I with the length of its local ring."""

    base: object
    field: object
    coordinates: tuple
    length: int
    local_dimension: int
    primary: Ideal | None = None

    @property
    def residue_degree(self) -> int:
        return self.field.degree_over(self.base)

    def render(self, variables) -> str:
        coords = ", ".join(f"{v}={c}" for v, c in zip(variables, self.coordinates))
        return f"{self.length}*[{coords}]"


def closed_points(gb: GroebnerBasis, prefix: str = "a") -> list[tuple[object, tuple]]:
    """Closed points as (residue field, coordinates), solving the last variable first."""
    if gb.is_unit():
        return []
    field = gb.field
    variables = gb.variables
    if not variables:
        return [(field, ())]
    quotient = quotient_basis(gb)
    last = len(variables) - 1
    chi = charpoly(quotient.matrices[last], field)
    points = []
    for mu, _ in univ_factor(chi):
        if mu.deg == 1:
            residue, root = field, -mu.coeff(0)
        else:
            residue = AlgebraicExtension(field, field.fresh_name(prefix), mu)
            root = residue.gen
        substituted = tuple(g.substitute({last: root}, field=residue) for g in gb.polys)
        sub_gb = buchberger(Ideal(residue, variables[:-1], substituted))
        for point_field, coords in closed_points(sub_gb, prefix):
            points.append((point_field, coords + (point_field.coerce(root),)))
    return points


def _candidate_forms(field, variables, attempts: int):
    for name in variables:
        yield MultiPoly.variable(field, variables, name)
    n = len(variables)
    for k in range(1, attempts + 1):
        terms = {}
        for i in range(n):
            exp = tuple(1 if j == i else 0 for j in range(n))
            terms[exp] = k ** i
        yield MultiPoly(field, variables, terms)


def _separating_form(points, field, variables, attempts: int):
    for form in _candidate_forms(field, variables, attempts):
        minpolys = [minimal_polynomial(form.evaluate(list(coords)), field)
                    for point_field, coords in points]
        if len(set(minpolys)) == len(minpolys):
            logger.debug("Separating form %s", form.render())
            return form, minpolys
    raise SeparatingFormNotFound(
        f"no separating linear form among {len(variables) + attempts} candidates")


def _generalized_kernel(a: list[list]) -> tuple[int, int]:
    """(dimension of the generalized kernel, power at which ranks stabilize)."""
    n = len(a)
    power, current = 1, a
    r = rank(current)
    while True:
        nxt = mat_mul(current, a)
        r2 = rank(nxt)
        if r2 == r:
            return n - r, power
        current, r, power = nxt, r2, power + 1


def _primary_by_powers(ideal: Ideal, maximal: GroebnerBasis, bound: int) -> tuple[GroebnerBasis, int]:
    """I + m^N for the first N at which the quotient stops growing, and its dimension.

    Uses I + m^N = I + m·(I + m^(N-1)).
    """
    current = buchberger(ideal.with_generators(maximal.polys))
    dim = len(standard_monomials(current))
    for _ in range(bound):
        products = [h * g for h in maximal.polys for g in current.polys]
        nxt = buchberger(ideal.with_generators(products))
        nxt_dim = len(standard_monomials(nxt))
        if nxt_dim == dim:
            return current, dim
        current, dim = nxt, nxt_dim
    raise DecompositionError(f"powers of {maximal.render()} did not stabilize within {bound} steps")


def _decompose_by_powers(quotient: ArtinianQuotient, points) -> list[LocalPoint]:
    """Lengths from I + m_P^N, for fields too small to carry a separating linear form."""
    field = quotient.field
    ideal = quotient.gb.ideal()
    result = []
    total = 0
    for point_field, coords in points:
        maximal, degree = point_ideal(coords, field, quotient.variables)
        primary, local = _primary_by_powers(ideal, maximal, quotient.dimension)
        if local % degree:
            raise DecompositionError(
                f"local dimension {local} is not a multiple of residue degree {degree}")
        result.append(LocalPoint(field, point_field, coords, local // degree, local, primary.ideal()))
        total += local
    if total != quotient.dimension:
        raise DecompositionError(
            f"local dimensions sum to {total}, quotient has dimension {quotient.dimension}")
    return result


def _apply(mu, form: MultiPoly) -> MultiPoly:
    acc = MultiPoly.zero(form.field, form.variables)
    for c in reversed(mu.coeffs):
        acc = acc * form + c
    return acc


def decompose_zero_dim(quotient: ArtinianQuotient, attempts: int = DEFAULT_ATTEMPTS,
                       prefix: str = "a") -> list[LocalPoint]:
    """Closed points with their lengths; Σ length × residue degree = dim."""
    field = quotient.field
    dim = quotient.dimension
    points = closed_points(quotient.gb, prefix)
    if not points:
        if dim:
            raise DecompositionError(f"no closed points in a quotient of dimension {dim}")
        return []
    if len(points) == 1:
        point_field, coords = points[0]
        degree = point_field.degree_over(field)
        if dim % degree:
            raise DecompositionError(f"dimension {dim} is not a multiple of residue degree {degree}")
        return [LocalPoint(field, point_field, coords, dim // degree, dim, quotient.gb.ideal())]

    try:
        form, minpolys = _separating_form(points, field, quotient.variables, attempts)
    except SeparatingFormNotFound as e:
        logger.info("%s; splitting by powers of the maximal ideals", e)
        return _decompose_by_powers(quotient, points)
    m_form = quotient.multiplication_matrix(form)
    result = []
    total = 0
    for (point_field, coords), mu in zip(points, minpolys):
        local, power = _generalized_kernel(matrix_polynomial(mu, m_form))
        degree = point_field.degree_over(field)
        if local % degree:
            raise DecompositionError(
                f"local dimension {local} is not a multiple of residue degree {degree}")
        primary = quotient.gb.ideal().with_generators([_apply(mu, form) ** power])
        result.append(LocalPoint(field, point_field, coords, local // degree, local, primary))
        total += local
    if total != dim:
        raise DecompositionError(f"local dimensions sum to {total}, quotient has dimension {dim}")
    return result


# -- fibers ----------------------------------------------------------------

def _common_field(field, values):
    for v in values:
        if isinstance(v, FieldElem) and v.field != field and v.field.has_subfield(field):
            field = v.field
    return field


def fiber_ideal(ideal: Ideal, point) -> Ideal:
    """Substitute the first len(point) variables and re-present over the point's field."""
    point = tuple(point)
    target = _common_field(ideal.field, point)
    assignment = dict(enumerate(point))
    gens = tuple(g.substitute(assignment, field=target) for g in ideal.generators)
    return Ideal(target, ideal.variables[len(point):], gens)


def function_field(base, names) -> tuple[object, list]:
    """base(x1)(x2)…, with the generators as elements of the top field."""
    field = base
    for name in names:
        field = RationalFunctionField(field, field.fresh_name(name))
    gens = [field.coerce(level.gen) for level in field.levels[len(base.levels):]]
    return field, gens


def generic_fiber(ideal: Ideal, split: int) -> Ideal:
    """The ideal over the function field of the first `split` variables."""
    _, gens = function_field(ideal.field, ideal.variables[:split])
    return fiber_ideal(ideal, gens)


def is_integral_over_first_block(ideal: Ideal, split: int) -> bool:
    """Every later variable satisfies a monic equation over the first block."""
    gb = buchberger(ideal, block(split))
    if gb.is_unit():
        return True
    leads = gb.leading_exponents
    for j in range(split, len(ideal.variables)):
        if not any(e[j] > 0 and sum(e) == e[j] for e in leads):
            return False
    return True


def finite_over_first_block(ideal: Ideal, split: int, test_points=()) -> bool:
    generic = buchberger(generic_fiber(ideal, split))
    if not is_zero_dimensional(generic):
        logger.info("Generic fiber of %s is not zero-dimensional", ideal.render())
        return False
    if not is_integral_over_first_block(ideal, split):
        logger.info("%s is not integral over the first %d variables", ideal.render(), split)
        return False
    for point in test_points:
        if not is_zero_dimensional(buchberger(fiber_ideal(ideal, point))):
            logger.info("Fiber of %s at %s is not finite", ideal.render(),
                        ", ".join(str(c) for c in point))
            return False
    return True


# -- ideals of points ------------------------------------------------------

def point_ideal(coordinates, over, variables, order: TermOrder = DEGREVLEX) -> tuple[GroebnerBasis, int]:
    """Reduced Gröbner basis of the kernel of over[variables] → M, x_i ↦ coordinates[i].

    Returns the basis and [over(z̄) : over], the number of standard monomials.
    Monomials are visited in increasing order, each tested for linear
    dependence on the standard ones found so far.
    """
    variables = tuple(variables)
    n = len(variables)
    field = _common_field(over, coordinates)
    coords = [field.coerce(c) for c in coordinates]
    values = {(0,) * n: field.one}

    def value(m):
        if m not in values:
            i = next(k for k, e in enumerate(m) if e)
            prev = m[:i] + (m[i] - 1,) + m[i + 1:]
            values[m] = value(prev) * coords[i]
        return values[m]

    standard: list[tuple] = []
    vectors: list[list] = []
    polys: list[MultiPoly] = []
    leads: list[tuple] = []
    candidates = {(0,) * n}
    while candidates:
        m = min(candidates, key=order.key)
        candidates.discard(m)
        if any(divides(lead, m) for lead in leads):
            continue
        v = field.coordinates(value(m), over)
        combo = solve(transpose(vectors), v) if vectors else None
        if combo is not None:
            terms = {m: over.one}
            for s, c in zip(standard, combo):
                if c:
                    terms[s] = -c
            polys.append(MultiPoly._raw(over, variables, terms))
            leads.append(m)
            continue
        standard.append(m)
        vectors.append(v)
        for i in range(n):
            candidates.add(m[:i] + (m[i] + 1,) + m[i + 1:])
    polys.sort(key=lambda p: order.key(p.leading(order)[0]))
    return GroebnerBasis(over, variables, order, polys), len(standard)
