"""Canonical transfers α*: G(Y) → G(X) for group plugins, and their checks.

At the generic point a correspondence is Σ m_i (L_i, y_i) over K = k(X);
the transfer of g is Σ m_i Tr_{L_i/K}(g(y_i)) for 𝔾_a and
Π Nm_{L_i/K}(g(y_i))^{m_i} for 𝔾_m and μ_n. Each norm or trace is
cross-checked against the symmetric-power pushforward when the degree is
small enough.
"""

import logging
from dataclasses import dataclass, field as dataclass_field

from correspondence import Correspondence, CyclePoint, GenericCycle, compose
from errors import (
    NotAPluginPoint,
    NotInSubfield,
    NotInvertibleAtPoint,
    NotRadicial,
    NotRegularizable,
    OracleMismatch,
)
from ideals.decompose import DEFAULT_ATTEMPTS, decompose_zero_dim, fiber_ideal
from ideals.groebner import buchberger
from ideals.quotient import quotient_basis
from kernel.fields import AlgebraicExtension
from kernel.rational import to_fraction
from kernel.mpoly import MultiPoly
from sympower.algebra import FiniteFreeAlgebra
from sympower.pushforward import pushforward

logger = logging.getLogger("transfers.transfer")

DEFAULT_MAX_DEGREE = 6


@dataclass
class TransferResult:
    value: object
    regular: bool
    plugin: object
    oracle_checked: int = 0
    flags: list = dataclass_field(default_factory=list)

    def render(self) -> str:
        return self.plugin.render(self.value)


def _as_functions(plugin, g) -> list:
    functions = list(g) if isinstance(g, (list, tuple)) else [g]
    if len(functions) != plugin.arity:
        raise NotAPluginPoint(f"{plugin.name} takes {plugin.arity} function(s), got {len(functions)}")
    return functions


def _point_value(plugin, functions, field, coordinates):
    values = tuple(field.coerce(f.evaluate(list(coordinates))) for f in functions)
    for p, v in zip(plugin.factors, values):
        if p.kind == "multiplicative" and not v:
            raise NotInvertibleAtPoint(f"{plugin.name} function vanishes at a cycle point")
        p.check_point(v)
    return values if plugin.kind == "product" else values[0]


def _live_points(cycle: GenericCycle) -> list[CyclePoint]:
    return [p for p in cycle.points if p.multiplicity]


def _cycle_transfer(cycle: GenericCycle, plugin, point_values, max_degree: int) -> tuple:
    """Combine per-point values, paired with the points of nonzero multiplicity."""
    base = cycle.base
    total = plugin.identity(base)
    checked = 0
    for point, value in zip(_live_points(cycle), point_values, strict=True):
        down = plugin.field_transfer(value, base)
        if point.degree_over(base) <= max_degree:
            algebra = FiniteFreeAlgebra.from_extension(point.field, base)
            coords = ([point.field.coordinates(v, base) for v in value] if plugin.kind == "product"
                      else point.field.coordinates(value, base))
            oracle = pushforward(algebra, plugin, coords)
            if oracle != down:
                raise OracleMismatch(f"norm/trace gives {plugin.render(down)}, "
                                     f"symmetric power gives {plugin.render(oracle)}")
            checked += 1
        total = plugin.combine(total, plugin.multiple(down, point.multiplicity))
    return total, checked


def _is_regular(plugin, field, value) -> bool:
    values = value if plugin.kind == "product" else (value,)
    return all(field.is_polynomial(v) for v in values)


def check_transfer_value(plugin, value) -> None:
    """A transferred value must again be a point of every factor, e.g. an n-th root of unity for μ_n."""
    try:
        plugin.check_point(value)
    except NotAPluginPoint as e:
        raise OracleMismatch(f"transfer {plugin.render(value)} is not a point of {plugin.name}: {e}")


def transfer(alpha, plugin, g, max_degree: int = DEFAULT_MAX_DEGREE,
             attempts: int = DEFAULT_ATTEMPTS) -> TransferResult:
    """α*g for α a correspondence or a generic cycle and g regular on the target."""
    cycle = alpha.generic_fiber(attempts) if isinstance(alpha, Correspondence) else alpha
    functions = _as_functions(plugin, g)
    values = [_point_value(plugin, functions, p.field, p.coordinates) for p in _live_points(cycle)]
    value, checked = _cycle_transfer(cycle, plugin, values, max_degree)
    check_transfer_value(plugin, value)
    flags = []
    if isinstance(alpha, Correspondence) and not alpha.source.function_field(attempts).normal_verified:
        flags.append(f"{alpha.source.name} is not known to be normal; the value is the generic one")
    logger.info("Transfer along %s: %s (%d oracle checks)",
                getattr(alpha, "name", "cycle"), plugin.render(value), checked)
    return TransferResult(value, _is_regular(plugin, cycle.base, value), plugin, checked, flags)


def additivity_check(alpha: Correspondence, other: Correspondence, plugin, g,
                     max_degree: int = DEFAULT_MAX_DEGREE, attempts: int = DEFAULT_ATTEMPTS) -> bool:
    """(α + α′)*g against α*g combined with α′*g in the plugin's group law."""
    whole = transfer(alpha + other, plugin, g, max_degree, attempts).value
    parts = plugin.combine(transfer(alpha, plugin, g, max_degree, attempts).value,
                           transfer(other, plugin, g, max_degree, attempts).value)
    holds = whole == parts
    logger.info("Additivity for %s, %s with %s: %s", alpha.name, other.name, plugin.name,
                "holds" if holds else "fails")
    return holds


# -- functoriality -----------------------------------------------------------

def _rational_function(variety, value, attempts: int) -> tuple[MultiPoly, MultiPoly]:
    """A K(Y)-value as num/den in k[Y] through Y's function-field model."""
    model = variety.function_field(attempts)
    images = {name: MultiPoly.variable(variety.base, variety.variables, var)
              for name, var in model.level_variables.items()}
    return to_fraction(model.field.coerce(value), images, variety.base, variety.variables)


def _evaluate_fraction(fraction, field, coordinates):
    num, den = fraction
    d = field.coerce(den.evaluate(list(coordinates)))
    if not d:
        raise NotRegularizable("the pulled-back value has a pole at a cycle point")
    return field.coerce(num.evaluate(list(coordinates))) / d


@dataclass
class FunctorialityResult:
    holds: bool
    left: object
    right: object
    plugin: object

    def render(self) -> str:
        return self.plugin.render(self.right)


def functoriality_check(alpha: Correspondence, beta: Correspondence, plugin, g,
                        max_degree: int = DEFAULT_MAX_DEGREE,
                        attempts: int = DEFAULT_ATTEMPTS) -> FunctorialityResult:
    """α*(β*g) against (β∘α)*g, both at the generic point of α's source."""
    right = transfer(compose(alpha, beta, attempts), plugin, g, max_degree, attempts).value
    inner = transfer(beta, plugin, g, max_degree, attempts).value
    inner_values = inner if plugin.kind == "product" else (inner,)
    fractions = [_rational_function(beta.source, v, attempts) for v in inner_values]
    cycle = alpha.generic_fiber(attempts)
    point_values = []
    for p in _live_points(cycle):
        vals = tuple(_evaluate_fraction(f, p.field, p.coordinates) for f in fractions)
        for factor, v in zip(plugin.factors, vals):
            if factor.kind == "multiplicative" and not v:
                raise NotInvertibleAtPoint(f"β*g vanishes at a point of {alpha.name}")
        point_values.append(vals if plugin.kind == "product" else vals[0])
    left, _ = _cycle_transfer(cycle, plugin, point_values, max_degree)
    holds = left == right
    logger.info("Functoriality for %s, %s with %s: %s", alpha.name, beta.name, plugin.name,
                "holds" if holds else "fails")
    return FunctorialityResult(holds, left, right, plugin)


# -- radicial transfers ------------------------------------------------------

@dataclass
class RadicialResult:
    value: object
    degree: int
    matches_transfer: bool
    plugin: object

    def render(self) -> str:
        return self.plugin.render(self.value)


def radicial_degree(field, base) -> int:
    """[L:K] for L/K purely inseparable step by step (each step t^(p^e) − a)."""
    degree = 1
    p = base.characteristic
    for level in field.levels[len(base.levels):]:
        if not isinstance(level, AlgebraicExtension):
            raise NotRadicial(f"{level} is not algebraic over {base}")
        mu = level.minpoly
        d = mu.deg
        inseparable = p > 0 and all(not c for c in mu.coeffs[1:-1])
        q = d
        while p and q % p == 0:
            q //= p
        if d > 1 and (not inseparable or q != 1):
            raise NotRadicial(f"{mu.render(level.name)} is not of the form t^(p^e) - a")
        degree *= d
    return degree


def radicial_transfer(v: Correspondence, plugin, g, max_degree: int = DEFAULT_MAX_DEGREE,
                      attempts: int = DEFAULT_ATTEMPTS) -> RadicialResult:
    """t_V(g): the h in K with p*h = d·q*g in L, checked against [V]*g."""
    cycle = v.generic_fiber(attempts)
    if len(cycle.points) != 1 or cycle.points[0].multiplicity != 1:
        raise NotRadicial(f"{v.name} must be a single component of multiplicity one")
    point = cycle.points[0]
    base = cycle.base
    d = radicial_degree(point.field, base)
    functions = _as_functions(plugin, g)
    value = _point_value(plugin, functions, point.field, point.coordinates)
    scaled = plugin.multiple(value, d)
    try:
        if plugin.kind == "product":
            h = tuple(point.field.descend(x, base) for x in scaled)
        else:
            h = point.field.descend(scaled, base)
    except NotInSubfield:
        raise NotInSubfield(f"d·q*g for {v.name} does not descend to {base}")
    expected = transfer(v, plugin, g, max_degree, attempts).value
    return RadicialResult(h, d, h == expected, plugin)


@dataclass
class CharacterizationRow:
    label: str
    holds: bool
    claimed: object
    actual: object


def characterization_check(assignment, max_degree: int = DEFAULT_MAX_DEGREE) -> list[CharacterizationRow]:
    """Compare claimed transfer values on radicial data with t_V(g).

    `assignment` is a list of (label, V, plugin, g, claimed value).
    """
    rows = []
    for label, v, plugin, g, claimed in assignment:
        actual = radicial_transfer(v, plugin, g, max_degree).value
        rows.append(CharacterizationRow(label, claimed == actual, claimed, actual))
    return rows


# -- injectivity and specialization ------------------------------------------

@dataclass
class InjectivityResult:
    applicable: bool
    holds: bool


def dominant_injectivity_check(variety, g: MultiPoly, h: MultiPoly,
                               attempts: int = DEFAULT_ATTEMPTS) -> InjectivityResult:
    """If g and h agree at the generic point of Y they agree modulo Y's ideal."""
    model = variety.function_field(attempts)
    coords = list(model.coordinates)
    if g.evaluate(coords) != h.evaluate(coords):
        return InjectivityResult(False, True)
    gb = buchberger(variety.ideal)
    return InjectivityResult(True, gb.contains(g - h))


def specialize_cycle(alpha: Correspondence, point, attempts: int = DEFAULT_ATTEMPTS) -> GenericCycle:
    """The cycle of α over a closed point of X, with lengths as multiplicities."""
    coords = [alpha.source.base.coerce(c) for c in point]
    cycle = GenericCycle(alpha.source.base, alpha.target)
    for ideal, m in alpha.components:
        fiber = buchberger(fiber_ideal(ideal, coords))
        if fiber.is_unit():
            continue
        for p in decompose_zero_dim(quotient_basis(fiber), attempts):
            cycle.points.append(CyclePoint(p.field, p.coordinates, m * p.length))
    return cycle


def specialization_check(alpha: Correspondence, plugin, g, point,
                         max_degree: int = DEFAULT_MAX_DEGREE,
                         attempts: int = DEFAULT_ATTEMPTS) -> bool:
    """Transfer then specialize x̄ = point, against specialize then transfer."""
    generic = transfer(alpha, plugin, g, max_degree, attempts).value
    values = generic if plugin.kind == "product" else (generic,)
    base = alpha.source.base
    coords = [base.coerce(c) for c in point]
    specialized = tuple(_evaluate_fraction(_rational_function(alpha.source, v, attempts), base, coords)
                        for v in values)
    left = specialized if plugin.kind == "product" else specialized[0]
    right = transfer(specialize_cycle(alpha, point, attempts), plugin, g, max_degree, attempts).value
    return left == right
