"""Affine varieties, finite correspondences and their generic cycles.

Everything is computed at the generic point of the source: a correspondence
α = Σ m_i [V_i] from X to Y becomes the generic cycle Σ m_i (L_i, y_i) with
L_i = k(V_i) a finite extension of K = k(X) and y_i the image of Y's
coordinates in it.
"""

import itertools
import logging
from dataclasses import dataclass, field as dataclass_field

from errors import (
    ClosureUnavailable,
    InvalidComponent,
    NonIntegralComponent,
    NonIntegralVariety,
    TowerMismatch,
)
from ideals.decompose import (
    DEFAULT_ATTEMPTS,
    decompose_zero_dim,
    fiber_ideal,
    finite_over_first_block,
    function_field,
)
from ideals.groebner import Ideal, buchberger, is_zero_dimensional
from ideals.quotient import quotient_basis
from kernel.fields import RationalFunctionField
from kernel.mpoly import MultiPoly
from kernel.upoly import UPoly
from normalize import cycles_equal, normalize_cycle, render_cycle

logger = logging.getLogger("transfers.correspondence")


# -- varieties ---------------------------------------------------------------

@dataclass
class FunctionFieldModel:
    """K(X) with the images of X's coordinates and the variable behind each level."""

    field: object
    coordinates: tuple
    independent: tuple
    level_variables: dict
    normal_verified: bool


class AffineVariety:
    def __init__(self, name: str, base, variables, generators=(), declared_integral: bool = True):
        self.name = name
        self.base = base
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"repeated coordinate in {self.variables}")
        self.ideal = Ideal(base, self.variables, tuple(generators))
        self.declared_integral = declared_integral
        self._model: FunctionFieldModel | None = None

    def __repr__(self) -> str:
        return f"AffineVariety({self.name})"

    @property
    def is_affine_space(self) -> bool:
        return not self.ideal.generators

    def contains(self, coordinates) -> bool:
        return all(not g.evaluate(list(coordinates)) for g in self.ideal.generators)

    def function_field(self, attempts: int = DEFAULT_ATTEMPTS) -> FunctionFieldModel:
        """Designated model of k(X): a maximal independent set becomes transcendental.

        The generic fiber over the independent variables must be a single
        reduced point; its residue field is k(X).
        """
        if self._model is None:
            self._model = self._build_model(attempts)
        return self._model

    def _build_model(self, attempts: int) -> FunctionFieldModel:
        n = len(self.variables)
        if self.is_affine_space:
            field, gens = function_field(self.base, self.variables)
            levels = {lvl.name: v for lvl, v in zip(field.levels[len(self.base.levels):], self.variables)}
            return FunctionFieldModel(field, tuple(gens), tuple(range(n)), levels, True)
        gb = buchberger(self.ideal)
        if gb.is_unit():
            raise NonIntegralVariety(f"{self.name} is empty")
        for size in range(n, -1, -1):
            for subset in itertools.combinations(range(n), size):
                model = self._model_over(subset, attempts)
                if model is not None:
                    logger.info("Function field of %s: %s", self.name, model.field)
                    return model
        raise NonIntegralVariety(f"no function-field model for {self.name}")

    def _model_over(self, subset: tuple, attempts: int) -> FunctionFieldModel | None:
        order = list(subset) + [i for i in range(len(self.variables)) if i not in subset]
        names = [self.variables[i] for i in order]
        reordered = Ideal(self.base, tuple(names), tuple(g.embed(names) for g in self.ideal.generators))
        field, gens = function_field(self.base, names[:len(subset)])
        fiber = buchberger(fiber_ideal(reordered, gens))
        if fiber.is_unit():
            return None
        if not is_zero_dimensional(fiber):
            return None
        points = decompose_zero_dim(quotient_basis(fiber), attempts)
        if len(points) != 1 or points[0].length != 1:
            raise NonIntegralVariety(
                f"generic fiber of {self.name} over {', '.join(names[:len(subset)]) or 'k'} "
                f"is not a single reduced point")
        point = points[0]
        top = point.field
        values = list(gens) + list(point.coordinates)
        coordinates = [None] * len(self.variables)
        for i, v in zip(order, values):
            coordinates[i] = top.coerce(v)
        levels = {}
        for lvl, v in zip(field.levels[len(self.base.levels):], names):
            levels[lvl.name] = v
        for lvl in top.levels[len(field.levels):]:
            gen = top.coerce(lvl.gen)
            match = next((self.variables[i] for i, c in enumerate(coordinates) if c == gen), None)
            if match is None:
                raise NonIntegralVariety(f"cannot express {lvl.name} through the coordinates of {self.name}")
            levels[lvl.name] = match
        return FunctionFieldModel(top, tuple(coordinates), tuple(subset), levels, False)


# -- generic cycles ----------------------------------------------------------

@dataclass
class CyclePoint:
    field: object
    coordinates: tuple
    multiplicity: int

    def degree_over(self, base) -> int:
        return self.field.degree_over(base)


@dataclass
class GenericCycle:
    base: object
    target: AffineVariety
    points: list = dataclass_field(default_factory=list)

    def degree(self) -> int:
        return sum(p.multiplicity * p.degree_over(self.base) for p in self.points)

    def scaled(self, m: int) -> "GenericCycle":
        return GenericCycle(self.base, self.target,
                            [CyclePoint(p.field, p.coordinates, p.multiplicity * m) for p in self.points])

    def __add__(self, other: "GenericCycle") -> "GenericCycle":
        if other.base != self.base or other.target is not self.target:
            raise TowerMismatch("cycles over different bases or targets")
        return GenericCycle(self.base, self.target, self.points + other.points)

    def check_on_target(self) -> bool:
        return all(self.target.contains(p.coordinates) for p in self.points)

    def render(self) -> str:
        return render_cycle(normalize_cycle(self))

    def explain(self) -> list[str]:
        lines = []
        for p in self.points:
            coords = ", ".join(f"{v}={c}" for v, c in zip(self.target.variables, p.coordinates))
            lines.append(f"{p.multiplicity} × [{coords}] over {p.field} "
                         f"(degree {p.degree_over(self.base)})")
        return lines


@dataclass
class ValidationRow:
    label: str
    status: str
    detail: str = ""


@dataclass
class PulledPoint:
    field: object
    coordinates: tuple
    length: int
    multiplicity: int


# -- correspondences ---------------------------------------------------------

class Correspondence:
    def __init__(self, name: str, source: AffineVariety, target: AffineVariety,
                 components: list[tuple[list, int]]):
        if set(source.variables) & set(target.variables):
            raise ValueError(f"{source.name} and {target.name} share coordinate names")
        if source.base != target.base:
            raise TowerMismatch(f"{source.name} and {target.name} live over different fields")
        self.name = name
        self.source = source
        self.target = target
        self.variables = source.variables + target.variables
        self.components = []
        self.declared = []
        for gens, m in components:
            extra = tuple(g.embed(self.variables) for g in source.ideal.generators + target.ideal.generators)
            ideal = Ideal(source.base, self.variables, tuple(gens) + extra)
            self.components.append((ideal, int(m)))
            self.declared.append(tuple(g.embed(self.variables) for g in gens))
        self._cycle: GenericCycle | None = None

    def __repr__(self) -> str:
        return f"Correspondence({self.name}: {self.source.name} -> {self.target.name})"

    @classmethod
    def graph(cls, name: str, source: AffineVariety, target: AffineVariety, images) -> "Correspondence":
        """Graph of the morphism y_j = images[j](x̄)."""
        variables = source.variables + target.variables
        gens = []
        for y, f in zip(target.variables, images):
            gens.append(MultiPoly.variable(source.base, variables, y) - f.embed(variables))
        return cls(name, source, target, [(gens, 1)])

    def __add__(self, other: "Correspondence") -> "Correspondence":
        """Formal sum: the components of both, with their multiplicities."""
        if (other.source.variables != self.source.variables or other.target.variables != self.target.variables
                or other.source.base != self.source.base):
            raise TowerMismatch(f"cannot add {self.name} and {other.name}: different source or target")
        parts = [(list(gens), m) for gens, (_, m) in zip(self.declared + other.declared,
                                                         self.components + other.components)]
        return Correspondence(f"{self.name} + {other.name}", self.source, self.target, parts)

    @property
    def split(self) -> int:
        return len(self.source.variables)

    def render(self) -> str:
        parts = []
        for own, (_, m) in zip(self.declared, self.components):
            parts.append(f"{m}*[{', '.join(g.render() for g in own)}]")
        return " + ".join(parts) or "0"

    # -- validity ---------------------------------------------------------

    def validate(self, test_points=(), attempts: int = DEFAULT_ATTEMPTS) -> list[ValidationRow]:
        rows = []
        model = self.source.function_field(attempts)
        for k, (ideal, m) in enumerate(self.components, start=1):
            label = f"{self.name} component {k}"
            finite = finite_over_first_block(ideal, self.split, test_points)
            rows.append(ValidationRow(f"{label}: finite over {self.source.name}",
                                      "pass" if finite else "fail"))
            try:
                points = self._generic_points(ideal, model, attempts)
            except InvalidComponent as e:
                rows.append(ValidationRow(f"{label}: generic fiber", "fail", e.reason))
                continue
            if not points:
                rows.append(ValidationRow(f"{label}: dominant over {self.source.name}", "fail",
                                          "empty generic fiber"))
                continue
            rows.append(ValidationRow(f"{label}: dominant over {self.source.name}", "pass"))
            if len(points) == 1 and points[0].length == 1:
                rows.append(ValidationRow(f"{label}: generic fiber integral", "pass"))
            else:
                rows.append(ValidationRow(f"{label}: generic fiber integral", "fail",
                                          f"{len(points)} points, lengths "
                                          f"{[p.length for p in points]}"))
            rows.append(ValidationRow(f"{label}: flat away from the generic point", "unverified",
                                      "only the generic fiber is certified"))
        if not model.normal_verified:
            rows.append(ValidationRow(f"{self.source.name}: normal", "unverified",
                                      "normality is not checked beyond affine space"))
        return rows

    def ensure_valid(self, attempts: int = DEFAULT_ATTEMPTS) -> None:
        for row in self.validate(attempts=attempts):
            if row.status == "fail":
                raise InvalidComponent(f"{row.label}: {row.detail or 'failed'}", self.name)

    def _generic_points(self, ideal: Ideal, model: FunctionFieldModel, attempts: int):
        fiber = buchberger(fiber_ideal(ideal, model.coordinates))
        if fiber.is_unit():
            return []
        if not is_zero_dimensional(fiber):
            raise InvalidComponent("generic fiber is not finite", self.name)
        return decompose_zero_dim(quotient_basis(fiber), attempts)

    # -- generic point ----------------------------------------------------

    def generic_fiber(self, attempts: int = DEFAULT_ATTEMPTS) -> GenericCycle:
        if self._cycle is not None:
            return self._cycle
        model = self.source.function_field(attempts)
        cycle = GenericCycle(model.field, self.target)
        for k, (ideal, m) in enumerate(self.components, start=1):
            points = self._generic_points(ideal, model, attempts)
            if len(points) != 1 or points[0].length != 1:
                raise NonIntegralComponent(
                    f"component {k} of {self.name} has generic fiber with {len(points)} points "
                    f"of lengths {[p.length for p in points]}", self.name)
            cycle.points.append(CyclePoint(points[0].field, points[0].coordinates, m))
        self._cycle = cycle
        logger.info("Generic cycle of %s: %d points, degree %d", self.name, len(cycle.points),
                    cycle.degree())
        return cycle

    def degree(self) -> int:
        return self.generic_fiber().degree()


def pullback_along_point(beta: Correspondence, field, coordinates,
                         attempts: int = DEFAULT_ATTEMPTS) -> list[PulledPoint]:
    """Points of β over one point of its source, with lengths and β's multiplicities."""
    out = []
    for ideal, m in beta.components:
        fiber = buchberger(fiber_ideal(ideal, [field.coerce(c) for c in coordinates]))
        if fiber.is_unit():
            continue
        quotient = quotient_basis(fiber)
        for p in decompose_zero_dim(quotient, attempts):
            out.append(PulledPoint(p.field, p.coordinates, p.length, m))
    return out


def compose(alpha, beta: Correspondence, attempts: int = DEFAULT_ATTEMPTS) -> GenericCycle:
    """β∘α at the generic point of α's source; α is a correspondence or a generic cycle."""
    cycle = alpha.generic_fiber(attempts) if isinstance(alpha, Correspondence) else alpha
    if cycle.target is not beta.source and cycle.target.variables != beta.source.variables:
        raise TowerMismatch(f"cannot compose: target {cycle.target.name} is not {beta.source.name}")
    result = GenericCycle(cycle.base, beta.target)
    for point in cycle.points:
        for pulled in pullback_along_point(beta, point.field, point.coordinates, attempts):
            result.points.append(CyclePoint(pulled.field, pulled.coordinates,
                                            point.multiplicity * pulled.multiplicity * pulled.length))
    return result


def pushforward_cycle(cycle: GenericCycle, images, target: AffineVariety) -> GenericCycle:
    """Push a cycle along the morphism given by polynomials in the cycle target's coordinates."""
    out = GenericCycle(cycle.base, target)
    for p in cycle.points:
        coords = tuple(p.field.coerce(f.evaluate(list(p.coordinates))) for f in images)
        out.points.append(CyclePoint(p.field, coords, p.multiplicity))
    return out


def closure(cycle: GenericCycle, source: AffineVariety, name: str = "closure") -> Correspondence:
    """Component ideals over X for a cycle over k(X).

    Only for X affine space of dimension at most one and a target with one
    coordinate: each point's minimal polynomial is cleared of denominators
    and made primitive in the target coordinate.
    """
    target = cycle.target
    if not source.is_affine_space or len(source.variables) > 1 or len(target.variables) != 1:
        raise ClosureUnavailable(
            f"closure needs X = 𝔸⁰ or 𝔸¹ and a one-coordinate target, got {source.name}, {target.name}")
    variables = source.variables + target.variables
    components = []
    for p in normalize_cycle(cycle):
        mu = p.prime.polys[0].to_upoly(0) if p.prime.polys else None
        if mu is None:
            continue
        components.append(([_clear(mu, source, variables)], p.multiplicity))
    return Correspondence(name, source, target, components)


def _clear(mu: UPoly, source: AffineVariety, variables) -> MultiPoly:
    base = source.base
    z = len(variables) - 1
    if not source.variables:
        terms = {(i,): c for i, c in enumerate(mu.coeffs) if c}
        return MultiPoly(base, variables, terms)
    field = mu.field
    if not isinstance(field, RationalFunctionField):
        raise ClosureUnavailable(f"coefficients in {field} cannot be cleared")
    nums = []
    common = UPoly.one(base)
    for c in mu.coeffs:
        common = common * c.rep[1].exact_div(common.gcd(c.rep[1]))
    for c in mu.coeffs:
        num, den = c.rep
        nums.append(num * common.exact_div(den))
    content = UPoly.zero(base)
    for n in nums:
        content = content.gcd(n) if content else n.monic()
    terms = {}
    for i, n in enumerate(nums):
        for j, c in enumerate(n.exact_div(content).coeffs):
            if c:
                exp = [0] * len(variables)
                exp[0], exp[z] = j, i
                terms[tuple(exp)] = c
    return MultiPoly(base, variables, terms)


def associativity_check(alpha: Correspondence, beta: Correspondence, gamma: Correspondence,
                        attempts: int = DEFAULT_ATTEMPTS) -> bool:
    """(γ∘β)∘α = γ∘(β∘α); γ∘β is brought back to a correspondence by closure."""
    right = compose(compose(alpha, beta, attempts), gamma, attempts)
    gamma_beta = closure(compose(beta, gamma, attempts), beta.source, f"{gamma.name}∘{beta.name}")
    left = compose(alpha, gamma_beta, attempts)
    return cycles_equal(left, right)
