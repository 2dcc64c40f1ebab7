"""Lemma battery on generated instances.

Each family builds its instances from one ``random.Random(seed)`` and runs a
check from ``sympower.checks``, the radicial transfer, or a functoriality,
additivity or associativity check on each of them.
A failed property is counted, never raised.
"""

import logging
import random
from dataclasses import dataclass, field as dataclass_field

from correspondence import AffineVariety, Correspondence, associativity_check
from errors import TransferError
from ideals.groebner import Ideal, buchberger
from ideals.quotient import quotient_basis
from kernel.fields import GF, QQ, AlgebraicExtension
from kernel.mpoly import MultiPoly
from kernel.upoly import UPoly
from plugins import GA, GM, RootsOfUnity
from sympower.algebra import FiniteFreeAlgebra, random_local_algebra
from sympower.checks import (
    base_change_check,
    coproduct_pushforward_check,
    diagonal_algebra,
    field_norm_trace_check,
    p_diagram_check,
    reduction_check,
    reduction_scheme_check,
    split_algebra_check,
)
from sympower.umap import u_basis_independence_check
from transfer import additivity_check, characterization_check, functoriality_check, radicial_transfer

logger = logging.getLogger("transfers.suites")

FAMILIES = (
    "reduction",
    "field_norm_trace",
    "p_diagram",
    "reduction_scheme",
    "split_algebra",
    "coproduct",
    "base_change",
    "basis_independence",
    "radicial",
    "functoriality",
    "associativity",
)

ELEMENTS_PER_EXTENSION = 5

CHAIN_FIELDS = (QQ, GF(5), GF(7))
CHAIN_NAMES = ("y", "z", "w")
NON_SQUARES = {0: (2, 3, 5, -1), 5: (2, 3), 7: (3, 5, 6)}
ROOTS_OF_UNITY = {0: (2, -1), 5: (4, 2), 7: (3, 2)}


@dataclass
class SuiteResult:
    family: str
    passed: int = 0
    failed: int = 0
    failures: list = dataclass_field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if not self.failed else "fail"

    def record(self, label: str, ok: bool) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(label)


# -- instance builders -------------------------------------------------------

def _upoly(field, coeffs) -> UPoly:
    return UPoly(field, [field.coerce(c) for c in coeffs])


def monomial_algebra(field, variables, exponents) -> FiniteFreeAlgebra:
    """field[variables] modulo the given monomials."""
    gens = [MultiPoly(field, variables, {tuple(e): 1}) for e in exponents]
    return FiniteFreeAlgebra.from_quotient(quotient_basis(buchberger(Ideal(field, tuple(variables), tuple(gens)))))


def _fixed_local_algebras(field) -> list[tuple[str, FiniteFreeAlgebra]]:
    out = [(f"{field}[t]/(t^{d})", monomial_algebra(field, ("t",), [(d,)])) for d in range(1, 6)]
    out.append((f"{field}[x,y]/(x^2,xy,y^2)", monomial_algebra(field, ("x", "y"), [(2, 0), (1, 1), (0, 2)])))
    out.append((f"{field}[x,y]/(x^2,y^2)", monomial_algebra(field, ("x", "y"), [(2, 0), (0, 2)])))
    return out


def local_algebras(rng: random.Random, count: int) -> list[tuple[str, FiniteFreeAlgebra]]:
    fixed = _fixed_local_algebras(QQ) + _fixed_local_algebras(GF(5))
    out = fixed[:count]
    fields = [QQ, GF(3), GF(5), GF(7)]
    while len(out) < count:
        field = fields[len(out) % len(fields)]
        out.append((f"random local over {field}", random_local_algebra(field, rng)))
    return out


def extensions() -> list[tuple[str, object, object]]:
    """(label, L, K) with L finite over its prefix K."""
    out = []
    for n in (2, 3, 5, -1, -3, 7):
        out.append((f"Q(sqrt({n}))", AlgebraicExtension(QQ, "a", _upoly(QQ, [-n, 0, 1])), QQ))
    out.append(("Q(2^(1/3))", AlgebraicExtension(QQ, "a", _upoly(QQ, [-2, 0, 0, 1])), QQ))
    out.append(("Q[a]/(a^3 - a - 1)", AlgebraicExtension(QQ, "a", _upoly(QQ, [-1, -1, 0, 1])), QQ))
    for p, coeffs in ((2, [1, 1, 1]), (3, [1, 0, 1]), (5, [1, 1, 0, 1]), (2, [1, 1, 0, 0, 1]),
                      (7, [1, 0, 1]), (3, [1, 2, 0, 1])):
        k = GF(p)
        out.append((f"GF({p}^{len(coeffs) - 1})", AlgebraicExtension(k, "a", _upoly(k, coeffs)), k))
    sqrt2 = AlgebraicExtension(QQ, "a", _upoly(QQ, [-2, 0, 1]))
    tower = AlgebraicExtension(sqrt2, "b", UPoly(sqrt2, [-sqrt2.gen, sqrt2.zero, sqrt2.one]))
    out.append(("Q(sqrt(2))(sqrt(sqrt(2))) over Q", tower, QQ))
    out.append(("Q(sqrt(2))(sqrt(sqrt(2))) over Q(sqrt(2))", tower, sqrt2))
    k = GF(2)
    f4 = AlgebraicExtension(k, "a", _upoly(k, [1, 1, 1]))
    f16 = AlgebraicExtension(f4, "b", UPoly(f4, [f4.gen, f4.one, f4.one]))
    out.append(("GF(16) over GF(2)", f16, k))
    return out


def _unit(algebra: FiniteFreeAlgebra, rng: random.Random) -> list:
    g = [algebra.base.random_element(rng) for _ in range(algebra.rank)]
    while not algebra.is_unit(g):
        g = algebra.add(g, algebra.one())
    return g


def _point(algebra: FiniteFreeAlgebra, plugin, rng: random.Random) -> list:
    if plugin.kind == "multiplicative":
        return _unit(algebra, rng)
    return [algebra.base.random_element(rng) for _ in range(algebra.rank)]


def algebra_pairs(rng: random.Random, count: int) -> list[tuple[str, FiniteFreeAlgebra, FiniteFreeAlgebra]]:
    """Pairs over one base with rank sum at most 6."""
    pools = {}
    for label, field, over in extensions():
        if field.degree_over(over) <= 3 and over in (QQ, GF(5), GF(3)):
            pools.setdefault(over, []).append((label, FiniteFreeAlgebra.from_extension(field, over)))
    for field in (QQ, GF(5), GF(3)):
        for d in (1, 2, 3):
            pools.setdefault(field, []).append(
                (f"{field}[t]/(t^{d})", monomial_algebra(field, ("t",), [(d,)])))
    bases = sorted(pools, key=str)
    out = []
    while len(out) < count:
        pool = pools[bases[len(out) % len(bases)]]
        (l1, b1), (l2, b2) = rng.choice(pool), rng.choice(pool)
        if b1.rank + b2.rank <= 6:
            out.append((f"{l1} x {l2}", b1, b2))
    return out


def split_algebras(rng: random.Random, count: int) -> list[tuple[str, FiniteFreeAlgebra]]:
    """field[x]/Π(x − r_i)^e_i over prime fields, total degree at most 5."""
    out = []
    primes = (5, 7, 11)
    while len(out) < count:
        p = primes[len(out) % len(primes)]
        k = GF(p)
        roots = rng.sample(range(p), rng.randint(1, 3))
        f = UPoly.one(k)
        exps = []
        for r in roots:
            e = rng.randint(1, 2)
            exps.append(e)
            f = f * _upoly(k, [-r, 1]) ** e
        if f.deg > 5:
            continue
        poly = MultiPoly.from_upoly(f, ("x",))
        quotient = quotient_basis(buchberger(Ideal(k, ("x",), (poly,))))
        out.append((f"GF({p})[x]/({f.render('x')})", FiniteFreeAlgebra.from_quotient(quotient)))
    return out


def radicial_data() -> list[tuple[str, Correspondence]]:
    """Purely inseparable V over 𝔸¹(s) in characteristic p.

    Single steps [t^(p^e) − s] into 𝔸¹(t), and the two-step tower
    t1^p = s, t2^p = t1 into 𝔸²(t2, t1), whose generic point is a field
    with two levels over k(s).
    """
    out = []
    for p, e, shift in ((2, 1, 0), (3, 1, 0), (5, 1, 0), (2, 2, 0), (2, 1, 1), (3, 1, 1)):
        k = GF(p)
        x = AffineVariety("X", k, ("s",))
        y = AffineVariety("Y", k, ("t",))
        variables = ("s", "t")
        s = MultiPoly.variable(k, variables, "s")
        t = MultiPoly.variable(k, variables, "t")
        q = p ** e
        out.append((f"t^{q} - s{' - 1' if shift else ''} over GF({p})",
                    Correspondence(f"V{len(out)}", x, y, [([t ** q - s - shift], 1)])))
    k = GF(2)
    variables = ("s", "t2", "t1")
    s, t2, t1 = (MultiPoly.variable(k, variables, v) for v in variables)
    tower = Correspondence(f"V{len(out)}", AffineVariety("X", k, ("s",)), AffineVariety("Y", k, ("t2", "t1")),
                           [([t1 ** 2 - s, t2 ** 2 - t1], 1)])
    out.append(("t2^2 - t1, t1^2 - s over GF(2)", tower))
    return out


def _nonzero(field, rng: random.Random):
    c = field.random_element(rng)
    while not c:
        c = field.random_element(rng)
    return c


def _random_step(source: AffineVariety, target: AffineVariety, rng: random.Random) -> list[MultiPoly]:
    """[v − h(u)] for a random non-constant h of degree at most 2, or [v² − u − b].

    From a point: a rational point [v − a] or [v² − a] with a a non-square.
    """
    k = source.base
    variables = source.variables + target.variables
    v = MultiPoly.variable(k, variables, target.variables[0])
    if not source.variables:
        if rng.random() < 0.5:
            return [v ** 2 - k.coerce(rng.choice(NON_SQUARES[k.characteristic]))]
        return [v - k.random_element(rng)]
    u = MultiPoly.variable(k, variables, source.variables[0])
    if rng.random() < 0.6:
        d = rng.randint(1, 2)
        h = u ** d * _nonzero(k, rng) + k.random_element(rng)
        if d == 2:
            h = h + u * k.random_element(rng)
        return [v - h]
    return [v ** 2 - u - k.random_element(rng)]


def correspondence_chains(rng: random.Random, count: int, source_dim: int,
                          length: int) -> list[tuple[str, list[Correspondence]]]:
    """Composable chains X → 𝔸¹(y) → 𝔸¹(z) → … over ℚ, 𝔽_5 or 𝔽_7, with X = 𝔸⁰ or 𝔸¹(x)."""
    out = []
    for i in range(count):
        k = CHAIN_FIELDS[i % len(CHAIN_FIELDS)]
        spaces = [AffineVariety("X", k, ("x",) if source_dim else ())]
        spaces += [AffineVariety(name.upper(), k, (name,)) for name in CHAIN_NAMES[:length]]
        chain = [Correspondence(f"c{j + 1}", src, dst, [(_random_step(src, dst, rng), 1)])
                 for j, (src, dst) in enumerate(zip(spaces, spaces[1:]))]
        out.append((f"{k}: " + "; ".join(c.render() for c in chain), chain))
    return out


@dataclass
class FunctorialityInstance:
    """α: 𝔸¹(x) → 𝔸¹(y), β and β′: 𝔸¹(y) → 𝔸¹(z), and a plugin point g on 𝔸¹(z)."""

    label: str
    alpha: Correspondence
    beta: Correspondence
    other: Correspondence
    plugin: object
    g: MultiPoly


def functoriality_instances(rng: random.Random, count: int) -> list[FunctorialityInstance]:
    """`count` chains, each with one g for 𝔾_a, 𝔾_m and μ_n."""
    out = []
    for _, (alpha, beta) in correspondence_chains(rng, count, 1, 2):
        k = alpha.source.base
        if rng.random() < 0.4:
            alpha = alpha + Correspondence("c1'", alpha.source, alpha.target,
                                           [(_random_step(alpha.source, alpha.target, rng), 2)])
        other = Correspondence("c2'", beta.source, beta.target,
                               [(_random_step(beta.source, beta.target, rng), rng.randint(1, 2))])
        label = f"{k}: {alpha.render()}; {beta.render()}"
        z = MultiPoly.variable(k, beta.target.variables, "z")
        n, zeta = ROOTS_OF_UNITY[k.characteristic]
        points = ((GA, z * _nonzero(k, rng) + k.random_element(rng)),
                  (GM, z + k.random_element(rng)),
                  (RootsOfUnity(n), MultiPoly.constant(k, beta.target.variables, zeta)))
        for plugin, g in points:
            out.append(FunctorialityInstance(label, alpha, beta, other, plugin, g))
    return out


# -- families ----------------------------------------------------------------

def _run(result: SuiteResult, label: str, check) -> None:
    try:
        ok = check()
    except (TransferError, ValueError) as e:
        logger.warning("%s: %s raised %s", result.family, label, e)
        ok = False
    result.record(label, ok)


def suite_reduction(rng, count):
    result = SuiteResult("reduction")
    for label, algebra in local_algebras(rng, count):
        _run(result, label, lambda: reduction_check(algebra))
    return result


def suite_field_norm_trace(rng, count):
    result = SuiteResult("field_norm_trace")
    exts = extensions()
    for i in range(count):
        label, field, over = exts[i % len(exts)]
        for _ in range(ELEMENTS_PER_EXTENSION):
            element = field.random_element(rng)
            _run(result, f"{label}: {element}", lambda: field_norm_trace_check(field, over, element))
    return result


def suite_p_diagram(rng, count):
    result = SuiteResult("p_diagram")
    for label, first, second in algebra_pairs(rng, count):
        _run(result, label, lambda: p_diagram_check(first, second))
    return result


def suite_reduction_scheme(rng, count):
    result = SuiteResult("reduction_scheme")
    for label, algebra in local_algebras(rng, count):
        for plugin in (GA, GM):
            g = _point(algebra, plugin, rng)
            _run(result, f"{label} {plugin.name}", lambda: reduction_scheme_check(algebra, plugin, g))
    return result


def suite_split_algebra(rng, count):
    result = SuiteResult("split_algebra")
    for label, algebra in split_algebras(rng, count):
        for plugin in (GA, GM):
            g = _point(algebra, plugin, rng)
            _run(result, f"{label} {plugin.name}", lambda: split_algebra_check(algebra, plugin, g))
    return result


def suite_coproduct(rng, count):
    result = SuiteResult("coproduct")
    for label, first, second in algebra_pairs(rng, count):
        plugin = rng.choice((GA, GM))
        g1, g2 = _point(first, plugin, rng), _point(second, plugin, rng)
        _run(result, f"{label} {plugin.name}",
             lambda: coproduct_pushforward_check(first, second, g1, g2, plugin))
    return result


def suite_base_change(rng, count):
    result = SuiteResult("base_change")
    targets = {QQ: AlgebraicExtension(QQ, "c", _upoly(QQ, [-2, 0, 1])),
               GF(5): AlgebraicExtension(GF(5), "c", _upoly(GF(5), [2, 0, 1]))}
    algebras = [(label, a) for label, a in local_algebras(rng, count * 2) if a.base in targets]
    for label, algebra in algebras[:count]:
        field = targets[algebra.base]
        plugin = rng.choice((GA, GM))
        g = _point(algebra, plugin, rng)
        _run(result, f"{label} to {field} {plugin.name}",
             lambda: base_change_check(algebra, field, plugin, g))
    return result


def suite_basis_independence(rng, count):
    result = SuiteResult("basis_independence")
    for label, algebra in local_algebras(rng, count):
        _run(result, label, lambda: u_basis_independence_check(algebra, rng=rng))
    return result


def _radicial_instance(v: Correspondence, rng: random.Random) -> bool:
    point = v.generic_fiber().points[0]
    base = v.generic_fiber().base
    variables = v.target.variables
    y = MultiPoly.variable(base.prime_field, variables, variables[0])
    g = y + rng.randrange(1, base.characteristic)
    for plugin in (GA, GM):
        r = radicial_transfer(v, plugin, g)
        if not r.matches_transfer:
            return False
        value = point.field.coerce(g.evaluate(list(point.coordinates)))
        if point.field.coerce(r.value) != plugin.multiple(value, r.degree):
            return False
        algebra, section = diagonal_algebra(point.field, base)
        coords = [point.field.coerce(c) for c in point.field.coordinates(value, base)]
        if not reduction_scheme_check(algebra, plugin, coords, section):
            return False
    canonical = [(f"{plugin.name}", v, plugin, g, radicial_transfer(v, plugin, g).value)
                 for plugin in (GA, GM)]
    perturbed = list(canonical)
    label, vv, plugin, gg, value = perturbed[0]
    perturbed[0] = (label, vv, plugin, gg, value + 1)
    rows = characterization_check(perturbed)
    return [row.holds for row in rows] == [False, True] and all(
        row.holds for row in characterization_check(canonical))


def suite_radicial(rng, count):
    result = SuiteResult("radicial")
    data = radicial_data()
    for i in range(count):
        label, v = data[i % len(data)]
        _run(result, label, lambda: _radicial_instance(v, rng))
    return result


def suite_functoriality(rng, count):
    result = SuiteResult("functoriality")
    for inst in functoriality_instances(rng, count):
        label = f"{inst.label} {inst.plugin.name}"
        _run(result, label, lambda: functoriality_check(inst.alpha, inst.beta, inst.plugin, inst.g).holds)
        _run(result, f"{label} additive",
             lambda: additivity_check(inst.beta, inst.other, inst.plugin, inst.g))
    return result


def suite_associativity(rng, count):
    result = SuiteResult("associativity")
    for label, (alpha, beta, gamma) in correspondence_chains(rng, count, 0, 3):
        _run(result, label, lambda: associativity_check(alpha, beta, gamma))
    return result


SUITES = {
    "reduction": suite_reduction,
    "field_norm_trace": suite_field_norm_trace,
    "p_diagram": suite_p_diagram,
    "reduction_scheme": suite_reduction_scheme,
    "split_algebra": suite_split_algebra,
    "coproduct": suite_coproduct,
    "base_change": suite_base_change,
    "basis_independence": suite_basis_independence,
    "radicial": suite_radicial,
    "functoriality": suite_functoriality,
    "associativity": suite_associativity,
}


def run_lemma_suites(seed: int, size: str, settings: dict) -> list[SuiteResult]:
    """Run every family with the instance counts configured for `size`."""
    counts = settings["suites"][size]
    results = []
    for family in FAMILIES:
        rng = random.Random(f"{seed}:{family}")
        result = SUITES[family](rng, counts[family])
        logger.info("Suite %s: %d passed, %d failed", family, result.passed, result.failed)
        results.append(result)
    return results
