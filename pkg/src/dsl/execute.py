"""Run a parsed worksheet and collect a Report."""

import logging
from dataclasses import dataclass, field

from correspondence import AffineVariety, Correspondence, associativity_check, compose
from errors import ClosureUnavailable, ScriptError, ScriptExecutionError, ScriptTypeError, TransferError
from kernel.factor import checked_extension
from kernel.fields import GF, QQ, RationalFunctionField
from kernel.mpoly import MultiPoly
from plugins import Product, builtin
from dsl.parser import Command, CorrespondenceDecl, FieldDecl, Name, Neg, Num, PluginDecl, Script
from suites import run_lemma_suites
from transfer import functoriality_check, radicial_transfer, transfer

logger = logging.getLogger("transfers.dsl.execute")


@dataclass
class ReportRow:
    label: str
    status: str
    value: str | None = None


@dataclass
class Report:
    command: str
    results: list = field(default_factory=list)
    flags: list = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(r.status == "fail" for r in self.results)

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def flag(self, message: str) -> None:
        if message not in self.flags:
            self.flags.append(message)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "results": [{"label": r.label, "status": r.status, "value": r.value} for r in self.results],
            "flags": list(self.flags),
        }


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


class Worksheet:
    """Declared fields, varieties, correspondences and plugins, in statement order."""

    def __init__(self, settings: dict):
        self.settings = settings
        self.attempts = settings["separating_form_attempts"]
        self.max_degree = settings["max_degree"]
        self.fields = {}
        self.varieties = {}
        self.corrs = {}
        self.plugins = {}

    # -- expressions --------------------------------------------------------

    def polynomial(self, e, base, variables, where):
        """Evaluate an expression in base[variables]; generator names are constants."""
        constants = dict(base.generators())
        return self._poly(e, base, tuple(variables), constants, where)

    def _poly(self, e, base, variables, constants, where):
        if isinstance(e, Num):
            return MultiPoly.constant(base, variables, e.value)
        if isinstance(e, Name):
            if e.name in variables:
                return MultiPoly.variable(base, variables, e.name)
            return MultiPoly.constant(base, variables, constants[e.name])
        if isinstance(e, Neg):
            return -self._poly(e.operand, base, variables, constants, where)
        if e.op == "^":
            if not isinstance(e.right, Num):
                raise ScriptTypeError("exponents must be non-negative integer literals",
                                      where.line, where.column)
            return self._poly(e.left, base, variables, constants, where) ** e.right.value
        left = self._poly(e.left, base, variables, constants, where)
        right = self._poly(e.right, base, variables, constants, where)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        if e.op == "*":
            return left * right
        if not right.is_constant() or not right:
            raise ScriptTypeError("division is only by nonzero constants", where.line, where.column)
        return left.scale(right.constant_coeff().inverse())

    # -- declarations -------------------------------------------------------

    def field_of(self, name: str):
        if name == "Q" and name not in self.fields:
            return QQ
        return self.fields[name]

    def declare_field(self, s: FieldDecl, report: Report) -> None:
        if s.kind == "rational":
            self.fields[s.name] = QQ
            return
        if s.kind == "prime":
            try:
                self.fields[s.name] = GF(s.prime)
            except ValueError as e:
                raise ScriptTypeError(str(e), s.line, s.column)
            return
        base = self.field_of(s.base)
        if s.kind == "transcendental":
            tower = base
            for t in s.transcendentals:
                tower = RationalFunctionField(tower, t)
            self.fields[s.name] = tower
            return
        poly = self.polynomial(s.minpoly, base, (s.generator,), s).to_upoly(0)
        if poly.deg < 1:
            raise ScriptTypeError(f"minimal polynomial of {s.generator} is constant", s.line, s.column)
        tower, verified = checked_extension(
            base, s.generator, poly.monic(),
            policy=self.settings["check_irreducibility"],
            degree_bound=self.settings["irreducibility_degree_bound"],
            shift_attempts=self.settings["trager_shift_attempts"])
        if not verified:
            report.flag(f"irreducibility of {poly.monic().render(s.generator)} over {base} "
                        f"asserted, not verified")
        self.fields[s.name] = tower

    def declare_correspondence(self, s: CorrespondenceDecl) -> None:
        source, target = self.varieties[s.source], self.varieties[s.target]
        variables = source.variables + target.variables
        components = [([self.polynomial(g, source.base, variables, s) for g in gens], m)
                      for m, gens in s.components]
        self.corrs[s.name] = Correspondence(s.name, source, target, components)

    def plugin(self, spec):
        if len(spec.parts) == 1 and spec.parts[0][1] is None and spec.parts[0][0] in self.plugins:
            return self.plugins[spec.parts[0][0]]
        parts = [builtin(name, order) for name, order in spec.parts]
        return parts[0] if len(parts) == 1 else Product(parts)

    def functions(self, s: Command, variety: AffineVariety) -> list:
        return [self.polynomial(f, variety.base, variety.variables, s) for f in s.functions]

    # -- commands -----------------------------------------------------------

    def valid(self, name: str) -> Correspondence:
        corr = self.corrs[name]
        corr.ensure_valid(self.attempts)
        return corr

    def run_command(self, s: Command, report: Report) -> None:
        rows = report.results
        label = s.render().rstrip(";")
        if s.kind == "degree":
            corr = self.valid(s.args[0])
            rows.append(ReportRow(label, "pass", str(corr.generic_fiber(self.attempts).degree())))
        elif s.kind == "compose":
            alpha, beta = self.valid(s.args[0]), self.valid(s.args[1])
            cycle = compose(alpha, beta, self.attempts)
            rows.append(ReportRow(label, _status(cycle.check_on_target()), cycle.render()))
        elif s.kind == "transfer":
            alpha = self.valid(s.args[0])
            plugin = self.plugin(s.plugin)
            result = transfer(alpha, plugin, self.functions(s, alpha.target), self.max_degree, self.attempts)
            for message in result.flags:
                report.flag(message)
            if not result.regular:
                report.flag(f"{label}: value is not regular on {alpha.source.name}")
            rows.append(ReportRow(label, "pass", result.render()))
        elif s.kind == "verify_functoriality":
            alpha, beta = self.valid(s.args[0]), self.valid(s.args[1])
            plugin = self.plugin(s.plugin)
            result = functoriality_check(alpha, beta, plugin, self.functions(s, beta.target),
                                         self.max_degree, self.attempts)
            value = result.render() if result.holds else \
                f"{plugin.render(result.left)} vs {plugin.render(result.right)}"
            rows.append(ReportRow(label, _status(result.holds), value))
        elif s.kind == "verify_associativity":
            alpha, beta, gamma = (self.valid(a) for a in s.args)
            try:
                rows.append(ReportRow(label, _status(associativity_check(alpha, beta, gamma, self.attempts))))
            except ClosureUnavailable as e:
                report.flag(f"{label}: {e}")
                rows.append(ReportRow(label, "unverified"))
        elif s.kind == "radicial":
            v = self.valid(s.args[0])
            plugin = self.plugin(s.plugin)
            result = radicial_transfer(v, plugin, self.functions(s, v.target), self.max_degree, self.attempts)
            rows.append(ReportRow(label, _status(result.matches_transfer), result.render()))
        elif s.kind == "explain":
            cycle = self.valid(s.args[0]).generic_fiber(self.attempts)
            for i, line in enumerate(cycle.explain(), start=1):
                rows.append(ReportRow(f"{label}: point {i}", "pass", line))
        elif s.kind == "validate":
            for row in self.corrs[s.args[0]].validate(attempts=self.attempts):
                rows.append(ReportRow(row.label, row.status, row.detail or None))
        elif s.kind == "verify_lemmas":
            options = dict(s.options)
            seed = int(options.get("seed", self.settings["seed"]))
            size = options.get("size", "small")
            for result in run_lemma_suites(seed, size, self.settings):
                rows.append(ReportRow(f"{label}: {result.family}", result.status,
                                      f"{result.passed}/{result.passed + result.failed}"))

    def run(self, s, report: Report) -> None:
        if isinstance(s, FieldDecl):
            self.declare_field(s, report)
        elif isinstance(s, CorrespondenceDecl):
            self.declare_correspondence(s)
        elif isinstance(s, PluginDecl):
            self.plugins[s.name] = self.plugin(s.spec)
        elif isinstance(s, Command):
            self.run_command(s, report)
        else:
            base = self.field_of(s.field)
            gens = [self.polynomial(g, base, s.variables, s) for g in s.generators]
            self.varieties[s.name] = AffineVariety(s.name, base, s.variables, gens)


def execute(script: Script, settings: dict) -> Report:
    """Run the statements in order; module errors carry the statement location."""
    report = Report("\n".join(c.render() for c in script.commands))
    sheet = Worksheet(settings)
    for s in script.statements:
        logger.info("Line %d: %s", s.line, s.render())
        try:
            sheet.run(s, report)
        except ScriptError:
            raise
        except (TransferError, ValueError) as e:
            raise ScriptExecutionError(e, s.line, s.column) from e
    return report
