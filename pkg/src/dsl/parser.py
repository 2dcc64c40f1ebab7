"""Worksheet language: tokenizer, recursive-descent parser and canonical printer.

A worksheet is a sequence of statements ending in ``;``:

    field k = Q;
    field L = k(a : a^2 - 2);
    variety X over k vars (x) ideal ();
    corr alpha : X -> Y = 2*[y^2 - x] + -1*[y - x];
    plugin G = Ga*Gm;
    transfer alpha Gm (1 + y);

``parse`` also resolves names and checks plugin arities, so a Script it
returns can be executed statement by statement.
"""

import re
from dataclasses import dataclass, field

from errors import ScriptNameError, ScriptSyntaxError, ScriptTypeError

TOKEN_RE = re.compile(r"""
    (?P<space>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<int>[0-9]+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>->|[;=(),:\[\]+\-*/^])
""", re.VERBOSE)

PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 3, "^": 4}

COMMANDS = ("compose", "transfer", "degree", "verify", "radicial", "explain", "validate")
VERIFY_KINDS = ("functoriality", "lemmas", "associativity")
BUILTIN_PLUGINS = ("Ga", "Gm", "Mu")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, start = 1, 0
    pos = 0
    while pos < len(text):
        m = TOKEN_RE.match(text, pos)
        column = pos - start + 1
        if m is None:
            raise ScriptSyntaxError(text[pos], ["a token"], line, column)
        kind = m.lastgroup
        if kind == "newline":
            line, start = line + 1, m.end()
        elif kind not in ("space", "comment"):
            tokens.append(Token(kind, m.group(), line, column))
        pos = m.end()
    tokens.append(Token("eof", "end of input", line, pos - start + 1))
    return tokens


# -- syntax tree -------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    name: str
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


def _prec(e) -> int:
    if isinstance(e, BinOp):
        return PRECEDENCE[e.op]
    if isinstance(e, Neg):
        return PRECEDENCE["neg"]
    return 5


def render_expr(e) -> str:
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Name):
        return e.name
    if isinstance(e, Neg):
        inner = render_expr(e.operand)
        return f"-({inner})" if _prec(e.operand) < PRECEDENCE["neg"] else f"-{inner}"
    p = PRECEDENCE[e.op]
    left, right = render_expr(e.left), render_expr(e.right)
    if e.op == "^":
        if _prec(e.left) <= p:
            left = f"({left})"
        if _prec(e.right) < p:
            right = f"({right})"
    else:
        if _prec(e.left) < p:
            left = f"({left})"
        if _prec(e.right) < p or (_prec(e.right) == p and e.op in "-/"):
            right = f"({right})"
    sep = f" {e.op} " if p == 1 else e.op
    return f"{left}{sep}{right}"


def expr_names(e) -> list[Name]:
    if isinstance(e, Name):
        return [e]
    if isinstance(e, Neg):
        return expr_names(e.operand)
    if isinstance(e, BinOp):
        return expr_names(e.left) + expr_names(e.right)
    return []


@dataclass(frozen=True)
class PluginSpec:
    """Factors as (name, order); order is only set for Mu."""

    parts: tuple

    def render(self) -> str:
        return "*".join(f"{n}({o})" if o is not None else n for n, o in self.parts)


@dataclass(frozen=True)
class Statement:
    line: int = field(default=0, compare=False, kw_only=True)
    column: int = field(default=0, compare=False, kw_only=True)


@dataclass(frozen=True)
class FieldDecl(Statement):
    name: str
    kind: str
    base: str | None = None
    prime: int | None = None
    generator: str | None = None
    minpoly: object = None
    transcendentals: tuple = ()

    def render(self) -> str:
        if self.kind == "rational":
            rhs = "Q"
        elif self.kind == "prime":
            rhs = f"GF({self.prime})"
        elif self.kind == "algebraic":
            rhs = f"{self.base}({self.generator} : {render_expr(self.minpoly)})"
        else:
            rhs = f"{self.base}({', '.join(self.transcendentals)})"
        return f"field {self.name} = {rhs};"


@dataclass(frozen=True)
class VarietyDecl(Statement):
    name: str
    field: str
    variables: tuple
    generators: tuple

    def render(self) -> str:
        return (f"variety {self.name} over {self.field} vars ({', '.join(self.variables)}) "
                f"ideal ({', '.join(render_expr(g) for g in self.generators)});")


@dataclass(frozen=True)
class CorrespondenceDecl(Statement):
    name: str
    source: str
    target: str
    components: tuple

    def render(self) -> str:
        parts = [f"{m}*[{', '.join(render_expr(g) for g in gens)}]" for m, gens in self.components]
        return f"corr {self.name} : {self.source} -> {self.target} = {' + '.join(parts)};"


@dataclass(frozen=True)
class PluginDecl(Statement):
    name: str
    spec: PluginSpec

    def render(self) -> str:
        return f"plugin {self.name} = {self.spec.render()};"


@dataclass(frozen=True)
class Command(Statement):
    kind: str
    args: tuple = ()
    plugin: PluginSpec | None = None
    functions: tuple = ()
    options: tuple = ()

    def render(self) -> str:
        words = [self.kind.replace("_", " "), *self.args]
        if self.plugin is not None:
            words.append(self.plugin.render())
            words.append(f"({', '.join(render_expr(f) for f in self.functions)})")
        words.extend(f"{k}={v}" for k, v in self.options)
        return " ".join(words) + ";"


@dataclass(frozen=True)
class Script:
    statements: tuple

    def render(self) -> str:
        return "\n".join(s.render() for s in self.statements) + "\n"

    @property
    def commands(self) -> list[Command]:
        return [s for s in self.statements if isinstance(s, Command)]


def render_script(script: Script) -> str:
    return script.render()


# -- parser ------------------------------------------------------------------

class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, *expected) -> ScriptSyntaxError:
        t = self.tok
        return ScriptSyntaxError(t.text, expected, t.line, t.column)

    def at(self, text: str) -> bool:
        return self.tok.kind in ("op", "ident") and self.tok.text == text

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.pos += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(repr(text))
        t = self.tok
        self.pos += 1
        return t

    def ident(self, what: str = "identifier") -> str:
        if self.tok.kind != "ident":
            raise self.error(what)
        t = self.tok
        self.pos += 1
        return t.text

    def integer(self) -> int:
        if self.tok.kind != "int":
            raise self.error("integer")
        t = self.tok
        self.pos += 1
        return int(t.text)

    # -- expressions --------------------------------------------------------

    def expr(self):
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.tok.text
            self.pos += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.at("*") or self.at("/"):
            op = self.tok.text
            self.pos += 1
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.accept("-"):
            return Neg(self.unary())
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.accept("^"):
            return BinOp("^", node, self.unary())
        return node

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.pos += 1
            return Num(int(t.text))
        if t.kind == "ident":
            self.pos += 1
            return Name(t.text, t.line, t.column)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        raise self.error("integer", "identifier", "'('")

    def expr_list(self, close: str) -> tuple:
        items = []
        if not self.at(close):
            items.append(self.expr())
            while self.accept(","):
                items.append(self.expr())
        self.expect(close)
        return tuple(items)

    def ident_list(self) -> tuple:
        self.expect("(")
        names = []
        if not self.at(")"):
            names.append(self.ident())
            while self.accept(","):
                names.append(self.ident())
        self.expect(")")
        return tuple(names)

    # -- statements ---------------------------------------------------------

    def script(self) -> Script:
        statements = []
        while self.tok.kind != "eof":
            statements.append(self.statement())
        return Script(tuple(statements))

    def statement(self):
        t = self.tok
        where = {"line": t.line, "column": t.column}
        if t.kind != "ident":
            raise self.error("field", "variety", "corr", "plugin", *COMMANDS)
        word = t.text
        if word == "field":
            node = self.field_decl(where)
        elif word == "variety":
            node = self.variety_decl(where)
        elif word == "corr":
            node = self.corr_decl(where)
        elif word == "plugin":
            self.pos += 1
            name = self.ident()
            self.expect("=")
            node = PluginDecl(name, self.plugin_spec(), **where)
        elif word in COMMANDS:
            node = self.command(where)
        else:
            raise self.error("field", "variety", "corr", "plugin", *COMMANDS)
        self.expect(";")
        return node

    def field_decl(self, where) -> FieldDecl:
        self.pos += 1
        name = self.ident()
        self.expect("=")
        head = self.ident("field name")
        if head == "Q" and self.at(";"):
            return FieldDecl(name, "rational", **where)
        if head == "GF" and self.at("("):
            self.expect("(")
            p = self.integer()
            self.expect(")")
            return FieldDecl(name, "prime", prime=p, **where)
        self.expect("(")
        first = self.ident("generator name")
        if self.accept(":"):
            minpoly = self.expr()
            self.expect(")")
            return FieldDecl(name, "algebraic", base=head, generator=first, minpoly=minpoly, **where)
        names = [first]
        while self.accept(","):
            names.append(self.ident())
        self.expect(")")
        return FieldDecl(name, "transcendental", base=head, transcendentals=tuple(names), **where)

    def variety_decl(self, where) -> VarietyDecl:
        self.pos += 1
        name = self.ident()
        self.expect("over")
        field_name = self.ident("field name")
        self.expect("vars")
        variables = self.ident_list()
        self.expect("ideal")
        self.expect("(")
        gens = self.expr_list(")")
        return VarietyDecl(name, field_name, variables, gens, **where)

    def corr_decl(self, where) -> CorrespondenceDecl:
        self.pos += 1
        name = self.ident()
        self.expect(":")
        source = self.ident("variety name")
        self.expect("->")
        target = self.ident("variety name")
        self.expect("=")
        components = [self.component(1)]
        while self.at("+") or self.at("-"):
            sign = -1 if self.tok.text == "-" else 1
            self.pos += 1
            components.append(self.component(sign))
        return CorrespondenceDecl(name, source, target, tuple(components), **where)

    def component(self, sign: int) -> tuple:
        if self.accept("-"):
            sign = -sign
        m = 1
        if self.tok.kind == "int":
            m = self.integer()
            self.expect("*")
        self.expect("[")
        return sign * m, self.expr_list("]")

    def plugin_spec(self) -> PluginSpec:
        parts = [self.plugin_factor()]
        while self.accept("*"):
            parts.append(self.plugin_factor())
        return PluginSpec(tuple(parts))

    def plugin_factor(self) -> tuple:
        name = self.ident("plugin")
        if name == "Mu":
            self.expect("(")
            n = self.integer()
            self.expect(")")
            return name, n
        return name, None

    def command(self, where) -> Command:
        word = self.ident()
        if word == "verify":
            kind = self.ident("|".join(VERIFY_KINDS))
            if kind == "functoriality":
                args = (self.ident(), self.ident())
                plugin, functions = self.plugin_call()
                return Command("verify_functoriality", args, plugin, functions, **where)
            if kind == "associativity":
                args = (self.ident(), self.ident(), self.ident())
                return Command("verify_associativity", args, **where)
            if kind == "lemmas":
                options = []
                while self.tok.kind == "ident":
                    key = self.ident()
                    self.expect("=")
                    value = str(self.integer()) if self.tok.kind == "int" else self.ident("value")
                    options.append((key, value))
                return Command("verify_lemmas", options=tuple(options), **where)
            self.pos -= 1
            raise self.error(*VERIFY_KINDS)
        if word in ("transfer", "radicial"):
            args = (self.ident(),)
            plugin, functions = self.plugin_call()
            return Command(word, args, plugin, functions, **where)
        if word == "compose":
            return Command(word, (self.ident(), self.ident()), **where)
        return Command(word, (self.ident(),), **where)

    def plugin_call(self) -> tuple:
        spec = self.plugin_spec()
        self.expect("(")
        return spec, self.expr_list(")")


# -- name resolution ---------------------------------------------------------

def _arity(spec: PluginSpec, plugins: dict, where: Statement) -> int:
    if len(spec.parts) == 1 and spec.parts[0][1] is None and spec.parts[0][0] in plugins:
        return plugins[spec.parts[0][0]]
    for name, _ in spec.parts:
        if name not in BUILTIN_PLUGINS:
            raise ScriptNameError(f"unknown plugin {name}", where.line, where.column)
    return len(spec.parts)


def _check_names(exprs, scope: set, where: str) -> None:
    for e in exprs:
        for n in expr_names(e):
            if n.name not in scope:
                raise ScriptNameError(f"{n.name} is not a variable or generator in {where}",
                                      n.line, n.column)


def check_script(script: Script) -> None:
    """Names unique per kind, every reference declared earlier, plugin arities match."""
    fields: dict[str, tuple] = {}
    varieties: dict[str, tuple] = {}
    corrs: dict[str, tuple] = {}
    plugins: dict[str, int] = {}

    def lookup(table, name, kind, s):
        if name not in table:
            raise ScriptNameError(f"unknown {kind} {name}", s.line, s.column)
        return table[name]

    def gens_of(name, s):
        if name == "Q" and "Q" not in fields:
            return ()
        return lookup(fields, name, "field", s)

    def declare(table, name, value, kind, s):
        if name in table:
            raise ScriptNameError(f"{kind} {name} is declared twice", s.line, s.column)
        table[name] = value

    for s in script.statements:
        if isinstance(s, FieldDecl):
            if s.kind in ("rational", "prime"):
                gens = ()
            else:
                base = gens_of(s.base, s)
                new = (s.generator,) if s.kind == "algebraic" else s.transcendentals
                if set(new) & set(base) or len(set(new)) != len(new):
                    raise ScriptNameError(f"generator name reused in {s.name}", s.line, s.column)
                if s.kind == "algebraic":
                    _check_names([s.minpoly], set(base) | {s.generator}, f"field {s.name}")
                gens = base + new
            declare(fields, s.name, gens, "field", s)
        elif isinstance(s, VarietyDecl):
            gens = gens_of(s.field, s)
            if len(set(s.variables)) != len(s.variables) or set(s.variables) & set(gens):
                raise ScriptNameError(f"coordinate names of {s.name} clash", s.line, s.column)
            _check_names(s.generators, set(s.variables) | set(gens), f"variety {s.name}")
            declare(varieties, s.name, (s.field, s.variables), "variety", s)
        elif isinstance(s, CorrespondenceDecl):
            fx, vx = lookup(varieties, s.source, "variety", s)
            fy, vy = lookup(varieties, s.target, "variety", s)
            if fx != fy:
                raise ScriptTypeError(f"{s.source} and {s.target} live over different fields",
                                      s.line, s.column)
            if set(vx) & set(vy):
                raise ScriptTypeError(f"{s.source} and {s.target} share coordinate names",
                                      s.line, s.column)
            scope = set(vx) | set(vy) | set(gens_of(fx, s))
            for m, gens in s.components:
                if m == 0:
                    raise ScriptTypeError("multiplicities must be nonzero", s.line, s.column)
                _check_names(gens, scope, f"correspondence {s.name}")
            declare(corrs, s.name, (s.source, s.target), "correspondence", s)
        elif isinstance(s, PluginDecl):
            declare(plugins, s.name, _arity(s.spec, plugins, s), "plugin", s)
        else:
            _check_command(s, gens_of, varieties, corrs, plugins, lookup)


def _check_command(s: Command, gens_of, varieties, corrs, plugins, lookup) -> None:
    if s.kind == "verify_lemmas":
        for key, value in s.options:
            if key == "seed" and not value.isdigit():
                raise ScriptTypeError("seed must be an integer", s.line, s.column)
            if key == "size" and value not in ("small", "full"):
                raise ScriptTypeError("size must be small or full", s.line, s.column)
            if key not in ("seed", "size"):
                raise ScriptNameError(f"unknown option {key}", s.line, s.column)
        return
    ends = [lookup(corrs, a, "correspondence", s) for a in s.args]
    for (_, target), (source, _) in zip(ends, ends[1:]):
        if target != source:
            raise ScriptTypeError(f"cannot compose: {target} is not {source}", s.line, s.column)
    if s.plugin is not None:
        arity = _arity(s.plugin, plugins, s)
        if arity != len(s.functions):
            raise ScriptTypeError(f"{s.plugin.render()} takes {arity} function(s), "
                                  f"got {len(s.functions)}", s.line, s.column)
        target = ends[-1][1]
        field_name, variables = varieties[target]
        _check_names(s.functions, set(variables) | set(gens_of(field_name, s)), f"variety {target}")


def parse(text: str) -> Script:
    script = Parser(text).script()
    check_script(script)
    return script
