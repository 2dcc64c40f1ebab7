"""Tests for src/dsl/parser.py — tokenizing, parsing, printing and name checks."""

import pytest

from dsl.parser import Command, CorrespondenceDecl, FieldDecl, Parser, parse, render_expr, render_script
from errors import ScriptNameError, ScriptSyntaxError, ScriptTypeError

DECLARATIONS = """\
field k = Q;
variety P over k vars () ideal ();
variety A over k vars (y) ideal ();
variety B over k vars (z) ideal ();
corr a : P -> A = [y^2 - 2];
corr b : A -> B = [z - y^2];
"""


def expr(text: str) -> str:
    return render_expr(Parser(text).expr())


class TestExpressions:
    @pytest.mark.parametrize("text", [
        "x^2 - 2*x*y + 1",
        "a - (b - c)",
        "(a + b)^2",
        "-x^2",
        "(-x)^2",
        "a/b*c",
        "a/(b*c)",
    ])
    def test_canonical_form_is_stable(self, text):
        assert expr(text) == text

    def test_redundant_parentheses_dropped(self):
        assert expr("(a*b) + ((c))") == "a*b + c"
        assert expr("+x") == "x"

    def test_power_binds_tighter_than_negation(self):
        assert expr("-x^2 + 1") == "-x^2 + 1"


class TestStatements:
    def test_declarations(self):
        script = parse(DECLARATIONS)
        assert isinstance(script.statements[0], FieldDecl)
        corr = script.statements[4]
        assert isinstance(corr, CorrespondenceDecl)
        assert corr.components[0][0] == 1
        assert script.commands == []

    def test_field_tower(self):
        script = parse("field k = Q;\nfield L = k(a : a^2 - 2);\nfield F = L(s, t);\n")
        assert [s.render() for s in script.statements] == [
            "field k = Q;",
            "field L = k(a : a^2 - 2);",
            "field F = L(s, t);",
        ]

    def test_signed_components(self):
        script = parse("variety X over Q vars (x) ideal ();\n"
                       "variety Y over Q vars (y) ideal ();\n"
                       "corr c : X -> Y = 2*[y^2 - x] - [y - x];\n")
        assert [m for m, _ in script.statements[2].components] == [2, -1]
        assert script.statements[2].render() == "corr c : X -> Y = 2*[y^2 - x] + -1*[y - x];"

    def test_commands(self):
        script = parse(DECLARATIONS + "transfer a Gm (1 + y);\ncompose a b;\n"
                       "verify functoriality a b Ga (z);\nverify lemmas seed=3 size=small;\n")
        assert [c.kind for c in script.commands] == [
            "transfer", "compose", "verify_functoriality", "verify_lemmas"]
        assert [c.render() for c in script.commands] == [
            "transfer a Gm (1 + y);",
            "compose a b;",
            "verify functoriality a b Ga (z);",
            "verify lemmas seed=3 size=small;",
        ]

    def test_plugin_declaration(self):
        script = parse(DECLARATIONS + "plugin G = Ga*Mu(3);\ntransfer a G (y, y);\n")
        assert script.statements[-2].render() == "plugin G = Ga*Mu(3);"
        assert isinstance(script.statements[-1], Command)

    def test_render_parses_back(self):
        script = parse(DECLARATIONS + "# comment\ntransfer a Ga*Gm (y, y^2);\nexplain a;\n"
                       "verify lemmas size=full;\n")
        assert parse(render_script(script)) == script
        assert render_script(script) == script.render()


class TestErrors:
    def test_syntax_error_position(self):
        with pytest.raises(ScriptSyntaxError) as info:
            parse("field k = Q\nvariety X over k vars () ideal ();")
        assert (info.value.line, info.value.column) == (2, 1)
        assert info.value.found == "variety"

    def test_bad_character(self):
        with pytest.raises(ScriptSyntaxError) as info:
            parse("field k = Q;\n  @")
        assert (info.value.line, info.value.column) == (2, 3)

    def test_unknown_statement(self):
        with pytest.raises(ScriptSyntaxError) as info:
            parse("frobnicate a;")
        assert "transfer" in info.value.expected

    def test_unknown_correspondence(self):
        with pytest.raises(ScriptNameError):
            parse("transfer a Ga (y);")

    def test_variable_out_of_scope(self):
        with pytest.raises(ScriptNameError) as info:
            parse(DECLARATIONS + "transfer a Ga (z);")
        assert (info.value.line, info.value.column) == (7, 16)

    def test_declared_twice(self):
        with pytest.raises(ScriptNameError):
            parse("field k = Q;\nfield k = GF(5);")

    def test_plugin_arity(self):
        with pytest.raises(ScriptTypeError):
            parse(DECLARATIONS + "transfer a Ga*Gm (y);")

    def test_unknown_plugin(self):
        with pytest.raises(ScriptNameError):
            parse(DECLARATIONS + "transfer a Gx (y);")

    def test_composition_must_chain(self):
        with pytest.raises(ScriptTypeError):
            parse(DECLARATIONS + "compose b a;")

    def test_zero_multiplicity(self):
        with pytest.raises(ScriptTypeError):
            parse("variety P over Q vars () ideal ();\n"
                  "variety A over Q vars (y) ideal ();\n"
                  "corr c : P -> A = 0*[y];")

    def test_shared_coordinates(self):
        with pytest.raises(ScriptTypeError):
            parse("variety A over Q vars (y) ideal ();\n"
                  "variety C over Q vars (y) ideal ();\n"
                  "corr c : A -> C = [y];")

    def test_lemma_options_checked(self):
        with pytest.raises(ScriptTypeError):
            parse("verify lemmas size=huge;")
        with pytest.raises(ScriptNameError):
            parse("verify lemmas depth=2;")
