"""Shared fixtures for the transfers test suite."""

import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))

from kernel.fields import GF, QQ, AlgebraicExtension  # noqa: E402
from kernel.upoly import UPoly  # noqa: E402


@pytest.fixture
def upoly():
    """Factory: upoly(field, c0, c1, ...) with coefficients low degree first."""
    def _make(field, *coeffs):
        return UPoly(field, list(coeffs))
    return _make


@pytest.fixture
def gaussian():
    """ℚ(i) = ℚ[i]/(i^2 + 1)."""
    return AlgebraicExtension(QQ, "i", UPoly(QQ, [1, 0, 1]))


@pytest.fixture
def gf4():
    """𝔽_4 = 𝔽_2[a]/(a^2 + a + 1)."""
    return AlgebraicExtension(GF(2), "a", UPoly(GF(2), [1, 1, 1]))


@pytest.fixture
def settings():
    """Default engine settings, as shipped in settings/defaults.yaml."""
    from config import load_settings
    return load_settings()


@pytest.fixture
def poly(settings):
    """Factory: poly(field, variables, "x^2 - 2") using the worksheet expression syntax."""
    from dsl.execute import Worksheet
    from dsl.parser import Name, Parser

    sheet = Worksheet(settings)

    def _make(field, variables, text):
        return sheet.polynomial(Parser(text).expr(), field, tuple(variables), Name(text))
    return _make


@pytest.fixture
def ideal(poly):
    """Factory: ideal(field, variables, "g1", "g2", ...)."""
    from ideals.groebner import Ideal

    def _make(field, variables, *generators):
        return Ideal(field, tuple(variables), tuple(poly(field, variables, g) for g in generators))
    return _make


@pytest.fixture
def variety(poly):
    """Factory: variety("Y", ("y",), "y^2 - 2", base=QQ)."""
    from correspondence import AffineVariety

    def _make(name, variables, *generators, base=QQ):
        return AffineVariety(name, base, variables, [poly(base, variables, g) for g in generators])
    return _make


@pytest.fixture
def corr(poly):
    """Factory: corr("alpha", X, Y, (2, ["y^2 - x"]), (1, ["y - x"]))."""
    from correspondence import Correspondence

    def _make(name, source, target, *components):
        variables = source.variables + target.variables
        parts = [([poly(source.base, variables, g) for g in gens], m) for m, gens in components]
        return Correspondence(name, source, target, parts)
    return _make


@pytest.fixture
def run_sheet(settings):
    """Factory: parse and execute worksheet text, returning the Report."""
    from dsl.execute import execute
    from dsl.parser import parse

    def _run(text, **overrides):
        return execute(parse(text), {**settings, **overrides})
    return _run
