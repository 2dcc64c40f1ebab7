"""Commutative group plugins: 𝔾_a, 𝔾_m, μ_n and finite products of them.

A point of a simple plugin over a field is a field element; a point of a
product is a tuple with one entry per factor. ``kind`` says which group law
the plugin carries ("additive" or "multiplicative"); products report
"product" and delegate to their factors.
"""

from errors import NotAPluginPoint
from kernel.minpoly import trace_and_norm


class GroupPlugin:
    name = "G"
    kind = "additive"

    @property
    def factors(self) -> list["GroupPlugin"]:
        return [self]

    @property
    def arity(self) -> int:
        return len(self.factors)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupPlugin) and self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"GroupPlugin({self.name})"

    def check_point(self, value) -> None:
        """Raise NotAPluginPoint unless value is a point of the group."""

    def identity(self, field):
        raise NotImplementedError

    def combine(self, a, b):
        raise NotImplementedError

    def multiple(self, a, m: int):
        raise NotImplementedError

    def field_transfer(self, value, over):
        """Tr or Nm of value down to the prefix `over`."""
        raise NotImplementedError

    def render(self, value) -> str:
        return str(value)


class Additive(GroupPlugin):
    name = "Ga"
    kind = "additive"

    def identity(self, field):
        return field.zero

    def combine(self, a, b):
        return a + b

    def multiple(self, a, m: int):
        return a * m

    def field_transfer(self, value, over):
        return trace_and_norm(value, over)[0]


class Multiplicative(GroupPlugin):
    name = "Gm"
    kind = "multiplicative"

    def check_point(self, value) -> None:
        if not value:
            raise NotAPluginPoint(f"0 is not a point of {self.name}")

    def identity(self, field):
        return field.one

    def combine(self, a, b):
        return a * b

    def multiple(self, a, m: int):
        return a ** m

    def field_transfer(self, value, over):
        return trace_and_norm(value, over)[1]


class RootsOfUnity(Multiplicative):
    """μ_n, evaluated through 𝔾_m with the n-th power condition checked on points."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"Mu needs a positive order, got {n}")
        self.n = n
        self.name = f"Mu({n})"

    def check_point(self, value) -> None:
        if not value or not (value ** self.n).is_one():
            raise NotAPluginPoint(f"{value} is not an {self.n}-th root of unity")


class Product(GroupPlugin):
    kind = "product"

    def __init__(self, parts: list[GroupPlugin]):
        flat = []
        for p in parts:
            flat.extend(p.factors)
        if len(flat) < 2:
            raise ValueError("a product plugin needs at least two factors")
        self.parts = flat
        self.name = "*".join(p.name for p in flat)

    @property
    def factors(self) -> list[GroupPlugin]:
        return list(self.parts)

    def check_point(self, value) -> None:
        if not isinstance(value, tuple) or len(value) != len(self.parts):
            raise NotAPluginPoint(f"{self.name} points are {len(self.parts)}-tuples")
        for p, v in zip(self.parts, value):
            p.check_point(v)

    def identity(self, field):
        return tuple(p.identity(field) for p in self.parts)

    def combine(self, a, b):
        return tuple(p.combine(x, y) for p, x, y in zip(self.parts, a, b))

    def multiple(self, a, m: int):
        return tuple(p.multiple(x, m) for p, x in zip(self.parts, a))

    def field_transfer(self, value, over):
        return tuple(p.field_transfer(v, over) for p, v in zip(self.parts, value))

    def render(self, value) -> str:
        return "(" + ", ".join(p.render(v) for p, v in zip(self.parts, value)) + ")"


GA = Additive()
GM = Multiplicative()


def builtin(name: str, order: int | None = None) -> GroupPlugin:
    if name == "Ga":
        return GA
    if name == "Gm":
        return GM
    if name == "Mu":
        return RootsOfUnity(order or 1)
    raise KeyError(name)
