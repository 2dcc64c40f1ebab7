"""Monomial orders on exponent tuples.

Orders are given by a sort key: a larger key means a larger monomial.
"""

from dataclasses import dataclass

from kernel.mpoly import grevlex_key


@dataclass(frozen=True)
class TermOrder:
    """degrevlex, lex, or a block order.

    In ``block`` the variables from index ``split`` on form the first block
    compared (degrevlex), ties broken by degrevlex on the variables before
    ``split``; those later variables are therefore eliminated.
    """

    kind: str = "degrevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown term order: {self.kind}")

    def key(self, exp: tuple) -> tuple:
        if self.kind == "lex":
            return exp
        if self.kind == "block":
            return grevlex_key(exp[self.split:]), grevlex_key(exp[:self.split])
        return grevlex_key(exp)

    def __str__(self) -> str:
        return f"block({self.split})" if self.kind == "block" else self.kind


DEGREVLEX = TermOrder("degrevlex")
LEX = TermOrder("lex")


def block(split: int) -> TermOrder:
    return TermOrder("block", split)


def divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))
