"""Sparse multivariate polynomials over a tower field.

Terms live in a dict from exponent tuples to nonzero coefficients. Term
orders are supplied by callers (see ``ideals.order``); the only order used
here is plain lex on exponent tuples for exact division.
"""

from errors import DivisionByZero
from kernel.fields import FieldElem
from kernel.upoly import UPoly, format_term, join_terms


def grevlex_key(exp: tuple) -> tuple:
    return sum(exp), tuple(-e for e in reversed(exp))


def render_monomial(variables, exp) -> str:
    parts = []
    for name, e in zip(variables, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class MultiPoly:
    __slots__ = ("field", "variables", "terms", "_hash")

    def __init__(self, field, variables, terms: dict | None = None):
        self.field = field
        self.variables = tuple(variables)
        self.terms = {}
        for exp, c in (terms or {}).items():
            c = field.coerce(c)
            if c:
                self.terms[tuple(exp)] = c
        self._hash = None

    @classmethod
    def _raw(cls, field, variables, terms: dict) -> "MultiPoly":
        poly = cls.__new__(cls)
        poly.field = field
        poly.variables = variables
        poly.terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, field, variables) -> "MultiPoly":
        return cls._raw(field, tuple(variables), {})

    @classmethod
    def constant(cls, field, variables, c) -> "MultiPoly":
        variables = tuple(variables)
        c = field.coerce(c)
        return cls._raw(field, variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def variable(cls, field, variables, name: str) -> "MultiPoly":
        variables = tuple(variables)
        exp = tuple(1 if v == name else 0 for v in variables)
        if sum(exp) != 1:
            raise ValueError(f"{name} is not one of {variables}")
        return cls._raw(field, variables, {exp: field.one})

    @classmethod
    def from_upoly(cls, poly: UPoly, variables, index: int = 0) -> "MultiPoly":
        variables = tuple(variables)
        terms = {}
        for i, c in enumerate(poly.coeffs):
            if c:
                exp = [0] * len(variables)
                exp[index] = i
                terms[tuple(exp)] = c
        return cls._raw(poly.field, variables, terms)

    # -- properties -------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset((e, c.rep) for e, c in self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        return self.render()

    def one_like(self) -> "MultiPoly":
        return MultiPoly.constant(self.field, self.variables, 1)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, index: int) -> int:
        return max((e[index] for e in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_coeff(self) -> FieldElem:
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def leading(self, order) -> tuple[tuple, FieldElem]:
        exp = max(self.terms, key=order.key)
        return exp, self.terms[exp]

    def monic(self, order) -> "MultiPoly":
        if not self.terms:
            return self
        _, c = self.leading(order)
        return self if c.is_one() else self.scale(c.inverse())

    # -- arithmetic -------------------------------------------------------

    def _lift(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError(f"ring mismatch: {self.variables} vs {other.variables}")
            return other
        try:
            return MultiPoly.constant(self.field, self.variables, other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        field = self.field
        if other.field != field and other.field.has_subfield(field):
            return other + self
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e)
            v = field.coerce(c) if v is None else v + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return MultiPoly._raw(field, self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.field, self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "MultiPoly":
        c = self.field.coerce(c)
        if not c:
            return MultiPoly.zero(self.field, self.variables)
        return MultiPoly._raw(self.field, self.variables, {e: v * c for e, v in self.terms.items()})

    def mul_term(self, exp: tuple, c) -> "MultiPoly":
        terms = {}
        for e, v in self.terms.items():
            w = v * c
            if w:
                terms[tuple(a + b for a, b in zip(e, exp))] = w
        return MultiPoly._raw(self.field, self.variables, terms)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        other = self._lift(other)
        field = self.field
        if other.field != field and other.field.has_subfield(field):
            return other * self
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e)
                w = c1 * c2
                v = w if v is None else v + w
                if v:
                    terms[e] = v
                else:
                    terms.pop(e, None)
        return MultiPoly._raw(field, self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.one_like()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient of an exact division; ArithmeticError when other does not divide self."""
        other = self._lift(other)
        if not other:
            raise DivisionByZero("polynomial division by zero")
        lead = max(other.terms)
        inv = other.terms[lead].inverse()
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem)
            d = tuple(a - b for a, b in zip(e, lead))
            if any(x < 0 for x in d):
                raise ArithmeticError("inexact multivariate division")
            q = rem[e] * inv
            quot[d] = q
            for oe, oc in other.terms.items():
                ne = tuple(a + b for a, b in zip(d, oe))
                v = rem.get(ne)
                v = -(q * oc) if v is None else v - q * oc
                if v:
                    rem[ne] = v
                else:
                    rem.pop(ne, None)
        return MultiPoly._raw(self.field, self.variables, quot)

    def divides(self, other: "MultiPoly") -> bool:
        try:
            other.exact_div(self)
        except ArithmeticError:
            return False
        return True

    # -- evaluation and change of ring ------------------------------------

    def evaluate(self, values) -> FieldElem:
        """Substitute field elements for every variable."""
        target = self.field
        for v in values:
            if isinstance(v, FieldElem) and v.field != target and v.field.has_subfield(target):
                target = v.field
        values = [target.coerce(v) for v in values]
        powers: list[dict] = [{0: target.one, 1: v} for v in values]
        acc = target.zero
        for exp, c in self.terms.items():
            term = target.coerce(c)
            for i, k in enumerate(exp):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = values[i] ** k
                    term = term * cache[k]
            acc = acc + term
        return acc

    def substitute(self, assignment: dict, field=None) -> "MultiPoly":
        """Substitute field elements for the variables at the given indices.

        The result lives in the ring of the remaining variables, over `field`
        (default: the largest field among coefficients and values).
        """
        target = field or self.field
        if field is None:
            for v in assignment.values():
                if isinstance(v, FieldElem) and v.field.has_subfield(target):
                    target = v.field
        values = {i: target.coerce(v) for i, v in assignment.items()}
        keep = [i for i in range(self.nvars) if i not in values]
        variables = tuple(self.variables[i] for i in keep)
        terms: dict = {}
        for exp, c in self.terms.items():
            coeff = target.coerce(c)
            for i, v in values.items():
                if exp[i]:
                    coeff = coeff * v ** exp[i]
            if not coeff:
                continue
            ne = tuple(exp[i] for i in keep)
            w = terms.get(ne)
            w = coeff if w is None else w + coeff
            if w:
                terms[ne] = w
            else:
                terms.pop(ne, None)
        return MultiPoly._raw(target, variables, terms)

    def compose(self, images: list["MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials (all in one ring) for every variable."""
        ring = images[0]
        acc = MultiPoly.zero(ring.field, ring.variables)
        for exp, c in self.terms.items():
            term = MultiPoly.constant(ring.field, ring.variables, c)
            for img, k in zip(images, exp):
                if k:
                    term = term * img ** k
            acc = acc + term
        return acc

    def change_field(self, field) -> "MultiPoly":
        return MultiPoly._raw(field, self.variables,
                              {e: field.coerce(c) for e, c in self.terms.items()})

    def embed(self, variables) -> "MultiPoly":
        """Re-present in a ring whose variables include all of ours (matched by name)."""
        variables = tuple(variables)
        index = [variables.index(v) for v in self.variables]
        terms = {}
        for exp, c in self.terms.items():
            ne = [0] * len(variables)
            for i, e in zip(index, exp):
                ne[i] = e
            terms[tuple(ne)] = c
        return MultiPoly._raw(self.field, variables, terms)

    def to_upoly(self, index: int = 0) -> UPoly:
        coeffs = [self.field.zero] * (self.degree_in(index) + 1)
        for exp, c in self.terms.items():
            if any(e for i, e in enumerate(exp) if i != index):
                raise ValueError(f"{self} is not univariate in {self.variables[index]}")
            coeffs[exp[index]] = c
        return UPoly._raw(self.field, coeffs)

    def coefficients_in(self, index: int) -> dict[int, "MultiPoly"]:
        """Split by the power of one variable; the coefficients keep that variable at 0."""
        out: dict[int, dict] = {}
        for exp, c in self.terms.items():
            ne = exp[:index] + (0,) + exp[index + 1:]
            out.setdefault(exp[index], {})[ne] = c
        return {k: MultiPoly._raw(self.field, self.variables, t) for k, t in out.items()}

    def render(self) -> str:
        exps = sorted(self.terms, key=grevlex_key, reverse=True)
        many = len(exps) > 1
        return join_terms([format_term(str(self.terms[e]), render_monomial(self.variables, e), many)
                           for e in exps])
