"""Dense univariate polynomials with coefficients in a tower field.

Coefficients are stored low degree first with no trailing zeros, so the zero
polynomial has an empty coefficient tuple and degree -1.
"""

import re

from errors import DivisionByZero

_SIMPLE = re.compile(r"-?[0-9]+(/[0-9]+)?|-?[A-Za-z_][A-Za-z0-9_']*(\^[0-9]+)?")


def _strip(coeffs: list) -> tuple:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def format_term(coeff: str, monomial: str, many_terms: bool) -> str:
    """Glue a rendered coefficient onto a rendered monomial ("" for 1)."""
    simple = _SIMPLE.fullmatch(coeff) is not None
    if not monomial:
        return coeff if simple or not many_terms else f"({coeff})"
    if coeff == "1":
        return monomial
    if coeff == "-1":
        return "-" + monomial
    return f"{coeff}*{monomial}" if simple else f"({coeff})*{monomial}"


def join_terms(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


class UPoly:
    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs=()):
        self.field = field
        self.coeffs = _strip([field.coerce(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, field, coeffs: list) -> "UPoly":
        poly = cls.__new__(cls)
        poly.field = field
        poly.coeffs = _strip(coeffs)
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, field) -> "UPoly":
        return cls._raw(field, [])

    @classmethod
    def one(cls, field) -> "UPoly":
        return cls._raw(field, [field.one])

    @classmethod
    def constant(cls, field, c) -> "UPoly":
        return cls._raw(field, [field.coerce(c)])

    @classmethod
    def x(cls, field) -> "UPoly":
        return cls._raw(field, [field.zero, field.one])

    @classmethod
    def monomial(cls, field, c, n: int) -> "UPoly":
        return cls._raw(field, [field.zero] * n + [field.coerce(c)])

    # -- basic properties -------------------------------------------------

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    def one_like(self) -> "UPoly":
        return UPoly.one(self.field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(c.rep for c in self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"UPoly({self.render('t')})"

    # -- ring operations --------------------------------------------------

    def _lift(self, other) -> "UPoly | None":
        if isinstance(other, UPoly):
            if other.field is not self.field and other.field != self.field:
                return UPoly(self.field, other.coeffs)
            return other
        try:
            return UPoly._raw(self.field, [self.field.coerce(other)])
        except TypeError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly._raw(self.field, out)

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly._raw(self.field, [-c for c in self.coeffs])

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

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            try:
                c = self.field.coerce(other)
            except TypeError:
                return NotImplemented
            return UPoly._raw(self.field, [a * c for a in self.coeffs])
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return UPoly.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UPoly._raw(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        other = self._lift(other)
        if not other:
            raise DivisionByZero("polynomial division by zero")
        if self.deg < other.deg:
            return UPoly.zero(self.field), self
        inv = other.lc.inverse()
        rem = list(self.coeffs)
        quot = [self.field.zero] * (self.deg - other.deg + 1)
        dg = other.deg
        for k in range(self.deg - dg, -1, -1):
            c = rem[k + dg] * inv
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return UPoly._raw(self.field, quot), UPoly._raw(self.field, rem[:dg])

    def __mod__(self, other) -> "UPoly":
        return self.divmod(other)[1]

    def __floordiv__(self, other) -> "UPoly":
        return self.divmod(other)[0]

    def exact_div(self, other) -> "UPoly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "UPoly":
        if not self.coeffs or self.coeffs[-1].is_one():
            return self
        return self * self.coeffs[-1].inverse()

    def gcd(self, other: "UPoly") -> "UPoly":
        a, b = self, self._lift(other)
        while b:
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "UPoly") -> tuple["UPoly", "UPoly", "UPoly"]:
        """Return (g, s, t) with s*self + t*other = g and g monic (or zero)."""
        other = self._lift(other)
        r0, r1 = self, other
        s0, s1 = UPoly.one(self.field), UPoly.zero(self.field)
        t0, t1 = UPoly.zero(self.field), UPoly.one(self.field)
        while r1:
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if not r0:
            return r0, s0, t0
        inv = r0.lc.inverse()
        return r0 * inv, s0 * inv, t0 * inv

    def derivative(self) -> "UPoly":
        return UPoly._raw(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation; x may live in any extension of the coefficient field."""
        if not self.coeffs:
            return getattr(x, "field", self.field).zero
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, inner: "UPoly") -> "UPoly":
        acc = UPoly.zero(inner.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + UPoly._raw(inner.field, [inner.field.coerce(c)])
        return acc

    def pow_mod(self, n: int, modulus: "UPoly") -> "UPoly":
        result = UPoly.one(self.field)
        base = self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            n >>= 1
        return result

    def map_coeffs(self, fn, field) -> "UPoly":
        return UPoly._raw(field, [fn(c) for c in self.coeffs])

    def change_field(self, field) -> "UPoly":
        """Re-present over an extension (or an equal copy) of the coefficient field."""
        return UPoly._raw(field, [field.coerce(c) for c in self.coeffs])

    def render(self, var: str) -> str:
        nonzero = [(i, c) for i, c in enumerate(self.coeffs) if c]
        terms = []
        for i, c in reversed(nonzero):
            monomial = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            terms.append(format_term(str(c), monomial, len(nonzero) > 1))
        return join_terms(terms)
