"""Exact fields: a prime field extended by a chain of steps.

A tower is the top ``Field`` object; every step knows its ``base`` and the
whole chain is available as ``levels`` (prime field first). Two step kinds
exist: ``RationalFunctionField`` adjoins a transcendental, ``AlgebraicExtension``
adjoins a root of a monic irreducible polynomial over the previous level.
Elements are ``FieldElem`` objects holding a normal-form representation, so
equality of elements is equality of representations.
"""

import logging
from fractions import Fraction

from sympy import isprime

from errors import (
    DivisionByZero,
    FactorizationError,
    NotFiniteOverPrefix,
    NotInSubfield,
    ReducibleMinimalPolynomial,
    TowerMismatch,
)
from kernel.upoly import UPoly

logger = logging.getLogger("transfers.kernel.fields")


class FieldElem:
    """An element of a tower field in normal form."""

    __slots__ = ("field", "rep")

    def __init__(self, field: "Field", rep):
        self.field = field
        self.rep = rep

    def _operands(self, other):
        if isinstance(other, FieldElem):
            f, g = self.field, other.field
            if f is g or f == g:
                return f, self.rep, other.rep
            if f.has_subfield(g):
                return f, self.rep, f.coerce(other).rep
            if g.has_subfield(f):
                return g, g.coerce(self).rep, other.rep
            raise TowerMismatch(f"{f} and {g} do not lie in one tower")
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field, self.rep, self.field.coerce(other).rep
        return None

    def __add__(self, other):
        ops = self._operands(other)
        if ops is None:
            return NotImplemented
        f, a, b = ops
        return FieldElem(f, f._add(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        ops = self._operands(other)
        if ops is None:
            return NotImplemented
        f, a, b = ops
        return FieldElem(f, f._sub(a, b))

    def __rsub__(self, other):
        ops = self._operands(other)
        if ops is None:
            return NotImplemented
        f, a, b = ops
        return FieldElem(f, f._sub(b, a))

    def __mul__(self, other):
        ops = self._operands(other)
        if ops is None:
            return NotImplemented
        f, a, b = ops
        return FieldElem(f, f._mul(a, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        ops = self._operands(other)
        if ops is None:
            return NotImplemented
        f, a, b = ops
        return FieldElem(f, f._mul(a, f._inv(b)))

    def __rtruediv__(self, other):
        ops = self._operands(other)
        if ops is None:
            return NotImplemented
        f, a, b = ops
        return FieldElem(f, f._mul(b, f._inv(a)))

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.field, self.field._neg(self.rep))

    def __pow__(self, n: int) -> "FieldElem":
        if n < 0:
            return self.inverse() ** (-n)
        f = self.field
        result, base = f.one.rep, self.rep
        while n:
            if n & 1:
                result = f._mul(result, base)
            n >>= 1
            if n:
                base = f._mul(base, base)
        return FieldElem(f, result)

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field, self.field._inv(self.rep))

    def exact_div(self, other) -> "FieldElem":
        return self / other

    def __eq__(self, other) -> bool:
        try:
            ops = self._operands(other)
        except TowerMismatch:
            return False
        if ops is None:
            return NotImplemented
        _, a, b = ops
        return a == b

    def __hash__(self) -> int:
        return hash(self.rep)

    def __bool__(self) -> bool:
        return not self.field._is_zero(self.rep)

    def is_zero(self) -> bool:
        return self.field._is_zero(self.rep)

    def is_one(self) -> bool:
        return self.rep == self.field.one.rep

    def one_like(self) -> "FieldElem":
        return self.field.one

    def __str__(self) -> str:
        return self.field.render(self.rep)

    def __repr__(self) -> str:
        return f"<{self.field}: {self}>"


class Field:
    """Common behaviour of every tower level."""

    characteristic: int
    base: "Field | None" = None
    name: str | None = None
    key: tuple

    def __init__(self):
        self.levels: tuple["Field", ...] = (self.base.levels if self.base else ()) + (self,)
        self._hash = hash(self.key)
        self.zero = FieldElem(self, self._zero_rep())
        self.one = FieldElem(self, self._one_rep())

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, Field) and self._hash == other._hash and self.key == other.key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Field({self})"

    # -- structure --------------------------------------------------------

    @property
    def prime_field(self) -> "PrimeField":
        return self.levels[0]

    def has_subfield(self, sub: "Field") -> bool:
        return any(level is sub for level in self.levels) or sub in self.levels

    def generators(self) -> list[tuple[str, FieldElem]]:
        """(name, element of self) for every non-prime level, bottom up."""
        return [(level.name, self.coerce(level.gen)) for level in self.levels[1:]]

    def transcendentals(self) -> list[str]:
        return [level.name for level in self.levels if isinstance(level, RationalFunctionField)]

    def algebraic_steps(self) -> list["AlgebraicExtension"]:
        return [level for level in self.levels if isinstance(level, AlgebraicExtension)]

    def fresh_name(self, prefix: str) -> str:
        used = {level.name for level in self.levels}
        if prefix not in used:
            return prefix
        i = 1
        while f"{prefix}_{i}" in used:
            i += 1
        return f"{prefix}_{i}"

    @property
    def is_finite(self) -> bool:
        return self.characteristic > 0 and all(
            isinstance(level, AlgebraicExtension) for level in self.levels[1:])

    @property
    def size(self) -> int:
        if not self.is_finite:
            raise NotFiniteOverPrefix(f"{self} is infinite")
        return self.characteristic ** self.degree_over(self.prime_field)

    def degree_over(self, sub: "Field") -> int:
        """[self : sub] for a prefix sub reached through algebraic steps only."""
        degree = 1
        for level in reversed(self.levels):
            if level == sub:
                return degree
            if not isinstance(level, AlgebraicExtension):
                raise NotFiniteOverPrefix(f"{self} is not finite over {sub}")
            degree *= level.degree
        raise NotFiniteOverPrefix(f"{sub} is not a prefix of {self}")

    # -- coercion and coordinates -----------------------------------------

    def coerce(self, value) -> FieldElem:
        if isinstance(value, FieldElem):
            if value.field is self:
                return value
            if value.field == self:
                return FieldElem(self, value.rep)
            if self.base is not None and self.base.has_subfield(value.field):
                return FieldElem(self, self._from_base(self.base.coerce(value)))
            raise TowerMismatch(f"cannot embed {value.field} into {self}")
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot coerce {type(value).__name__} into {self}")
        return FieldElem(self, self._from_base(self.base.coerce(value)))

    __call__ = coerce

    def coordinates(self, a, over: "Field") -> list[FieldElem]:
        """Coordinates of a over the prefix `over` in the tower monomial basis."""
        a = self.coerce(a)
        if self == over:
            return [a]
        if not isinstance(self, AlgebraicExtension):
            raise NotFiniteOverPrefix(f"{self} is not finite over {over}")
        out = []
        for i in range(self.degree):
            out.extend(self.base.coordinates(a.rep.coeff(i), over))
        return out

    def from_coordinates(self, vec, over: "Field") -> FieldElem:
        if self == over:
            return self.coerce(vec[0])
        if not isinstance(self, AlgebraicExtension):
            raise NotFiniteOverPrefix(f"{self} is not finite over {over}")
        step = self.base.degree_over(over)
        coeffs = [self.base.from_coordinates(vec[i * step:(i + 1) * step], over)
                  for i in range(self.degree)]
        return FieldElem(self, UPoly._raw(self.base, coeffs))

    def basis_over(self, over: "Field") -> list[FieldElem]:
        n = self.degree_over(over)
        basis = []
        for i in range(n):
            unit = [over.zero] * n
            unit[i] = over.one
            basis.append(self.from_coordinates(unit, over))
        return basis

    def descend(self, a, to: "Field") -> FieldElem:
        """Return a as an element of the prefix `to`, if it lies there."""
        a = self.coerce(a)
        if self == to:
            return a
        if isinstance(self, AlgebraicExtension):
            if a.rep.deg > 0:
                raise NotInSubfield(f"{a} does not lie in {to}")
            c = a.rep.coeff(0)
        elif isinstance(self, RationalFunctionField):
            num, den = a.rep
            if num.deg > 0 or den.deg > 0:
                raise NotInSubfield(f"{a} does not lie in {to}")
            c = num.coeff(0) / den.coeff(0)
        else:
            raise NotInSubfield(f"{to} is not a prefix of {self}")
        return self.base.descend(c, to)

    def pth_root(self, a) -> FieldElem:
        """Inverse Frobenius; only finite fields are perfect here."""
        if not self.is_finite:
            raise FactorizationError(f"p-th roots are not available in {self}")
        n = self.degree_over(self.prime_field)
        return self.coerce(a) ** (self.characteristic ** (n - 1))

    def is_polynomial(self, a) -> bool:
        """True when no rational-function level of a carries a denominator."""
        a = self.coerce(a)
        if self.base is None:
            return True
        if isinstance(self, RationalFunctionField):
            num, den = a.rep
            parts = num.coeffs if den.is_one() else None
        else:
            parts = a.rep.coeffs
        if parts is None:
            return False
        return all(self.base.is_polynomial(c) for c in parts)


class PrimeField(Field):
    """ℚ (characteristic 0, Fraction representation) or 𝔽_p (int in [0, p))."""

    def __init__(self, characteristic: int):
        if characteristic != 0 and not isprime(characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {characteristic}")
        self.characteristic = characteristic
        self.key = ("prime", characteristic)
        super().__init__()

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"

    def _zero_rep(self):
        return Fraction(0) if self.characteristic == 0 else 0

    def _one_rep(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def coerce(self, value) -> FieldElem:
        p = self.characteristic
        if isinstance(value, FieldElem):
            if value.field == self:
                return value if value.field is self else FieldElem(self, value.rep)
            raise TowerMismatch(f"cannot embed {value.field} into {self}")
        if isinstance(value, bool):
            raise TypeError("bool is not a field element")
        if isinstance(value, int):
            return FieldElem(self, Fraction(value) if p == 0 else value % p)
        if isinstance(value, Fraction):
            if p == 0:
                return FieldElem(self, value)
            if value.denominator % p == 0:
                raise DivisionByZero(f"{value} has no image in {self}")
            return FieldElem(self, value.numerator * pow(value.denominator, -1, p) % p)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    __call__ = coerce

    def _add(self, a, b):
        return a + b if self.characteristic == 0 else (a + b) % self.characteristic

    def _sub(self, a, b):
        return a - b if self.characteristic == 0 else (a - b) % self.characteristic

    def _mul(self, a, b):
        return a * b if self.characteristic == 0 else (a * b) % self.characteristic

    def _neg(self, a):
        return -a if self.characteristic == 0 else (-a) % self.characteristic

    def _inv(self, a):
        if a == 0:
            raise DivisionByZero(f"division by zero in {self}")
        return 1 / a if self.characteristic == 0 else pow(a, -1, self.characteristic)

    def _is_zero(self, a) -> bool:
        return a == 0

    def render(self, rep) -> str:
        return str(rep)

    def random_element(self, rng, bound: int = 3) -> FieldElem:
        if self.characteristic == 0:
            return self.coerce(rng.randint(-bound, bound))
        return self.coerce(rng.randrange(self.characteristic))


class RationalFunctionField(Field):
    """base(name): fractions num/den in lowest terms with monic denominator."""

    def __init__(self, base: Field, name: str):
        self.base = base
        self.name = name
        self.characteristic = base.characteristic
        self.key = ("rat", base.key, name)
        super().__init__()
        self.gen = FieldElem(self, (UPoly.x(base), UPoly.one(base)))

    def __str__(self) -> str:
        return f"{self.base}({self.name})"

    def _zero_rep(self):
        return UPoly.zero(self.base), UPoly.one(self.base)

    def _one_rep(self):
        return UPoly.one(self.base), UPoly.one(self.base)

    def _normalize(self, num: UPoly, den: UPoly):
        if not den:
            raise DivisionByZero(f"division by zero in {self}")
        if not num:
            return UPoly.zero(self.base), UPoly.one(self.base)
        g = num.gcd(den)
        if not g.is_one():
            num, den = num.exact_div(g), den.exact_div(g)
        if not den.lc.is_one():
            inv = den.lc.inverse()
            num, den = num * inv, den * inv
        return num, den

    def _add(self, a, b):
        if a[1] == b[1]:
            return self._normalize(a[0] + b[0], a[1])
        return self._normalize(a[0] * b[1] + b[0] * a[1], a[1] * b[1])

    def _sub(self, a, b):
        return self._add(a, self._neg(b))

    def _mul(self, a, b):
        return self._normalize(a[0] * b[0], a[1] * b[1])

    def _neg(self, a):
        return -a[0], a[1]

    def _inv(self, a):
        if not a[0]:
            raise DivisionByZero(f"division by zero in {self}")
        return self._normalize(a[1], a[0])

    def _is_zero(self, a) -> bool:
        return not a[0]

    def _from_base(self, x: FieldElem):
        return UPoly.constant(self.base, x), UPoly.one(self.base)

    def render(self, rep) -> str:
        num, den = rep
        if den.is_one():
            return num.render(self.name)
        return f"({num.render(self.name)})/({den.render(self.name)})"

    def fraction(self, num: UPoly, den: UPoly) -> FieldElem:
        return FieldElem(self, self._normalize(num, den))

    def random_element(self, rng, bound: int = 3) -> FieldElem:
        num = UPoly._raw(self.base, [self.base.random_element(rng, bound) for _ in range(3)])
        den = UPoly.one(self.base)
        if rng.random() < 0.5:
            den = UPoly.x(self.base) + self.base.random_element(rng, bound)
        return FieldElem(self, self._normalize(num, den))


class AlgebraicExtension(Field):
    """base[name]/(minpoly): polynomials in the generator of degree < deg minpoly."""

    def __init__(self, base: Field, name: str, minpoly: UPoly):
        minpoly = minpoly.change_field(base)
        if minpoly.deg < 1 or not minpoly.is_monic():
            raise ValueError(f"minimal polynomial of {name} must be monic and nonconstant")
        self.base = base
        self.name = name
        self.minpoly = minpoly
        self.degree = minpoly.deg
        self.characteristic = base.characteristic
        self.key = ("alg", base.key, name, tuple(c.rep for c in minpoly.coeffs))
        super().__init__()
        self.gen = FieldElem(self, UPoly.x(base) % minpoly)

    def __str__(self) -> str:
        return f"{self.base}[{self.name}]/({self.minpoly.render(self.name)})"

    def _zero_rep(self):
        return UPoly.zero(self.base)

    def _one_rep(self):
        return UPoly.one(self.base)

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return (a * b) % self.minpoly

    def _neg(self, a):
        return -a

    def _inv(self, a):
        if not a:
            raise DivisionByZero(f"division by zero in {self}")
        g, s, _ = a.xgcd(self.minpoly)
        if g.deg > 0:
            raise ReducibleMinimalPolynomial(
                f"{self.minpoly.render(self.name)} is reducible over {self.base}")
        return s % self.minpoly

    def _is_zero(self, a) -> bool:
        return not a

    def _from_base(self, x: FieldElem):
        return UPoly.constant(self.base, x)

    def render(self, rep) -> str:
        return rep.render(self.name)

    def element(self, poly: UPoly) -> FieldElem:
        return FieldElem(self, poly.change_field(self.base) % self.minpoly)

    def random_element(self, rng, bound: int = 3) -> FieldElem:
        coeffs = [self.base.random_element(rng, bound) for _ in range(self.degree)]
        return FieldElem(self, UPoly._raw(self.base, coeffs))


QQ = PrimeField(0)


def GF(p: int) -> PrimeField:
    return PrimeField(p)
