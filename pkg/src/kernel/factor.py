"""Univariate factorization over every tower shape the engine builds.

Routing by the top level of the coefficient field:

- 𝔽_p: ``sympy.polys.galoistools.gf_factor`` (distinct-degree then
  equal-degree splitting).
- ℚ: ``sympy.Poly.factor_list`` (lifting from a good prime).
- finite towers over 𝔽_p: Cantor-Zassenhaus over the tower itself.
- algebraic steps over an infinite base: squarefree norm reduction to the
  base (Trager), one step at a time.
- rational function fields over a prime field: clear denominators and
  factor in the polynomial ring; sympy over ℚ, Kronecker substitution over
  𝔽_p.
- binomials t^(p^e) − c over an infinite field of characteristic p:
  irreducible exactly when c is not a p-th power, decided level by level.
"""

import itertools
import logging
import random
from fractions import Fraction

import sympy
from sympy.polys.domains import QQ, ZZ
from sympy.polys.galoistools import gf_factor

from errors import FactorizationError, ReducibleMinimalPolynomial
from kernel.fields import (
    AlgebraicExtension,
    FieldElem,
    PrimeField,
    RationalFunctionField,
)
from kernel.minpoly import polynomial_norm
from kernel.mpoly import MultiPoly
from kernel.rational import to_fraction, tower_images
from kernel.upoly import UPoly

logger = logging.getLogger("transfers.kernel.factor")

DEFAULT_SHIFT_ATTEMPTS = 24


def _factor_key(pair):
    poly, exp = pair
    return poly.deg, poly.render("t"), exp


def univ_factor(f: UPoly, shift_attempts: int = DEFAULT_SHIFT_ATTEMPTS) -> list[tuple[UPoly, int]]:
    """Complete factorization into monic irreducibles with exponents.

    Constants factor as the empty list. The order is deterministic: by
    degree, then by rendering.
    """
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if f.deg <= 0:
        return []
    field = f.field
    f = f.monic()
    if f.deg == 1:
        return [(f, 1)]
    if not field.is_finite and _irreducible_binomial(f):
        return [(f, 1)]
    if isinstance(field, PrimeField):
        factors = _factor_gf(f) if field.characteristic else _factor_rational(f)
    elif isinstance(field, AlgebraicExtension):
        factors = _factor_finite(f) if field.is_finite else _factor_algebraic(f, shift_attempts)
    elif all(isinstance(level, RationalFunctionField) for level in field.levels[1:]):
        factors = _factor_function_field(f)
    else:
        raise FactorizationError(f"no factorization routine for polynomials over {field}")
    merged: dict[UPoly, int] = {}
    for g, e in factors:
        merged[g] = merged.get(g, 0) + e
    return sorted(merged.items(), key=_factor_key)


# -- purely inseparable binomials --------------------------------------------

def _pth_power(field, c) -> bool | None:
    """Whether c is a p-th power in field; None when this tower shape is undecided.

    Rational function levels: c = n/d is a p-th power exactly when n·d^(p-1)
    is a polynomial in s^p with p-th power coefficients. A step a^p = e only
    has p-th powers inside its base.
    """
    c = field.coerce(c)
    if not c or field.is_finite:
        return True
    p = field.characteristic
    if isinstance(field, RationalFunctionField):
        num, den = c.rep
        h = num * den ** (p - 1)
        statuses = []
        for i, coeff in enumerate(h.coeffs):
            if not coeff:
                continue
            if i % p:
                return False
            statuses.append(_pth_power(field.base, coeff))
        if False in statuses:
            return False
        return True if all(statuses) else None
    if isinstance(field, AlgebraicExtension):
        mu = field.minpoly
        radicial_step = mu.deg == p and not any(mu.coeff(i) for i in range(1, p))
        if radicial_step and c.rep.deg > 0:
            return False
    return None


def _irreducible_binomial(f: UPoly) -> bool:
    """t^(p^e) − c over a field of characteristic p is irreducible iff c is not a p-th power."""
    p = f.field.characteristic
    n = f.deg
    if not p or n < p or any(f.coeff(i) for i in range(1, n)):
        return False
    while n % p == 0:
        n //= p
    return n == 1 and _pth_power(f.field, -f.coeff(0)) is False


def is_irreducible(f: UPoly, shift_attempts: int = DEFAULT_SHIFT_ATTEMPTS) -> bool:
    factors = univ_factor(f, shift_attempts)
    return len(factors) == 1 and factors[0][1] == 1


def roots(f: UPoly) -> list:
    """Roots in the coefficient field, from the linear factors."""
    return [-g.coeff(0) for g, _ in univ_factor(f) if g.deg == 1]


def checked_extension(base, name: str, minpoly: UPoly, policy: str = "auto",
                      degree_bound: int = 4,
                      shift_attempts: int = DEFAULT_SHIFT_ATTEMPTS) -> tuple[AlgebraicExtension, bool]:
    """Build base[name]/(minpoly) and report whether irreducibility was verified.

    policy "on" always checks (and raises on reducible input), "off" never
    does, "auto" checks finite bases and degrees up to degree_bound.
    """
    field = AlgebraicExtension(base, name, minpoly)
    check = policy == "on" or (policy == "auto" and (base.is_finite or minpoly.deg <= degree_bound))
    if not check:
        logger.warning("Irreducibility of %s over %s asserted, not verified",
                       minpoly.render(name), base)
        return field, False
    try:
        irreducible = is_irreducible(field.minpoly, shift_attempts)
    except FactorizationError as e:
        logger.warning("Cannot verify irreducibility of %s: %s", minpoly.render(name), e)
        return field, False
    if not irreducible:
        raise ReducibleMinimalPolynomial(f"{minpoly.render(name)} is reducible over {base}")
    return field, True


# -- squarefree decomposition ----------------------------------------------

def _pth_root_poly(g: UPoly) -> UPoly:
    p = g.field.characteristic
    coeffs = [g.field.pth_root(g.coeff(i)) for i in range(0, g.deg + 1, p)]
    return UPoly._raw(g.field, coeffs)


def squarefree_decomposition(f: UPoly) -> list[tuple[UPoly, int]]:
    """Yun's algorithm, with p-th roots for the inseparable part in characteristic p."""
    f = f.monic()
    if f.deg <= 0:
        return []
    result = []
    g = f.gcd(f.derivative())
    w = f.exact_div(g)
    i = 1
    while w.deg > 0:
        y = w.gcd(g)
        z = w.exact_div(y)
        if z.deg > 0:
            result.append((z, i))
        i += 1
        w = y
        g = g.exact_div(y)
    if g.deg > 0:
        p = f.field.characteristic
        for h, e in squarefree_decomposition(_pth_root_poly(g)):
            result.append((h, e * p))
    return result


# -- prime fields ----------------------------------------------------------

def _factor_gf(f: UPoly) -> list[tuple[UPoly, int]]:
    p = f.field.characteristic
    dense = ZZ.map([c.rep for c in reversed(f.coeffs)])
    _, pairs = gf_factor(dense, p, ZZ)
    return [(UPoly(f.field, [int(c) for c in reversed(g)]), e) for g, e in pairs]


def _to_sympy(c: Fraction):
    return sympy.Rational(c.numerator, c.denominator)


def _from_sympy(c) -> Fraction:
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


def _factor_rational(f: UPoly) -> list[tuple[UPoly, int]]:
    t = sympy.Symbol("t")
    poly = sympy.Poly.from_list([_to_sympy(c.rep) for c in reversed(f.coeffs)], t, domain=QQ)
    _, pairs = poly.factor_list()
    out = []
    for g, e in pairs:
        coeffs = [_from_sympy(c) for c in reversed(g.all_coeffs())]
        out.append((UPoly(f.field, coeffs).monic(), e))
    return out


# -- finite towers: Cantor-Zassenhaus --------------------------------------

def _factor_finite(f: UPoly) -> list[tuple[UPoly, int]]:
    q = f.field.size
    rng = random.Random(f.deg)
    out = []
    for g, e in squarefree_decomposition(f):
        for d_part, d in _distinct_degree(g, q):
            for h in _equal_degree(d_part, d, q, rng):
                out.append((h, e))
    return out


def _distinct_degree(f: UPoly, q: int) -> list[tuple[UPoly, int]]:
    t = UPoly.x(f.field)
    out = []
    h = t % f
    d = 1
    while 2 * d <= f.deg:
        h = h.pow_mod(q, f)
        g = f.gcd(h - t)
        if g.deg > 0:
            out.append((g, d))
            f = f.exact_div(g)
            h = h % f
        d += 1
    if f.deg > 0:
        out.append((f, f.deg))
    return out


def _equal_degree(f: UPoly, d: int, q: int, rng: random.Random) -> list[UPoly]:
    if f.deg == d:
        return [f]
    field = f.field
    p = field.characteristic
    while True:
        a = UPoly._raw(field, [field.random_element(rng) for _ in range(f.deg)])
        if a.deg < 1:
            continue
        if p == 2:
            m = (q.bit_length() - 1) * d
            b, power = a % f, a % f
            for _ in range(m - 1):
                power = (power * power) % f
                b = b + power
        else:
            b = a.pow_mod((q ** d - 1) // 2, f) - 1
        g = f.gcd(b)
        if 0 < g.deg < f.deg:
            return _equal_degree(g, d, q, rng) + _equal_degree(f.exact_div(g), d, q, rng)


# -- algebraic steps over an infinite base: Trager --------------------------

def _factor_algebraic(f: UPoly, attempts: int) -> list[tuple[UPoly, int]]:
    out = []
    for g, e in squarefree_decomposition(f):
        for h in _trager(g, attempts):
            out.append((h, e))
    return out


def _shifts(base, attempts: int):
    p = base.characteristic
    count = 0
    if p == 0:
        for k in range(attempts):
            yield base(k)
        return
    for k in range(min(p, attempts)):
        yield base(k)
        count += 1
    transcendentals = [lvl for lvl in base.levels if isinstance(lvl, RationalFunctionField)]
    if not transcendentals:
        return
    s = base.coerce(transcendentals[0].gen)
    j = 1
    while count < attempts:
        for c in range(p):
            if count >= attempts:
                return
            yield s ** j + c
            count += 1
        j += 1


def _is_squarefree(n: UPoly) -> bool:
    return n.gcd(n.derivative()).deg == 0


def _trager(g: UPoly, attempts: int) -> list[UPoly]:
    field = g.field
    if g.deg == 1:
        return [g]
    alpha = field.gen
    for k in _shifts(field.base, attempts):
        s = alpha * k
        shifted = g.compose(UPoly._raw(field, [-s, field.one]))
        norm = polynomial_norm(shifted)
        if not _is_squarefree(norm):
            logger.debug("Norm not squarefree at shift %s", k)
            continue
        factors = []
        for n_i, _ in univ_factor(norm, attempts):
            h = shifted.gcd(n_i.change_field(field))
            if h.deg > 0:
                factors.append(h.compose(UPoly._raw(field, [s, field.one])).monic())
        return factors
    raise FactorizationError(
        f"no squarefree norm for {g.render('t')} over {field}; the step may be inseparable")


# -- rational function fields -----------------------------------------------

def _factor_function_field(f: UPoly) -> list[tuple[UPoly, int]]:
    field = f.field
    prime = field.prime_field
    names = [f"v{i}" for i in range(len(field.levels) - 1)]
    variables = tuple(names) + ("t",)
    rename = {level.name: names[i] for i, level in enumerate(field.levels[1:])}
    images = tower_images(field, prime, variables, rename)
    cleared = _clear_denominators(f, images, prime, variables)
    if prime.characteristic == 0:
        pairs = _factor_multivariate_rational(cleared)
    else:
        pairs = _factor_kronecker(cleared)
    gens = [field.coerce(level.gen) for level in field.levels[1:]]
    out = []
    last = len(variables) - 1
    for h, e in pairs:
        if h.degree_in(last) <= 0:
            continue
        coeffs = [field.zero] * (h.degree_in(last) + 1)
        for k, part in h.coefficients_in(last).items():
            coeffs[k] = part.evaluate(gens + [field.zero])
        out.append((UPoly._raw(field, coeffs).monic(), e))
    return out


def _clear_denominators(f: UPoly, images, prime, variables) -> MultiPoly:
    fractions = [to_fraction(c, images, prime, variables) if c else None for c in f.coeffs]
    dens: list[MultiPoly] = []
    for frac in fractions:
        if frac is not None and not frac[1].is_constant() and frac[1] not in dens:
            dens.append(frac[1])
    common = MultiPoly.constant(prime, variables, 1)
    for d in dens:
        common = common * d
    t = MultiPoly.variable(prime, variables, variables[-1])
    out = MultiPoly.zero(prime, variables)
    for i, frac in enumerate(fractions):
        if frac is None:
            continue
        num, den = frac
        out = out + num * common.exact_div(den) * t ** i
    return out


def _factor_multivariate_rational(poly: MultiPoly) -> list[tuple[MultiPoly, int]]:
    gens = sympy.symbols(" ".join(poly.variables))
    rep = {exp: _to_sympy(c.rep) for exp, c in poly.terms.items()}
    spoly = sympy.Poly.from_dict(rep, *gens, domain=QQ)
    _, pairs = spoly.factor_list()
    out = []
    for g, e in pairs:
        terms = {tuple(m): _from_sympy(c) for m, c in g.terms()}
        out.append((MultiPoly(poly.field, poly.variables, terms), e))
    return out


def _factor_kronecker(poly: MultiPoly) -> list[tuple[MultiPoly, int]]:
    out = []
    rest = poly
    while not rest.is_constant():
        h = _kronecker_divisor(rest)
        e = 0
        while True:
            try:
                quotient = rest.exact_div(h)
            except ArithmeticError:
                break
            rest = quotient
            e += 1
        out.append((h, e))
    return out


def _kronecker_divisor(poly: MultiPoly) -> MultiPoly:
    """Smallest-subset irreducible divisor found through f(z, z^D, z^(D^2), ...)."""
    n = poly.nvars
    base = max(poly.degree_in(i) for i in range(n)) + 1
    weights = [base ** i for i in range(n)]
    image: dict[int, FieldElem] = {}
    for exp, c in poly.terms.items():
        image[sum(w * e for w, e in zip(weights, exp))] = c
    dense = [poly.field.zero] * (max(image) + 1)
    for k, c in image.items():
        dense[k] = c
    pieces: list[UPoly] = []
    for g, e in univ_factor(UPoly._raw(poly.field, dense)):
        pieces.extend([g] * e)
    labels = [pieces.index(g) for g in pieces]
    seen = set()
    for size in range(1, len(pieces) + 1):
        for combo in itertools.combinations(range(len(pieces)), size):
            key = tuple(sorted(labels[i] for i in combo))
            if key in seen:
                continue
            seen.add(key)
            product = UPoly.one(poly.field)
            for i in combo:
                product = product * pieces[i]
            candidate = _kronecker_inverse(product, base, n, poly)
            if candidate is None or candidate.is_constant():
                continue
            if candidate.divides(poly):
                return candidate
    return poly


def _kronecker_inverse(image: UPoly, base: int, n: int, like: MultiPoly) -> MultiPoly | None:
    terms = {}
    for k, c in enumerate(image.coeffs):
        if not c:
            continue
        exp = []
        rest = k
        for _ in range(n):
            exp.append(rest % base)
            rest //= base
        if rest:
            return None
        terms[tuple(exp)] = c
    return MultiPoly._raw(like.field, like.variables, terms)
