"""Move between tower elements and fractions of multivariate polynomials.

Tower generators are mapped to polynomials of some ring (usually the
coordinate ring of a variety); an element becomes numerator/denominator in
that ring. The inverse direction is plain evaluation.
"""

from kernel.fields import FieldElem, RationalFunctionField
from kernel.mpoly import MultiPoly
from kernel.upoly import UPoly


def to_fraction(a: FieldElem, images: dict[str, MultiPoly], stop, variables) -> tuple[MultiPoly, MultiPoly]:
    """Write a as num/den with num, den in stop[variables].

    `images` maps the name of every tower level above `stop` to a polynomial.
    Denominators are not reduced; callers only rely on num/den being equal
    to a after evaluation.
    """
    field = a.field
    if field == stop:
        return (MultiPoly.constant(stop, variables, a),
                MultiPoly.constant(stop, variables, 1))
    x = images[field.name]
    if isinstance(field, RationalFunctionField):
        num, den = a.rep
        n_num, n_den = _upoly_fraction(num, x, images, stop, variables)
        d_num, d_den = _upoly_fraction(den, x, images, stop, variables)
        return n_num * d_den, n_den * d_num
    return _upoly_fraction(a.rep, x, images, stop, variables)


def _upoly_fraction(poly: UPoly, x: MultiPoly, images, stop, variables):
    acc_num = MultiPoly.zero(stop, variables)
    acc_den = MultiPoly.constant(stop, variables, 1)
    power = MultiPoly.constant(stop, variables, 1)
    for i, c in enumerate(poly.coeffs):
        if i:
            power = power * x
        if not c:
            continue
        c_num, c_den = to_fraction(c, images, stop, variables)
        term = c_num * power
        if c_den == acc_den:
            acc_num = acc_num + term
        else:
            acc_num = acc_num * c_den + term * acc_den
            acc_den = acc_den * c_den
    return acc_num, acc_den


def tower_images(field, stop, variables, names: dict[str, str] | None = None) -> dict[str, MultiPoly]:
    """Map each level above `stop` to the ring variable of the same (or renamed) name."""
    names = names or {}
    images = {}
    for level in field.levels:
        if level.base is None or not level.base.has_subfield(stop):
            continue
        var = names.get(level.name, level.name)
        images[level.name] = MultiPoly.variable(stop, variables, var)
    return images


def from_polynomial(poly: MultiPoly, field, values) -> FieldElem:
    """Evaluate a polynomial of stop[variables] at tower elements."""
    return poly.evaluate([field.coerce(v) for v in values])
