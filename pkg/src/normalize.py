"""Canonical form of generic cycles: one prime ideal per point.

A cycle point (M, z̄, m) over K is replaced by the prime ideal of K[z̄] it
defines, with multiplicity m·[M : K(z̄)]. Identical primes are merged and
zero multiplicities dropped, so two presentations of the same cycle
normalize to the same list.
"""

from dataclasses import dataclass

from ideals.decompose import point_ideal
from ideals.groebner import GroebnerBasis


@dataclass(frozen=True)
class CanonicalPoint:
    prime: GroebnerBasis
    degree: int
    multiplicity: int

    @property
    def key(self) -> tuple:
        return tuple(self.prime.polys)

    def render(self) -> str:
        gens = ", ".join(g.render() for g in self.prime.polys)
        return f"{self.multiplicity}*[{gens}]"


def normalize_point(base, variables, field, coordinates, multiplicity: int) -> CanonicalPoint:
    """Prime ideal of one presented point, with its multiplicity rescaled."""
    prime, degree = point_ideal(coordinates, base, variables)
    scale = field.degree_over(base) // degree
    return CanonicalPoint(prime, degree, multiplicity * scale)


def merge_points(points: list[CanonicalPoint]) -> list[CanonicalPoint]:
    """Add multiplicities of identical primes, keeping the first occurrence's order."""
    merged: dict[tuple, CanonicalPoint] = {}
    for p in points:
        seen = merged.get(p.key)
        if seen is None:
            merged[p.key] = p
        else:
            merged[p.key] = CanonicalPoint(seen.prime, seen.degree, seen.multiplicity + p.multiplicity)
    return [p for p in merged.values() if p.multiplicity]


def normalize_cycle(cycle) -> list[CanonicalPoint]:
    variables = cycle.target.variables
    points = [normalize_point(cycle.base, variables, p.field, p.coordinates, p.multiplicity)
              for p in cycle.points]
    return sorted(merge_points(points), key=lambda p: (p.degree, p.render()))


def cycles_equal(a, b) -> bool:
    left, right = normalize_cycle(a), normalize_cycle(b)
    return [(p.key, p.multiplicity) for p in left] == [(p.key, p.multiplicity) for p in right]


def render_cycle(points: list[CanonicalPoint]) -> str:
    if not points:
        return "0"
    return " + ".join(p.render() for p in points)
