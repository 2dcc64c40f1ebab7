"""Symmetric tensors B^⊙d in the orbit basis.

An orbit is a sorted tuple of d basis indices; e_Γ is the sum of the
distinct pure tensors e_{γ1}⊗…⊗e_{γd} over the permutations γ of Γ. A
symmetric tensor's coordinate on e_Γ is its tensor coefficient at the sorted
index tuple Γ, so elements are only ever evaluated at sorted targets.
"""

import itertools
from collections import Counter
from math import factorial

from sympower.algebra import FiniteFreeAlgebra


def orbit_basis(d: int, window: tuple[int, int]) -> list[tuple]:
    """All multisets of size d from the inclusive index window, lexicographic."""
    low, high = window
    if high < low:
        raise ValueError(f"empty window {window}")
    return list(itertools.combinations_with_replacement(range(low, high + 1), d))


def orbit_size(orbit: tuple) -> int:
    size = factorial(len(orbit))
    for count in Counter(orbit).values():
        size //= factorial(count)
    return size


def distinct_permutations(orbit: tuple):
    """Each distinct ordering of the multiset exactly once."""
    counts = Counter(orbit)
    keys = sorted(counts)
    out = []

    def walk(prefix):
        if len(prefix) == len(orbit):
            out.append(tuple(prefix))
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                walk(prefix)
                prefix.pop()
                counts[k] += 1

    walk([])
    return out


class SymElem:
    """An element of B^⊙d: orbit → base coefficient, zero coefficients dropped."""

    __slots__ = ("algebra", "d", "coeffs")

    def __init__(self, algebra: FiniteFreeAlgebra, d: int, coeffs: dict | None = None):
        self.algebra = algebra
        self.d = d
        self.coeffs = {tuple(sorted(k)): v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def basis_element(cls, algebra: FiniteFreeAlgebra, orbit: tuple) -> "SymElem":
        return cls(algebra, len(orbit), {orbit: algebra.base.one})

    @classmethod
    def unit(cls, algebra: FiniteFreeAlgebra, d: int) -> "SymElem":
        return tensor_power(algebra, algebra.one(), d)

    def __add__(self, other: "SymElem") -> "SymElem":
        coeffs = dict(self.coeffs)
        for k, v in other.coeffs.items():
            coeffs[k] = coeffs[k] + v if k in coeffs else v
        return SymElem(self.algebra, self.d, coeffs)

    def scale(self, c) -> "SymElem":
        return SymElem(self.algebra, self.d, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other: "SymElem") -> "SymElem":
        return sym_multiply(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymElem):
            return NotImplemented
        return self.d == other.d and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        terms = [f"({v})*e{list(k)}" for k, v in sorted(self.coeffs.items())]
        return "SymElem(" + (" + ".join(terms) or "0") + ")"


def tensor_power(algebra: FiniteFreeAlgebra, b: list, d: int) -> SymElem:
    """b⊗…⊗b: coefficient on e_Γ is Π_{i∈Γ} b_i."""
    coeffs = {}
    for orbit in orbit_basis(d, (0, algebra.rank - 1)) if algebra.rank else []:
        c = algebra.base.one
        for i in orbit:
            c = c * b[i]
            if not c:
                break
        coeffs[orbit] = c
    if d == 0:
        coeffs = {(): algebra.base.one}
    return SymElem(algebra, d, coeffs)


def additive_symmetrization(algebra: FiniteFreeAlgebra, b: list, d: int) -> SymElem:
    """Σ_k 1⊗…⊗b (slot k)⊗…⊗1."""
    unit = algebra.one()
    coeffs = {}
    for orbit in orbit_basis(d, (0, algebra.rank - 1)) if algebra.rank else []:
        acc = algebra.base.zero
        for k in range(d):
            term = b[orbit[k]]
            for j, i in enumerate(orbit):
                if j != k:
                    term = term * unit[i]
            acc = acc + term
        coeffs[orbit] = acc
    return SymElem(algebra, d, coeffs)


def _sub_multisets(support, size: int) -> set:
    out = set()
    for orbit in support:
        out.update(itertools.combinations(orbit, size))
    return out


def sym_multiply(a: SymElem, b: SymElem) -> SymElem:
    """Product in B^⊗d, read off at each sorted target index tuple.

    The coefficient at τ is Σ a_[γ] b_[δ] Π_k c(γ_k, δ_k; τ_k) over all index
    tuples γ, δ; it is accumulated slot by slot with partial multisets as
    state, pruned to sub-multisets of the two supports.
    """
    algebra = a.algebra
    if a.algebra is not b.algebra or a.d != b.d:
        raise ValueError("symmetric tensors of different algebras or degrees")
    d, base = a.d, algebra.base
    if d == 0:
        return SymElem(algebra, 0, {(): (a.coeffs.get((), base.zero) * b.coeffs.get((), base.zero))})
    allowed_a = [_sub_multisets(a.coeffs, s) for s in range(d + 1)]
    allowed_b = [_sub_multisets(b.coeffs, s) for s in range(d + 1)]
    structure = algebra.structure
    result = {}
    for target in orbit_basis(d, (0, algebra.rank - 1)):
        states = {((), ()): base.one}
        for k, t in enumerate(target):
            nxt: dict = {}
            for (ga, gb), value in states.items():
                for i in range(algebra.rank):
                    na = tuple(sorted(ga + (i,)))
                    if na not in allowed_a[k + 1]:
                        continue
                    for j in range(algebra.rank):
                        c = structure[i][j][t]
                        if not c:
                            continue
                        nb = tuple(sorted(gb + (j,)))
                        if nb not in allowed_b[k + 1]:
                            continue
                        key = (na, nb)
                        w = value * c
                        nxt[key] = nxt[key] + w if key in nxt else w
            states = nxt
            if not states:
                break
        acc = base.zero
        for (ga, gb), value in states.items():
            acc = acc + value * a.coeffs[ga] * b.coeffs[gb]
        if acc:
            result[target] = acc
    return SymElem(algebra, d, result)
