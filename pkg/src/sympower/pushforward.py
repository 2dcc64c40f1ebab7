"""f_*g for a finite free algebra B over A, through u: B^⊙d → A."""

import logging

from errors import NotAPluginPoint, NotAUnit, OracleMismatch
from sympower.algebra import FiniteFreeAlgebra
from sympower.orbits import additive_symmetrization, tensor_power
from sympower.umap import u_apply

logger = logging.getLogger("transfers.sympower.pushforward")


def pushforward(algebra: FiniteFreeAlgebra, plugin, g):
    """Push a B-point of the plugin down to an A-point.

    𝔾_a sends g to u(Σ_k 1⊗…⊗g⊗…⊗1), 𝔾_m and μ_n send it to u(g^{⊗d});
    products act componentwise.
    """
    if plugin.kind == "product":
        return tuple(pushforward(algebra, p, x) for p, x in zip(plugin.factors, g))
    base, d = algebra.base, algebra.rank
    if plugin.kind == "additive":
        if d == 0:
            return base.zero
        return u_apply(algebra, additive_symmetrization(algebra, g, d))
    if d == 0:
        return base.one
    if not algebra.is_unit(g):
        raise NotAUnit(f"{algebra.render(g)} is not a unit: its multiplication matrix is singular")
    order = getattr(plugin, "n", None)
    if order is not None and algebra.power(g, order) != algebra.one():
        raise NotAPluginPoint(f"{algebra.render(g)} is not an {order}-th root of unity")
    value = u_apply(algebra, tensor_power(algebra, g, d))
    if order is not None and not (value ** order).is_one():
        raise OracleMismatch(f"pushforward {value} of a root of unity is not one")
    return value
