"""Bulk and boundary weights of the six-vertex model on T_n.

Every weight is ``numerator / clearing factor`` with clearing factor
sigma(q^4) for bulk vertices and sigma(q) for boundary vertices.  The
numerators ("cleared weights") are Laurent polynomials in q and u and
make sense at every q, including eighth roots of unity.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DomainError
from ..exact import div, inverse, sigma, simplify
from ..triangles import LocalConfig, VertexType


@dataclass(frozen=True)
class WeightContext:
    """The global parameter q (a symbol, rational or cyclotomic value)."""

    q: object

    def bulk_factor(self):
        return sigma(self.q**4)

    def boundary_factor(self):
        return sigma(self.q)

    def check_nonsingular(self):
        if self.boundary_factor() == 0:
            raise DomainError("sigma(q) vanishes; use cleared weights", "sigma(q)")
        if self.bulk_factor() == 0:
            raise DomainError("sigma(q^4) vanishes; use cleared weights", "sigma(q^4)")


_BULK_PLUS = {LocalConfig.B1, LocalConfig.B2}
_BULK_MINUS = {LocalConfig.B3, LocalConfig.B4}
_BULK_ONE = {LocalConfig.B5, LocalConfig.B6}


def weight_cleared(c: LocalConfig, u, ctx: WeightContext):
    """Weight times its clearing factor (sigma(q^4) bulk, sigma(q) boundary, 1 otherwise)."""
    q = ctx.q
    vt = c.vertex_type
    if vt is VertexType.BULK:
        if c in _BULK_PLUS:
            return sigma(q**2 * u)
        if c in _BULK_MINUS:
            return sigma(q**2 * inverse(u))
        return sigma(q**4)
    if vt is VertexType.LEFT:
        if c in (LocalConfig.L1, LocalConfig.L2):
            return sigma(q * u)
        return sigma(q)
    if vt is VertexType.RIGHT:
        if c in (LocalConfig.R1, LocalConfig.R2):
            return sigma(q * inverse(u))
        return sigma(q)
    return 1


def clearing_factor_of(c: LocalConfig, ctx: WeightContext):
    vt = c.vertex_type
    if vt is VertexType.BULK:
        return ctx.bulk_factor()
    if vt in (VertexType.LEFT, VertexType.RIGHT):
        return ctx.boundary_factor()
    return 1


def weight(c: LocalConfig, u, ctx: WeightContext):
    """The un-cleared weight; raises DomainError where the clearing factor vanishes."""
    f = clearing_factor_of(c, ctx)
    if f == 0:
        raise DomainError(f"weight of {c.name} is singular at this q", "sigma(q^4)" if c.vertex_type is VertexType.BULK else "sigma(q)")
    num = weight_cleared(c, u, ctx)
    if f == 1:
        return num
    return div(num, f)


def clearing_factor(n: int, ctx: WeightContext):
    """sigma(q)^(2n) * sigma(q^4)^(n^2)."""
    return simplify(ctx.boundary_factor() ** (2 * n) * ctx.bulk_factor() ** (n * n))


def vertex_parameter(n: int, v, u):
    """Spectral parameter at vertex v of T_n; ``u`` is the list u_1..u_{n+1}."""
    i, j = v
    if i == 0 or i == n + 1:
        return None
    if j == i or j == 2 * n + 2 - i:
        return u[i - 1]
    return u[i - 1] * u[min(j, 2 * n + 2 - j) - 1]


BULK_KINDS = tuple(c for c in LocalConfig if c.vertex_type is VertexType.BULK)
LEFT_KINDS = tuple(c for c in LocalConfig if c.vertex_type is VertexType.LEFT)
RIGHT_KINDS = tuple(c for c in LocalConfig if c.vertex_type is VertexType.RIGHT)
