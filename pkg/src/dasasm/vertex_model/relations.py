"""Symmetries, local relations, specializations and global properties of the weights.

Every check is an exact identity between Laurent polynomials (weights are
used in cleared form) or an exact comparison at sampled points.
"""

from __future__ import annotations

import itertools
import random

from ..config import check_bound
from ..errors import DomainError, InputError
from ..exact import LaurentPoly, inverse, sigma
from ..reports import Report, sample_points
from ..triangles import LocalConfig, VertexType
from .partition import partition_function_eval, partition_function_symbolic, symbolic_ring
from .weights import WeightContext, weight_cleared

IN, OUT = True, False


def _orient(x):
    return "in" if x else "out"


def _case_label(values):
    return "(" + ",".join(_orient(x) for x in values) + ")"


# ---------------------------------------------------------------------------
# weights addressed by orientation tuples


def bulk_cleared(l, b, r, t, u, q):
    """sigma(q^4) * W(l,b,r,t; u), or 0 if the six-vertex rule fails."""
    if l + b + r + t != 2:
        return 0
    c = LocalConfig.classify(VertexType.BULK, (l, b, r, t))
    return weight_cleared(c, u, WeightContext(q))


def left_cleared(a, b, u, q):
    """sigma(q) * WL(a, b; u) for the two edges of a left boundary vertex."""
    return weight_cleared(LocalConfig.classify(VertexType.LEFT, (a, b)), u, WeightContext(q))


def right_cleared(a, b, u, q):
    """sigma(q) * WR(a, b; u) for the two edges of a right boundary vertex."""
    return weight_cleared(LocalConfig.classify(VertexType.RIGHT, (a, b)), u, WeightContext(q))


_LEGAL_BULK = [c.orientation for c in LocalConfig if c.vertex_type is VertexType.BULK]
_PAIRS = list(itertools.product((IN, OUT), repeat=2))


def _ring():
    return LaurentPoly.gens(("q", "u"))


def verify_weight_symmetries() -> Report:
    """Reflection, arrow reversal, vertical reflection and reduction identities."""
    q, u = _ring()
    ub = u.monomial_inverse()
    qb = q.monomial_inverse()
    s4, s1 = sigma(q**4), sigma(q)
    rep = Report()
    for a, b, c, d in _LEGAL_BULK:
        w = bulk_cleared(a, b, c, d, u, q)
        label = _case_label((a, b, c, d))
        rep.add("Wref-bulk-diagonal", label, w == bulk_cleared(d, c, b, a, u, q))
        rep.add("Wref-bulk-antidiagonal", label, w == bulk_cleared(b, a, d, c, u, q))
        rep.add("Wref-bulk-reversal", label, w == bulk_cleared(not a, not b, not c, not d, u, q))
        rep.add("Wrep-bulk", label, w == bulk_cleared(c, b, a, d, ub, q))
        delta = s4 if (a != d and b != c) else 0
        rep.add("Wred-bulk-q2", label, bulk_cleared(a, b, c, d, q**2, q) == delta)
        rep.add("Wred-bulk-qbar2", label, bulk_cleared(c, b, a, d, qb**2, q) == delta)
    for a, b in _PAIRS:
        label = _case_label((a, b))
        wl = left_cleared(a, b, u, q)
        wr = right_cleared(a, b, u, q)
        rep.add("Wref-left-swap", label, wl == left_cleared(b, a, u, q))
        rep.add("Wref-left-reversal", label, wl == left_cleared(not a, not b, u, q))
        rep.add("Wref-right-swap", label, wr == right_cleared(b, a, u, q))
        rep.add("Wref-right-reversal", label, wr == right_cleared(not a, not b, u, q))
        rep.add("Wrep-boundary", label, wl == right_cleared(b, a, ub, q))
        delta = s1 if a != b else 0
        rep.add("Wred-left-qbar", label, left_cleared(a, b, qb, q) == delta)
        rep.add("Wred-right-q", label, right_cleared(b, a, q, q) == delta)
    return rep


# ---------------------------------------------------------------------------
# small networks of vertices
#
# A vertex is (kind, parameter, ports). Bulk ports are (left, below, right,
# above) after rotating a diagonal vertex so that its parameter sits to the
# lower left; left-boundary ports are (above, right) and right-boundary
# ports are (left, above). Port entries name edges. External edges occur
# once per side and carry an orientation relative to the vertex they touch.
# Internal edges occur twice; their orientation is summed over.


def _network_sum(vertices, external, q):
    internal = []
    seen = {}
    for _, _, ports in vertices:
        for e in ports:
            if e in external:
                continue
            if e in seen:
                seen[e] += 1
            else:
                seen[e] = 1
                internal.append(e)
    if any(v != 2 for v in seen.values()):
        raise InputError("malformed network: internal edges must have two ends")
    total = 0
    for bits in itertools.product((IN, OUT), repeat=len(internal)):
        state = dict(zip(internal, bits))
        used = set()
        prod = 1
        for kind, param, ports in vertices:
            orient = []
            for e in ports:
                if e in external:
                    orient.append(external[e])
                elif e in used:
                    orient.append(not state[e])
                else:
                    used.add(e)
                    orient.append(state[e])
            if kind == "bulk":
                w = bulk_cleared(*orient, param, q)
            elif kind == "left":
                w = left_cleared(*orient, param, q)
            else:
                w = right_cleared(*orient, param, q)
            if w == 0:
                prod = 0
                break
            prod = prod * w
        total = total + prod
    return total


def _networks():
    q, u, v, w = LaurentPoly.gens(("q", "u", "v", "w"))
    qb = q.monomial_inverse()
    ub = u.monomial_inverse()
    x = q**2 * u * v.monomial_inverse()
    nets = {}
    nets["YBE-vertical"] = (
        ("a1", "a2", "a3", "b1", "b2", "b3"),
        [
            ("bulk", x, ("r", "k", "a2", "a1")),
            ("bulk", v * w, ("a3", "b2", "g", "r")),
            ("bulk", u * w, ("g", "b1", "b3", "k")),
        ],
        [
            ("bulk", u * w, ("a3", "e1", "g", "a1")),
            ("bulk", v * w, ("g", "e2", "b3", "a2")),
            ("bulk", x, ("b2", "b1", "e2", "e1")),
        ],
    )
    nets["YBE-horizontal"] = (
        ("a1", "a2", "a3", "b1", "b2", "b3"),
        [
            ("bulk", x, ("a1", "a2", "k", "r")),
            ("bulk", u * w, ("k", "a3", "b1", "g")),
            ("bulk", v * w, ("r", "g", "b2", "b3")),
        ],
        [
            ("bulk", v * w, ("a2", "a3", "er", "g")),
            ("bulk", u * w, ("a1", "g", "eb", "b3")),
            ("bulk", x, ("eb", "er", "b1", "b2")),
        ],
    )
    nets["RE-left"] = (
        ("a1", "a2", "b1", "b2"),
        [
            ("bulk", x, ("e2", "e1", "a2", "a1")),
            ("left", v, ("e2", "h")),
            ("bulk", u * v, ("h", "e3", "b2", "e1")),
            ("left", u, ("e3", "b1")),
        ],
        [
            ("left", u, ("a1", "h")),
            ("bulk", u * v, ("h", "m", "k", "a2")),
            ("left", v, ("m", "p")),
            ("bulk", x, ("k", "p", "b1", "b2")),
        ],
    )
    nets["RE-right"] = (
        ("a1", "a2", "b1", "b2"),
        [
            ("bulk", x, ("a1", "a2", "e", "r")),
            ("right", u, ("e", "f")),
            ("bulk", u * v, ("r", "f", "h", "b1")),
            ("right", v, ("h", "b2")),
        ],
        [
            ("right", v, ("a2", "m")),
            ("bulk", u * v, ("a1", "m", "h", "k")),
            ("right", u, ("h", "j")),
            ("bulk", x, ("k", "j", "b2", "b1")),
        ],
    )
    nets["BUE-left"] = (
        ("a", "b"),
        [("left", qb * u, ("a", "e")), ("left", qb * ub, ("e", "b"))],
        None,
    )
    nets["BUE-right"] = (
        ("a", "b"),
        [("right", q * u, ("a", "e")), ("right", q * ub, ("e", "b"))],
        None,
    )
    return q, u, nets


LOCAL_RELATIONS = ("YBE-vertical", "YBE-horizontal", "RE-left", "RE-right", "BUE-left", "BUE-right")


def verify_local_relation(rel: str) -> Report:
    """Check a local relation for every orientation of its external edges."""
    if rel not in LOCAL_RELATIONS:
        raise InputError(f"unknown local relation {rel!r}; expected one of {', '.join(LOCAL_RELATIONS)}")
    q, u, nets = _networks()
    ext, lhs, rhs = nets[rel]
    rep = Report()
    for bits in itertools.product((IN, OUT), repeat=len(ext)):
        assignment = dict(zip(ext, bits))
        left = _network_sum(lhs, assignment, q)
        if rhs is None:
            # sigma(q)^2 * LHS = sigma(qu) sigma(q/u) delta_{a, reversed b}
            right = sigma(q * u) * sigma(q * u.monomial_inverse()) if bits[0] != bits[1] else 0
        else:
            right = _network_sum(rhs, assignment, q)
        label = ",".join(f"{k}={_orient(b)}" for k, b in assignment.items())
        rep.add(rel, label, left == right, witness=None if left == right else {"lhs": left, "rhs": right})
    return rep


def verify_all_local_relations() -> Report:
    rep = Report()
    for rel in LOCAL_RELATIONS:
        rep.extend(verify_local_relation(rel))
    return rep


# ---------------------------------------------------------------------------
# specializations


def _spec_prefactor(prop, n, q, u):
    """Cleared prefactor P with C_n(specialized) = P * C_m(shifted).

    ``u`` holds u_1..u_{n+1} (already specialized); returns (P, shift) where
    ``shift`` lists the arguments of the smaller partition function.
    """
    s = sigma
    if prop == "spec1":
        p = s(q) ** 2 * (q + inverse(q))
        for i in range(1, n):
            p = p * s(q**3 * u[i]) ** 2
        p = p * s(q**3 * u[n])
        return p, list(u[1:])
    if prop == "spec2":
        u1, u2 = u[0], u[1]
        p = s(u1) * s(q * u1) * s(u2) * s(q * u2) * s(q**4) ** 2
        for i in range(2, n):
            p = p * (s(q**2 * u1 * u[i]) * s(q**2 * u2 * u[i])) ** 2
        p = p * s(q**2 * u1 * u[n]) * s(q**2 * u2 * u[n])
        return p, list(u[2:])
    if prop == "spec3":
        u1, un1 = u[0], u[n]
        p = s(q * u1) * (s(q * inverse(u1)) + s(q)) * s(q**4)
        for i in range(1, n):
            p = p * s(q**2 * u1 * u[i]) * s(q**2 * u[i] * un1)
        return p, list(u[1:n]) + [u1]
    raise InputError(f"unknown specialization {prop!r}")


SPECIALIZATIONS = ("spec1", "spec2", "spec3", "spec4")


def _min_n(prop):
    return 2 if prop == "spec2" else 1


def _symbolic_specialization(prop, n):
    ring = symbolic_ring(n)
    gens = LaurentPoly.gens(ring)
    q, us = gens[0], list(gens[1:])
    full = partition_function_symbolic(n).poly
    if prop == "spec4":
        lhs = full.substitute_monomials({f"u{n}": q**2, f"u{n + 1}": 1})
        return lhs, LaurentPoly(ring)
    if prop == "spec1":
        mapping = {"u1": q}
    elif prop == "spec2":
        mapping = {"u2": q**2 * us[0].monomial_inverse()}
    else:
        mapping = {f"u{n + 1}": q**2 * us[0].monomial_inverse()}
    lhs = full.substitute_monomials(mapping)
    spec_u = [x.substitute_monomials(mapping) for x in us]
    pref, shift = _spec_prefactor(prop, n, q, spec_u)
    m = len(shift) - 1
    small = partition_function_symbolic(m).poly.evaluate([q] + shift)
    return lhs, pref * small


def _point_specialization(prop, n, free, q):
    """Both sides at a point; ``free`` supplies the unconstrained parameters."""
    ctx = WeightContext(q)
    if prop == "spec4":
        u = list(free[: n - 1]) + [q**2, 1]
        return partition_function_eval(n, u, ctx), 0
    u = list(free[: n + 1])
    if prop == "spec1":
        u[0] = q
    elif prop == "spec2":
        u[1] = q**2 * inverse(u[0])
    else:
        u[n] = q**2 * inverse(u[0])
    lhs = partition_function_eval(n, u, ctx)
    pref, shift = _spec_prefactor(prop, n, q, u)
    rhs = pref * partition_function_eval(len(shift) - 1, shift, ctx)
    return lhs, rhs


def verify_specialization(prop: str, n: int, trials: int = 20, seed: int = 0, symbolic: bool | None = None) -> Report:
    """Check a specialization identity at order 2n+1.

    Symbolic (polynomial identity) for n <= 2 by default, otherwise at
    ``trials`` seeded random rational points with exact DP evaluation.
    """
    if prop not in SPECIALIZATIONS:
        raise InputError(f"unknown specialization {prop!r}")
    if n < _min_n(prop):
        raise InputError(f"{prop} needs n >= {_min_n(prop)}")
    if symbolic is None:
        symbolic = n <= 2
    rep = Report()
    if symbolic:
        check_bound("symbolic", n)
        lhs, rhs = _symbolic_specialization(prop, n)
        rep.add(prop, f"n={n},symbolic", lhs == rhs)
        return rep
    check_bound("dp", n)
    rng = random.Random(f"{prop}:{n}:{seed}")

    def accept(pt):
        q = pt[0]
        if q in (1, -1):
            raise DomainError("degenerate q", "sigma(q)")
        return _point_specialization(prop, n, pt[1:], q)

    for k, (pt, (lhs, rhs)) in enumerate(sample_points(rng, n + 2, trials, accept)):
        rep.add(prop, f"n={n},trial={k:03d}", lhs == rhs, witness={"q": pt[0], "u": pt[1:]})
    return rep


# ---------------------------------------------------------------------------
# global properties of the cleared polynomial


def verify_global_properties(n: int) -> Report:
    """Evenness, degree bounds, reciprocal invariance and symmetry for order 2n+1."""
    check_bound("symbolic", n)
    Z = partition_function_symbolic(n).poly
    ring = Z.variables
    gens = LaurentPoly.gens(ring)
    rep = Report()
    case = f"n={n}"
    for i in range(1, n + 1):
        var = f"u{i}"
        k = ring.index(var)
        rep.add("even", f"{case},{var}", all(ex[k] % 2 == 0 for ex in Z.terms))
        lo, hi = Z.degree_range(var)
        rep.add("degree", f"{case},{var}", -2 * n <= lo and hi <= 2 * n, witness=(lo, hi))
    lo, hi = Z.degree_range(f"u{n + 1}")
    rep.add("degree", f"{case},u{n + 1}", -n <= lo and hi <= n, witness=(lo, hi))
    recip = {f"u{i}": gens[i].monomial_inverse() for i in range(1, n + 2)}
    rep.add("reciprocal", case, Z.substitute_monomials(recip) == Z)
    for i in range(1, n):
        swap = {f"u{i}": gens[i + 1], f"u{i + 1}": gens[i]}
        rep.add("symmetric", f"{case},u{i}<->u{i + 1}", Z.substitute_monomials(swap) == Z)
    return rep
