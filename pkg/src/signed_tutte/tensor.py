"""Signed tensor products: the explicit graph and the substitution rule."""

from __future__ import annotations

from dataclasses import dataclass, field

from .quotient import unsigned_phi
from .ring import SIGNED_VARS, UNSIGNED_VARS, PolyZ, UsageError, poly_substitute
from .sgraph import Edge, GraphError, SignedGraph, validate
from .tutte import minor_polys, tctl, unsigned_tutte

SIGNS = ("+", "-")


def _check_sign(sign):
    if sign not in SIGNS:
        raise UsageError(f"sign must be '+' or '-', got {sign!r}")


@dataclass(frozen=True)
class TensorSpec:
    """``m`` with every ``sign`` edge replaced by a copy of ``n`` minus ``e``.

    ``attachment[i]`` picks which endpoint of ``e`` lands on the first endpoint
    of the i-th replaced edge (replaced edges taken in label order).  A short or
    missing tuple means 0 for the rest.
    """

    m: SignedGraph
    sign: str
    n: SignedGraph
    e: int
    attachment: tuple = field(default=())

    def bit(self, i):
        return self.attachment[i] if i < len(self.attachment) else 0


def tensor_graph(spec):
    _check_sign(spec.sign)
    validate(spec.m)
    validate(spec.n)
    dist = spec.n.edge(spec.e)
    if dist.is_loop:
        raise GraphError("distinguished edge is a loop; gluing is undefined")
    rest = [f for f in spec.n.edges if f.label != spec.e]
    inner = [v for v in range(spec.n.num_vertices) if v not in (dist.u, dist.v)]

    keyed = []
    nv = spec.m.num_vertices
    replaced = 0
    for f in spec.m.edges:
        if f.sign != spec.sign:
            keyed.append(((f.label, 0), f.u, f.v, f.sign))
            continue
        if f.is_loop:
            raise GraphError(f"edge {f.label} of m is a loop and cannot be replaced")
        ends = (f.u, f.v) if not spec.bit(replaced) else (f.v, f.u)
        replaced += 1
        where = {dist.u: ends[0], dist.v: ends[1]}
        for w in inner:
            where[w] = nv
            nv += 1
        for j, g in enumerate(rest, start=1):
            keyed.append(((f.label, j), where[g.u], where[g.v], g.sign))

    keyed.sort(key=lambda t: t[0])
    edges = [Edge(u, v, s, i) for i, (_, u, v, s) in enumerate(keyed, start=1)]
    return SignedGraph(nv, tuple(edges))


def substitution_maps(n, e, sign):
    """The four images used by the substitution rule for one sign."""
    _check_sign(sign)
    t_del, t_con = minor_polys(n, e)
    pair = tctl(n, e)
    return {
        "x" + sign: t_del,
        "A" + sign: pair.t_l,
        "y" + sign: t_con,
        "B" + sign: pair.t_c,
    }


def tensor_subst(t_m, sign, n, e):
    return poly_substitute(t_m, substitution_maps(n, e, sign))


def apply_maps(p, maps, repeat=1):
    for _ in range(repeat):
        p = poly_substitute(p, maps)
    return p


def compose_maps(first, second):
    """Single map equal to applying ``first`` then ``second``."""
    out = {v: poly_substitute(PolyZ.var(v), first) for v in SIGNED_VARS}
    return {v: poly_substitute(img, second) for v, img in out.items()}


# ---------------------------------------------------------------- special graphs


def thickening(k, sign):
    """k+1 parallel edges; the distinguished edge carries the top label."""
    _check_sign(sign)
    if k < 1:
        raise UsageError("thickening needs k >= 1")
    g = SignedGraph.from_list(2, [(0, 1, sign, i) for i in range(1, k + 2)])
    return g, k + 1


def stretch(k, sign):
    """A (k+1)-cycle; the distinguished edge carries the top label."""
    _check_sign(sign)
    if k < 1:
        raise UsageError("stretch needs k >= 1")
    edges = [(i, i + 1, sign, i + 1) for i in range(k)]
    edges.append((k, 0, sign, k + 1))
    return SignedGraph.from_list(k + 1, edges), k + 1


def _geometric(a, b, n):
    # a^(n-1) + a^(n-2) b + ... + b^(n-1); zero for n = 0
    total = PolyZ.const(0)
    for i in range(n):
        total = total + a**i * b ** (n - 1 - i)
    return total


def thickening_maps(k, sign):
    """Closed form of the thickening substitution (cross-checked against tctl)."""
    x, y, a, b = (PolyZ.var(v + sign) for v in "xyAB")
    return {
        "x" + sign: b ** (k - 1) * x + a * y * _geometric(y, b, k - 1),
        "y" + sign: y**k,
        "A" + sign: a * _geometric(y, b, k),
        "B" + sign: b**k,
    }


def stretch_maps(k, sign):
    """Closed form of the stretch substitution, dual to ``thickening_maps``."""
    x, y, a, b = (PolyZ.var(v + sign) for v in "xyAB")
    return {
        "x" + sign: x**k,
        "y" + sign: a ** (k - 1) * y + b * x * _geometric(x, a, k - 1),
        "A" + sign: a**k,
        "B" + sign: b * _geometric(x, a, k),
    }


# ---------------------------------------------------------------- unsigned


def unsigned_tensor(t_m, n, e, rank, size):
    """Unsigned Tutte polynomial of a tensor product, without division.

    ``t_m`` is the ordinary Tutte polynomial of a graph with the given rank and
    edge count.  x^i y^j goes to T(n-e)^i T(n/e)^j T_L^(rank-i) T_C^(size-rank-j).
    """
    if t_m.varset != UNSIGNED_VARS:
        raise UsageError("unsigned_tensor expects a polynomial in x, y")
    pos = n.with_signs("+")
    t_del, t_con = (unsigned_phi(p) for p in minor_polys(pos, e))
    pair = tctl(pos, e)
    t_l, t_c = unsigned_phi(pair.t_l), unsigned_phi(pair.t_c)
    out = PolyZ.const(0, UNSIGNED_VARS)
    for (i, j), c in t_m.terms.items():
        if i > rank or j > size - rank:
            raise UsageError(f"monomial x^{i} y^{j} exceeds the rank/size grading")
        out = out + t_del**i * t_con**j * t_l ** (rank - i) * t_c ** (size - rank - j) * c
    return out


def unsigned_tensor_direct(m, n, e):
    """Oracle: ordinary Tutte polynomial of the explicit product graph."""
    return unsigned_tutte(tensor_graph(TensorSpec(m.with_signs("+"), "+", n.with_signs("+"), e)))
