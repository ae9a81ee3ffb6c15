"""Signed Tutte polynomials of labelled signed graphs.

``tutte_activity`` sums tree weights (each edge contributes one variable
chosen by its sign and activity); ``tutte_delcon`` runs the deletion-
contraction recursion.  The two agree modulo the ideal, not term by term.
``tctl`` computes the pair of exception-rule polynomials for a graph with a
distinguished edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quotient import eq_mod_I1, unsigned_phi
from .ring import SIGNED_VARS, UNSIGNED_VARS, PolyZ
from .sgraph import (
    EXTERNAL_ACTIVE,
    EXTERNAL_INACTIVE,
    INTERNAL_ACTIVE,
    INTERNAL_INACTIVE,
    GraphError,
    activities,
    contract_edge,
    delete_edge,
    spanning_trees,
)

_LETTER = {
    INTERNAL_ACTIVE: "x",
    EXTERNAL_ACTIVE: "y",
    INTERNAL_INACTIVE: "A",
    EXTERNAL_INACTIVE: "B",
}
_INDEX = {(c, s): SIGNED_VARS.index(_LETTER[c] + s) for c in _LETTER for s in "+-"}


def edge_variable(sign, activity):
    """Name of the variable an edge contributes, e.g. ``x+``."""
    return _LETTER[activity] + sign


def _accumulate(terms, exps):
    key = tuple(exps)
    terms[key] = terms.get(key, 0) + 1


def tutte_activity(g):
    terms = {}
    signs = g.signs()
    for tree in spanning_trees(g):
        act = activities(g, tree)
        exps = [0] * 8
        for lab, c in act.classification.items():
            exps[_INDEX[c, signs[lab]]] += 1
        _accumulate(terms, exps)
    return PolyZ(terms)


def _split_edge(g):
    """First edge (by label) that is neither a loop nor a bridge, else None."""
    for e in g.edges:
        if e.is_loop:
            continue
        if delete_edge(g, e.label, compress=False).components() == g.components():
            return e
    return None


def _graph_key(g):
    edges = sorted((min(e.u, e.v), max(e.u, e.v), e.sign) for e in g.edges)
    return g.num_vertices, tuple(edges)


def tutte_delcon(g, memo=None):
    """Deletion-contraction; pass a dict as ``memo`` to cache on graph shape."""
    if memo is not None:
        key = _graph_key(g)
        if key in memo:
            return memo[key]
    e = _split_edge(g)
    if e is None:
        exps = [0] * 8
        for f in g.edges:
            kind = EXTERNAL_ACTIVE if f.is_loop else INTERNAL_ACTIVE
            exps[_INDEX[kind, f.sign]] += 1
        result = PolyZ({tuple(exps): 1})
    else:
        s = e.sign
        b = PolyZ.var("B" + s)
        a = PolyZ.var("A" + s)
        result = b * tutte_delcon(delete_edge(g, e.label, compress=False), memo) + a * tutte_delcon(
            contract_edge(g, e.label, compress=False), memo
        )
    if memo is not None:
        memo[key] = result
    return result


@dataclass(frozen=True)
class TuttePair:
    t_l: PolyZ
    t_c: PolyZ


def _check_distinguished(n, e):
    edge = n.edge(e)
    if edge.is_loop:
        raise GraphError(f"distinguished edge {e} is a loop")
    if delete_edge(n, e, compress=False).components() != n.components():
        raise GraphError(f"distinguished edge {e} is a bridge")
    return edge


def _with_e_last(n, e):
    others = [lab for lab in n.labels() if lab != e]
    mapping = {lab: i for i, lab in enumerate(others, start=1)}
    mapping[e] = len(others) + 1
    return n.relabel(mapping), len(others) + 1


def tctl(n, e):
    """The pair (T_L, T_C) of ``n`` with distinguished edge ``e``.

    ``e`` is moved to the top label first.  Trees of ``n`` avoiding ``e`` are
    the trees of n minus e; there an internally active edge on the cycle that
    ``e`` closes is counted as inactive.  Trees containing ``e`` are the trees
    of n/e; there an externally active edge whose cycle runs through ``e`` is
    counted as inactive.
    """
    _check_distinguished(n, e)
    g, top = _with_e_last(n, e)
    signs = g.signs()
    tl, tc = {}, {}
    for tree in spanning_trees(g):
        act = activities(g, tree)
        cls = act.classification
        exps = [0] * 8
        if top in act.tree:
            for lab, c in cls.items():
                if lab == top:
                    continue
                if c == EXTERNAL_ACTIVE and top in act.cycles[lab]:
                    c = EXTERNAL_INACTIVE
                exps[_INDEX[c, signs[lab]]] += 1
            _accumulate(tc, exps)
        else:
            closed = act.cycles[top]
            for lab, c in cls.items():
                if lab == top:
                    continue
                if c == INTERNAL_ACTIVE and lab in closed:
                    c = INTERNAL_INACTIVE
                exps[_INDEX[c, signs[lab]]] += 1
            _accumulate(tl, exps)
    return TuttePair(PolyZ(tl), PolyZ(tc))


def minor_polys(n, e):
    """(T(n minus e), T(n/e)) by activity enumeration."""
    return (
        tutte_activity(delete_edge(n, e)),
        tutte_activity(contract_edge(n, e)),
    )


def verify_tctl_system(n, e, pair=None):
    """Check both linear relations tying (T_L, T_C) to the two minors, for both signs."""
    pair = pair or tctl(n, e)
    t_del, t_con = minor_polys(n, e)
    for s in "+-":
        x, y, a, b = (PolyZ.var(v + s) for v in "xyAB")
        if not eq_mod_I1(a * (t_con - pair.t_c), (y - b) * pair.t_l):
            return False
        if not eq_mod_I1(b * (t_del - pair.t_l), (x - a) * pair.t_c):
            return False
    return True


# ---------------------------------------------------------------- unsigned


def unsigned_tutte(g):
    terms = {}
    for tree in spanning_trees(g):
        cls = activities(g, tree).classification.values()
        key = (
            sum(1 for c in cls if c == INTERNAL_ACTIVE),
            sum(1 for c in cls if c == EXTERNAL_ACTIVE),
        )
        terms[key] = terms.get(key, 0) + 1
    return PolyZ(terms, UNSIGNED_VARS)


def unsigned_tctl(n, e):
    """(T_L, T_C) in Z[x, y]: the positive signed pair pushed through phi."""
    pair = tctl(n.with_signs("+"), e)
    return unsigned_phi(pair.t_l), unsigned_phi(pair.t_c)
