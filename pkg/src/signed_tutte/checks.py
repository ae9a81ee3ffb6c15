"""Randomised property suites shared by ``signed-tutte verify`` and the tests.

Each suite is a function ``case(rng, size) -> (ok, detail)``; ``run_suite``
drives it with per-case seeds so any failure can be replayed alone.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .knot import SHADINGS, bracket_statesum, bracket_via_tutte, random_knot_pd, tait_graph
from .quotient import eq_mod_I1, generators, to_quotient
from .ring import PolyZ, poly_substitute
from .sgraph import GraphError, SignedGraph, delete_edge
from .tensor import TensorSpec, substitution_maps, tensor_graph, tensor_subst, unsigned_tensor
from .tutte import tctl, tutte_activity, tutte_delcon, unsigned_tutte, verify_tctl_system


def random_graph(rng, max_vertices=4, max_edges=6, min_edges=1, connected=True, signs="+-"):
    while True:
        nv = rng.randint(1, max_vertices)
        ne = rng.randint(min_edges, max_edges)
        edges = [(rng.randrange(nv), rng.randrange(nv), rng.choice(signs), i + 1) for i in range(ne)]
        g = SignedGraph.from_list(nv, edges)
        if not connected or g.is_connected():
            return g


def random_relabel(rng, g, keep_last=None):
    labels = list(g.labels())
    if keep_last is not None:
        labels.remove(keep_last)
    order = labels[:]
    rng.shuffle(order)
    mapping = {old: new for old, new in zip(order, range(1, len(order) + 1))}
    if keep_last is not None:
        mapping[keep_last] = len(g)
    return g.relabel(mapping), (len(g) if keep_last is not None else None)


def _splittable(g):
    """Labels that are neither loops nor bridges."""
    comps = g.components()
    return [
        e.label
        for e in g.edges
        if not e.is_loop and delete_edge(g, e.label, compress=False).components() == comps
    ]


def _drop_loops(g, sign):
    keep = [f for f in g.edges if not (f.is_loop and f.sign == sign)]
    return SignedGraph.from_list(g.num_vertices, [(f.u, f.v, f.sign, i) for i, f in enumerate(keep, 1)])


def _random_pointed(rng, max_vertices, max_edges):
    while True:
        n = random_graph(rng, max_vertices, max_edges, min_edges=2)
        ok = _splittable(n)
        if ok:
            return n, rng.choice(ok)


# ---------------------------------------------------------------- suites


def case_labelling(rng, size):
    g = random_graph(rng, 5, 7)
    base = tutte_activity(g)
    for _ in range(size):
        h, _ = random_relabel(rng, g)
        if not eq_mod_I1(base, tutte_activity(h)):
            return False, f"labelling changes the class: {g}"
    return True, ""


def case_delcon(rng, size):
    g = random_graph(rng, 5, 8)
    return eq_mod_I1(tutte_activity(g), tutte_delcon(g)), str(g)


def case_tctl_system(rng, size):
    n, e = _random_pointed(rng, 5, 7)
    if not verify_tctl_system(n, e):
        return False, f"system fails for e={e}: {n}"
    pair = tctl(n, e)
    for _ in range(3):
        h, top = random_relabel(rng, n, keep_last=e)
        other = tctl(h, top)
        if not (eq_mod_I1(pair.t_l, other.t_l) and eq_mod_I1(pair.t_c, other.t_c)):
            return False, f"pair depends on labelling for e={e}: {n}"
    return True, ""


def case_generators(rng, size):
    n, e = _random_pointed(rng, 5, 6)
    for sign in "+-":
        maps = substitution_maps(n, e, sign)
        for gen in generators():
            if not to_quotient(poly_substitute(gen, maps)).is_zero():
                return False, f"generator image nonzero (sign {sign}, e={e}): {n}"
    return True, ""


def case_tensor_oracle(rng, size):
    full = random_graph(rng, 4, 5, connected=False)
    n, e = _random_pointed(rng, 4, 5)
    for sign in "+-":
        # loops of the replaced sign have no tensor product; drop them
        m = _drop_loops(full, sign)
        t_m = tutte_activity(m)
        sub = tensor_subst(t_m, sign, n, e)
        matched = sum(1 for f in m.edges if f.sign == sign)
        for bits in ((0,) * matched, (1,) * matched, tuple(rng.randint(0, 1) for _ in range(matched))):
            direct = tutte_activity(tensor_graph(TensorSpec(m, sign, n, e, bits)))
            if not eq_mod_I1(sub, direct):
                return False, f"sign {sign}, bits {bits}, e={e}: m={m} n={n}"
    return True, ""


def case_bracket_oracle(rng, size):
    pd = random_knot_pd(rng, max_crossings=size)
    ref = bracket_statesum(pd)
    for shading in SHADINGS:
        if bracket_via_tutte(tait_graph(pd, shading).graph) != ref:
            return False, f"{shading} shading disagrees: {pd.crossings}"
    return True, ""


def case_unsigned(rng, size):
    m = _drop_loops(random_graph(rng, 4, 5, signs="+"), "+")
    n, e = _random_pointed(rng, 4, 4)
    direct = unsigned_tutte(tensor_graph(TensorSpec(m, "+", n.with_signs("+"), e)))
    via = unsigned_tensor(unsigned_tutte(m), n, e, m.rank(), len(m))
    return direct == via, f"e={e}: m={m} n={n}"


def telescoping_identity(signs):
    """Both sides of the identity for eps = signs[0] and eps_i = signs[1:]."""
    eps, rest = signs[0], signs[1:]
    k = len(rest)
    v = PolyZ.var
    y = [v("y" + s) for s in rest]
    b = [v("B" + s) for s in rest]
    a = [v("A" + s) for s in rest]

    def prod(xs):
        out = PolyZ.const(1)
        for x in xs:
            out = out * x
        return out

    left = v("A" + eps) * (prod(y) - prod(b))
    total = PolyZ.const(0)
    for i in range(k):
        total = total + a[i] * prod(y[:i]) * prod(b[i + 1 :])
    right = (v("y" + eps) - v("B" + eps)) * total
    return left, right


def telescoping_all(max_k=5):
    failures = []
    count = 0
    for k in range(1, max_k + 1):
        for signs in itertools.product("+-", repeat=k + 1):
            count += 1
            left, right = telescoping_identity(signs)
            if not eq_mod_I1(left, right):
                failures.append("".join(signs))
    return count, failures


SUITES = {
    "labelling": (case_labelling, 20),
    "delcon": (case_delcon, 0),
    "tctl-system": (case_tctl_system, 0),
    "generators": (case_generators, 0),
    "tensor-oracle": (case_tensor_oracle, 0),
    "bracket-oracle": (case_bracket_oracle, 10),
    "unsigned": (case_unsigned, 0),
}


@dataclass
class SuiteReport:
    suite: str
    cases: int
    failures: list

    @property
    def ok(self):
        return not self.failures


def _run_one(args):
    suite, seed, index, size = args
    case, _ = SUITES[suite]
    rng = random.Random(f"{suite}/{seed}/{index}")
    try:
        ok, detail = case(rng, size)
    except (GraphError, ArithmeticError, ValueError) as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return index, ok, detail


def run_suite(suite, cases, seed=0, size=None, threads=1):
    if suite == "telescoping":
        count, failures = telescoping_all(size or 5)
        return SuiteReport(suite, count, failures)
    if suite not in SUITES:
        raise KeyError(suite)
    size = SUITES[suite][1] if size is None else size
    jobs = [(suite, seed, i, size) for i in range(cases)]
    if threads > 1:
        with ProcessPoolExecutor(threads) as pool:
            results = list(pool.map(_run_one, jobs, chunksize=8))
    else:
        results = [_run_one(j) for j in jobs]
    failures = [f"case {i}: {d}" for i, ok, d in results if not ok]
    return SuiteReport(suite, cases, failures)


SUITE_NAMES = tuple(SUITES) + ("telescoping",)
