"""Reference polynomials shipped with the package and the small graphs they belong to."""

from __future__ import annotations

import itertools
from importlib import resources

from .ring import PolyZ, parse_laurent, parse_poly, poly_substitute
from .sgraph import SignedGraph, fundamental_cycle
from .tensor import TensorSpec, stretch, substitution_maps, tensor_graph, thickening
from .tutte import tutte_activity


def _read(name):
    return resources.files("signed_tutte").joinpath("data", name).read_text()


def load_poly(name):
    return parse_poly(_read(name))


def load_laurent(name, varname):
    return parse_laurent(_read(name), varname)


def kfamily_reference(k):
    return load_laurent(f"kfamily_{k}.laurent", "t")


def k9_spots():
    """(offset, coefficient) pairs for k = 9; offsets count up from t^-82."""
    out = []
    for line in _read("kfamily_9_spots.txt").splitlines():
        line = line.split("#", 1)[0]
        if line.strip():
            off, coeff = line.split()
            out.append((int(off), int(coeff)))
    return out


# ---------------------------------------------------------------- small graphs


def figure_eight_graph():
    """The 4_1 graph N (vertices a, b, c) and its distinguished edge e = ac."""
    return SignedGraph.from_list(3, [(0, 1, "+", 1), (1, 2, "+", 2), (1, 2, "+", 3), (0, 2, "+", 4)]), 4


def digon_m1():
    return SignedGraph.from_list(2, [(0, 1, "+", 1), (0, 1, "-", 2)])


def loops_m2():
    return SignedGraph.from_list(1, [(0, 0, "+", 1), (0, 0, "-", 2)])


_K4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def k4_candidates():
    """Labelled signed K4s with tree {1,4,5}, cycles {2,4,5} and {1,3,4}, two negative edges."""
    for perm in itertools.permutations(range(1, 7)):
        edges = [(u, v, "+", lab) for (u, v), lab in zip(_K4, perm)]
        g = SignedGraph.from_list(4, edges)
        tree = (1, 4, 5)
        if SignedGraph(4, tuple(e for e in g.edges if e.label in tree)).rank() != 3:
            continue
        if fundamental_cycle(g, tree, 2) != {2, 4, 5} or fundamental_cycle(g, tree, 3) != {1, 3, 4}:
            continue
        for neg in itertools.combinations(range(1, 7), 2):
            yield SignedGraph.from_list(4, [(u, v, "-" if lab in neg else "+", lab) for u, v, _, lab in edges])


def find_k4(target):
    """First candidate whose activity polynomial equals ``target``, or None."""
    for g in k4_candidates():
        if tutte_activity(g) == target:
            return g
    return None


# ---------------------------------------------------------------- odd-k family


def kfamily_steps(k):
    """Substitution maps of the four tensor steps: stretch +, stretch -, thicken +, thicken -."""
    steps = []
    for build in (stretch, thickening):
        for sign in "+-":
            g, e = build(k, sign)
            steps.append(substitution_maps(g, e, sign))
    return steps


def kfamily_graph(k):
    """The whole Tait graph G built explicitly, with g as its last edge."""
    g = digon_m1()
    for build in (stretch, thickening):
        for sign in "+-":
            n, e = build(k, sign)
            g = tensor_graph(TensorSpec(g, sign, n, e))
    edges = [(f.u, f.v, f.sign, f.label) for f in g.edges]
    edges.append((0, 1, "+", len(edges) + 1))
    return SignedGraph.from_list(g.num_vertices, edges)


def kfamily_tutte(k):
    """T(G) from the two seeds by substitution, then one deletion-contraction step on g."""
    p1 = parse_poly("x+*B- + y+*A-")
    p2 = parse_poly("y+*y-")
    for maps in kfamily_steps(k):
        p1 = poly_substitute(p1, maps)
        p2 = poly_substitute(p2, maps)
    return PolyZ.var("B+") * p1 + PolyZ.var("A+") * p2


KFAMILY_WRITHE = -1
