import random

import pytest

from signed_tutte.checks import random_graph, random_relabel
from signed_tutte.fixtures import digon_m1, figure_eight_graph, find_k4, load_poly, loops_m2
from signed_tutte.quotient import eq_mod_I1, unsigned_phi
from signed_tutte.ring import SIGNED_VARS, UNSIGNED_VARS, PolyZ, parse_poly
from signed_tutte.sgraph import GraphError, contract_edge, delete_edge, spanning_trees
from signed_tutte.tensor import thickening
from signed_tutte.tutte import (
    minor_polys,
    tctl,
    tutte_activity,
    tutte_delcon,
    unsigned_tctl,
    unsigned_tutte,
    verify_tctl_system,
)
from conftest import graph

P = parse_poly
U = lambda s: parse_poly(s, UNSIGNED_VARS)


def test_seed_graphs():
    assert tutte_activity(digon_m1()) == P("x+*B- + y+*A-")
    assert tutte_activity(loops_m2()) == P("y+*y-")
    assert tutte_activity(graph(1, [])) == PolyZ.const(1)


def test_k4_reference():
    target = load_poly("k4_example.poly")
    assert len(target) == 11
    g = find_k4(target)
    assert g is not None
    assert tutte_activity(g) == target
    assert eq_mod_I1(tutte_delcon(g), target)


def test_delcon_base_cases():
    assert tutte_delcon(graph(2, [(0, 1, "+", 1)])) == P("x+")
    assert tutte_delcon(graph(1, [(0, 0, "-", 1)])) == P("y-")
    assert tutte_delcon(graph(3, [])) == PolyZ.const(1)


def test_delcon_agrees_mod_ideal():
    rng = random.Random(21)
    for _ in range(80):
        g = random_graph(rng, 5, 8, connected=False)
        assert eq_mod_I1(tutte_activity(g), tutte_delcon(g))


def test_delcon_memo_same_class():
    rng = random.Random(22)
    memo = {}
    for _ in range(30):
        g = random_graph(rng, 4, 7)
        assert eq_mod_I1(tutte_delcon(g, memo), tutte_activity(g))


def test_labelling_independence_small():
    rng = random.Random(23)
    for _ in range(20):
        g = random_graph(rng, 4, 6)
        base = tutte_activity(g)
        for _ in range(5):
            assert eq_mod_I1(base, tutte_activity(random_relabel(rng, g)[0]))


def test_raw_polynomial_depends_on_labels():
    # the labelled sum itself is not invariant, only its class
    tri = graph(3, [(0, 1, "+", 1), (1, 2, "-", 2), (2, 0, "-", 3)])
    other = tri.relabel({1: 3, 2: 1, 3: 2})
    assert tutte_activity(tri) != tutte_activity(other)
    assert eq_mod_I1(tutte_activity(tri), tutte_activity(other))


def test_sign_degree_and_rank_grading():
    rng = random.Random(24)
    pos = [SIGNED_VARS.index(v) for v in ("x+", "y+", "A+", "B+")]
    neg = [SIGNED_VARS.index(v) for v in ("x-", "y-", "A-", "B-")]
    internal = [SIGNED_VARS.index(v) for v in ("x+", "x-", "A+", "A-")]
    for _ in range(40):
        g = random_graph(rng, 5, 7)
        npos = sum(1 for e in g.edges if e.sign == "+")
        for exps in tutte_activity(g).terms:
            assert sum(exps[i] for i in pos) == npos
            assert sum(exps[i] for i in neg) == len(g) - npos
            assert sum(exps[i] for i in internal) == g.rank()


def test_bridges_and_loops_always_active():
    g = graph(3, [(0, 1, "-", 1), (1, 2, "+", 2), (1, 2, "+", 3), (2, 2, "-", 4)])
    for exps in tutte_activity(g).terms:
        assert exps[SIGNED_VARS.index("x-")] == 1
        assert exps[SIGNED_VARS.index("y-")] == 1


def test_figure_eight_quadruple():
    n, e = figure_eight_graph()
    t_del, t_con = minor_polys(n, e)
    assert t_del == load_poly("n41_delete.poly") == P("x+^2*B+ + x+*y+*A+")
    assert t_con == load_poly("n41_contract.poly")
    pair = tctl(n, e)
    assert pair.t_l == load_poly("n41_tl.poly") == P("A+^2*B+ + A+^2*y+")
    assert pair.t_c == load_poly("n41_tc.poly")
    assert verify_tctl_system(n, e, pair)
    # the first relation even holds without reducing
    a, y, b = P("A+"), P("y+"), P("B+")
    assert a * (t_con - pair.t_c) == (y - b) * pair.t_l


def test_thickening_pair():
    n, e = thickening(3, "-")
    pair = tctl(n, e)
    assert pair.t_l == P("A-") * P("y-^2 + y-*B- + B-^2")
    assert pair.t_c == P("B-^3")


def test_digon_system():
    n = graph(2, [(0, 1, "-", 1), (0, 1, "+", 2)])
    assert verify_tctl_system(n, 2)
    assert verify_tctl_system(n, 1)


def test_tctl_random_system():
    rng = random.Random(25)
    done = 0
    while done < 40:
        n = random_graph(rng, 4, 6, min_edges=6)
        for e in n.labels():
            try:
                ok = verify_tctl_system(n, e)
            except GraphError:
                continue
            assert ok
            done += 1


def test_tctl_position_of_e_irrelevant():
    rng = random.Random(26)
    for _ in range(20):
        n = random_graph(rng, 4, 6, min_edges=3)
        for e in n.labels():
            try:
                pair = tctl(n, e)
            except GraphError:
                continue
            h, top = random_relabel(rng, n, keep_last=e)
            other = tctl(h, top)
            assert eq_mod_I1(pair.t_l, other.t_l) and eq_mod_I1(pair.t_c, other.t_c)


def test_tctl_rejects_bridge_and_loop():
    g = graph(2, [(0, 1, "+", 1), (1, 1, "+", 2)])
    with pytest.raises(GraphError):
        tctl(g, 1)
    with pytest.raises(GraphError):
        tctl(g, 2)
    with pytest.raises(GraphError):
        tctl(g, 7)


def test_tctl_term_counts():
    # T_L runs over trees avoiding e, T_C over trees through e
    rng = random.Random(27)
    for _ in range(20):
        n = random_graph(rng, 4, 6, min_edges=4)
        for e in n.labels():
            try:
                pair = tctl(n, e)
            except GraphError:
                continue
            trees = list(spanning_trees(n))
            total = lambda p: sum(p.terms.values())
            assert total(pair.t_l) == sum(1 for t in trees if e not in t)
            assert total(pair.t_c) == sum(1 for t in trees if e in t)


# ---------------------------------------------------------------- unsigned


def test_unsigned_small():
    assert unsigned_tutte(graph(2, [(0, 1, "+", 1)])) == U("x")
    assert unsigned_tutte(graph(1, [(0, 0, "+", 1)])) == U("y")
    tri = graph(3, [(0, 1, "+", 1), (1, 2, "+", 2), (2, 0, "+", 3)])
    assert unsigned_tutte(tri) == U("x^2 + x + y")


def test_unsigned_is_phi_of_positive():
    rng = random.Random(28)
    for _ in range(30):
        g = random_graph(rng, 5, 7)
        assert unsigned_phi(tutte_activity(g.with_signs("+"))) == unsigned_tutte(g)


def test_unsigned_tctl_figure_eight():
    n, e = figure_eight_graph()
    t_l, t_c = unsigned_tctl(n, e)
    assert t_l == U("1 + y")
    assert t_c == U("x + 1 + y")
    x, y = U("x"), U("y")
    t_del = unsigned_tutte(delete_edge(n, e))
    t_con = unsigned_tutte(contract_edge(n, e))
    assert t_del - t_l == (x - 1) * t_c
    assert t_con - t_c == (y - 1) * t_l
