import random
from itertools import permutations

import pytest

from signed_tutte.fixtures import load_laurent, load_poly
from signed_tutte.knot import (
    SHADINGS,
    DiagramError,
    PDCode,
    add_curl,
    braid_closure,
    bracket_statesum,
    bracket_via_tutte,
    crossing_signs,
    faces,
    flip_crossing,
    jones,
    jones_from_pd,
    parse_pd,
    random_pds,
    tait_graph,
    writhe,
)
from signed_tutte.quotient import kauffman_specialize
from signed_tutte.ring import LaurentZ, ParseError, UsageError, parse_laurent
from signed_tutte.sgraph import GraphError
from conftest import graph

TREFOIL = "X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3"
FIGURE_EIGHT = "X 4 2 5 1\nX 8 6 1 5\nX 6 3 7 4\nX 2 7 3 8"
L = parse_laurent
T = lambda s: parse_laurent(s, "t")


def test_parse():
    pd = parse_pd(TREFOIL)
    assert pd.crossings == ((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3))
    assert parse_pd("# kink\nX 1 2 2 1\n").crossings == ((1, 2, 2, 1),)
    assert parse_pd(str(pd)) == pd


@pytest.mark.parametrize(
    "text",
    ["X 1 2 3", "X 1 1 1 2", "X 1 2 2 3", "Y 1 2 2 1", "X 1 2 2 a"],
)
def test_parse_errors(text):
    with pytest.raises((ParseError, DiagramError)):
        parse_pd(text)


def test_link_rejected():
    with pytest.raises(DiagramError):
        parse_pd("X 1 3 2 4 / X 3 1 4 2")


def test_face_counts():
    assert len(faces(parse_pd(TREFOIL))) == 5
    assert len(faces(parse_pd("X 1 2 2 1"))) == 3
    assert len(faces(parse_pd(FIGURE_EIGHT))) == 6


def test_trefoil_tait_graphs():
    pd = parse_pd(TREFOIL)
    shapes = set()
    for sh in SHADINGS:
        t = tait_graph(pd, sh)
        assert len(t.graph) == 3 and t.face_count == 5
        shapes.add(t.graph.num_vertices)
        assert t.writhe == -3
    assert shapes == {2, 3}


def test_one_crossing_unknot():
    pd = parse_pd("X 1 2 2 1")
    for sh in SHADINGS:
        t = tait_graph(pd, sh)
        assert len(t.graph) == 1
        assert jones(bracket_via_tutte(t.graph), t.writhe) == T("1")
    assert bracket_statesum(pd) == L("-A^-3")
    assert bracket_statesum(parse_pd("X 1 1 2 2")) == L("-A^3")


def test_empty_code():
    pd = PDCode(())
    assert bracket_statesum(pd) == LaurentZ.const(1)
    assert jones_from_pd(pd) == T("1")


def test_trefoil_bracket():
    b = bracket_statesum(parse_pd(TREFOIL))
    assert b == L("A^7 - A^3 - A^-5")
    assert len(b.terms) == 3 and b.breadth() == 12
    assert jones_from_pd(parse_pd(TREFOIL)) == T("t^-1 + t^-3 - t^-4")


def test_mirror_trefoil():
    pd = parse_pd(TREFOIL)
    for i in range(3):
        pd = flip_crossing(pd, i)
    assert writhe(pd) == 3
    assert jones_from_pd(pd) == T("t + t^3 - t^4")


def test_figure_eight():
    pd = parse_pd(FIGURE_EIGHT)
    assert writhe(pd) == 0
    assert jones_from_pd(pd) == T("t^-2 - t^-1 + 1 - t + t^2")


def test_bracket_via_tutte_examples():
    assert bracket_via_tutte(graph(2, [(0, 1, "+", 1)])) == L("-A^-3")
    assert bracket_via_tutte(graph(1, [(0, 0, "+", 1)])) == L("-A^3")
    with pytest.raises(GraphError):
        bracket_via_tutte(graph(2, []))


def test_949_jones():
    b = kauffman_specialize(load_poly("m949_tutte.poly"))
    assert jones(b, 9) == load_laurent("m949_jones.laurent", "t")
    assert jones(b, 9) == T("t^2 - 2t^3 + 4t^4 - 4t^5 + 5t^6 - 4t^7 + 3t^8 - 2t^9")


def test_product_jones():
    b = load_laurent("product_bracket.laurent", "A")
    assert jones(b, 1) == load_laurent("product_jones.laurent", "t")
    assert jones(LaurentZ.const(1), 0) == T("1")


def test_jones_rejects_links():
    # Hopf link bracket with its writhe: exponents are not multiples of 4
    with pytest.raises(ArithmeticError):
        jones(L("-A^4 - A^-4"), 2)


def test_statesum_bound():
    pd = braid_closure([1, -2] * 7, 3)
    assert len(pd) == 14
    with pytest.raises(UsageError):
        bracket_statesum(pd, bound=10)


def test_crossing_signs_follow_orientation():
    assert crossing_signs(parse_pd("X 1 2 2 1")) == [-1]
    assert crossing_signs(parse_pd("X 1 1 2 2")) == [1]


def _all_codes(n):
    labels = [lab for lab in range(1, 2 * n + 1) for _ in range(2)]
    seen = set()
    for perm in permutations(labels):
        if perm in seen:
            continue
        seen.add(perm)
        code = tuple(tuple(perm[4 * i : 4 * i + 4]) for i in range(n))
        try:
            pd = parse_pd("\n".join("X " + " ".join(map(str, x)) for x in code))
            faces(pd)
        except (ParseError, DiagramError):
            continue
        yield pd


def test_small_diagrams_are_unknots():
    count = 0
    for n in (1, 2):
        for pd in _all_codes(n):
            count += 1
            for sh in SHADINGS:
                assert jones_from_pd(pd, sh) == T("1")
    assert count > 4


def test_curls():
    rng = random.Random(41)
    for pd in random_pds(25, seed=42, max_crossings=8):
        base = bracket_statesum(pd)
        v = jones_from_pd(pd)
        for kind in range(4):
            curled = add_curl(pd, rng.randint(1, 2 * len(pd)), kind)
            b = bracket_statesum(curled)
            assert b in (base.shift(3, -1), base.shift(-3, -1))
            assert jones_from_pd(curled) == v


def test_writhe_is_shading_independent():
    for pd in random_pds(20, seed=43):
        ws = {tait_graph(pd, sh).writhe for sh in SHADINGS}
        assert ws == {sum(crossing_signs(pd))}


def test_euler_and_edges():
    for pd in random_pds(20, seed=44):
        for sh in SHADINGS:
            t = tait_graph(pd, sh)
            assert len(t.graph) == len(pd)
            assert t.face_count == len(pd) + 2
            assert t.graph.is_connected()


def test_oracle_equality():
    for pd in random_pds(40, seed=45, max_crossings=12):
        ref = bracket_statesum(pd)
        for sh in SHADINGS:
            assert bracket_via_tutte(tait_graph(pd, sh).graph) == ref


def test_braid_closure_checks():
    assert len(braid_closure([1, 1, 1], 2)) == 3
    assert jones_from_pd(braid_closure([1, 1, 1], 2)) in (T("t^-1 + t^-3 - t^-4"), T("t + t^3 - t^4"))
    with pytest.raises(UsageError):
        braid_closure([1, 3], 4)
    with pytest.raises(DiagramError):
        braid_closure([1, 1], 2)
