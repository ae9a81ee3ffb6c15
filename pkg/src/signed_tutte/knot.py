"""Knot diagrams from PD codes: Tait graphs, Kauffman bracket, Jones polynomial.

A crossing ``X a b c d`` lists its four arcs counterclockwise starting from
the incoming under-strand ``a``; the under-strand leaves along ``c``.  Which
way the over-strand (b, d) runs is recovered by walking the knot.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .quotient import kauffman_specialize
from .ring import LaurentZ, ParseError, UsageError, quarter_to_t
from .sgraph import Edge, GraphError, SignedGraph
from .tutte import tutte_activity

DEFAULT_CROSSING_BOUND = 20


class DiagramError(ValueError):
    """A PD code that does not describe a single-component planar diagram."""


@dataclass(frozen=True)
class PDCode:
    crossings: tuple

    def __len__(self):
        return len(self.crossings)

    def __str__(self):
        return format_pd(self)


# ---------------------------------------------------------------- parsing


def parse_pd(text):
    crossings = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0]
        for chunk in line.split("/"):
            toks = chunk.split()
            if not toks:
                continue
            if toks[0] != "X":
                raise ParseError(f"expected 'X', got {toks[0]!r}")
            if len(toks) != 5:
                raise ParseError(f"crossing needs 4 labels: {chunk.strip()!r}")
            try:
                crossings.append(tuple(int(t) for t in toks[1:]))
            except ValueError:
                raise ParseError(f"non-integer label in {chunk.strip()!r}") from None
    pd = PDCode(tuple(crossings))
    check_pd(pd)
    return pd


def format_pd(pd):
    return "\n".join("X " + " ".join(map(str, x)) for x in pd.crossings)


def check_pd(pd):
    counts = {}
    for x in pd.crossings:
        if len(x) != 4:
            raise ParseError(f"crossing {x} does not have 4 labels")
        for lab in x:
            counts[lab] = counts.get(lab, 0) + 1
    bad = sorted(lab for lab, c in counts.items() if c != 2)
    if bad:
        raise ParseError(f"labels not appearing exactly twice: {bad}")
    if sorted(counts) != list(range(1, 2 * len(pd.crossings) + 1)):
        raise ParseError("labels are not 1..2n")
    _walk(pd.crossings)


def _occurrences(crossings):
    occ = {}
    for i, x in enumerate(crossings):
        for p, lab in enumerate(x):
            occ.setdefault(lab, []).append((i, p))
    return occ


def _other_end(occ, lab, here):
    a, b = occ[lab]
    return b if a == here else a


def _walk(crossings):
    """Follow the knot from the first under-strand.

    Returns the list of (crossing, entry position) visits and the set of
    incoming positions.  Raises DiagramError for links and malformed codes.
    """
    if not crossings:
        return [], set()
    occ = _occurrences(crossings)
    visits = []
    incoming = set()
    here = (0, 0)
    while True:
        if here in incoming:
            break
        i, p = here
        if p == 2:
            raise DiagramError(f"crossing {i + 1}: the knot enters along the outgoing under-arc")
        incoming.add(here)
        visits.append(here)
        out = (i, (p + 2) % 4)
        here = _other_end(occ, crossings[i][out[1]], out)
    if here != (0, 0):
        raise DiagramError("walk does not close up consistently")
    if len(visits) != 2 * len(crossings):
        raise DiagramError("diagram has more than one component (links are not supported)")
    return visits, incoming


def crossing_signs(pd):
    """+1 where the over-strand runs d -> b, -1 where it runs b -> d."""
    _, incoming = _walk(pd.crossings)
    return [1 if (i, 3) in incoming else -1 for i in range(len(pd.crossings))]


def writhe(pd):
    return sum(crossing_signs(pd))


# ---------------------------------------------------------------- faces


def faces(pd):
    """Faces as lists of corners; corner (i, p) sits between positions p and p+1."""
    cr = pd.crossings
    occ = _occurrences(cr)
    seen = {}
    out = []
    for i in range(len(cr)):
        for p in range(4):
            if (i, p) in seen:
                continue
            face = []
            here = (i, p)
            while here not in seen:
                seen[here] = len(out)
                face.append(here)
                j, q = here
                nxt = (j, (q + 1) % 4)
                here = _other_end(occ, cr[j][nxt[1]], nxt)
            if here != (i, p):
                raise DiagramError("face traversal does not close")
            out.append(face)
    if cr and len(out) != len(cr) + 2:
        raise DiagramError(f"{len(out)} faces for {len(cr)} crossings; the code is not planar")
    return out


def _face_index(face_list):
    return {c: k for k, f in enumerate(face_list) for c in f}


def checkerboard(pd, face_list=None):
    """2-colouring of the faces (list of 0/1); opposite corners share a colour."""
    face_list = face_list if face_list is not None else faces(pd)
    where = _face_index(face_list)
    adj = [set() for _ in face_list]
    for i in range(len(pd.crossings)):
        for p in range(4):
            a, b = where[i, p], where[i, (p + 1) % 4]
            adj[a].add(b)
            adj[b].add(a)
    colour = [None] * len(face_list)
    for start in range(len(face_list)):
        if colour[start] is not None:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for g in adj[f]:
                if colour[g] is None:
                    colour[g] = 1 - colour[f]
                    queue.append(g)
                elif colour[g] == colour[f]:
                    raise DiagramError("face adjacency is not bipartite")
    return colour


@dataclass(frozen=True)
class TaitResult:
    graph: SignedGraph
    writhe: int
    shading: str
    face_count: int


SHADINGS = ("default", "dual")


def _left_face_of_top_edge(pd, where, incoming):
    top = 2 * len(pd.crossings)
    i, p = next(pos for pos in incoming if pd.crossings[pos[0]][pos[1]] == top)
    return where[i, (p - 1) % 4]


def tait_graph(pd, shading="default"):
    """Signed Tait graph for one of the two checkerboard shadings.

    ``default`` leaves the face on the left of the top-labelled arc light.
    An edge is positive when its dark corners are the ones between b, c and
    between d, a.
    """
    if shading not in SHADINGS:
        raise UsageError(f"shading must be one of {SHADINGS}")
    if not pd.crossings:
        return TaitResult(SignedGraph(1, ()), 0, shading, 1)
    face_list = faces(pd)
    colour = checkerboard(pd, face_list)
    where = _face_index(face_list)
    _, incoming = _walk(pd.crossings)
    light = colour[_left_face_of_top_edge(pd, where, incoming)]
    dark = 1 - light if shading == "default" else light
    vertex = {}
    for k in range(len(face_list)):
        if colour[k] == dark:
            vertex[k] = len(vertex)
    edges = []
    for i in range(len(pd.crossings)):
        if colour[where[i, 1]] == dark:
            f, g, sign = where[i, 1], where[i, 3], "+"
        else:
            f, g, sign = where[i, 0], where[i, 2], "-"
        edges.append(Edge(vertex[f], vertex[g], sign, i + 1))
    return TaitResult(SignedGraph(len(vertex), tuple(edges)), writhe(pd), shading, len(face_list))


# ---------------------------------------------------------------- invariants


def bracket_via_tutte(g):
    if not g.is_connected():
        raise GraphError("Tait graph must be connected")
    return kauffman_specialize(tutte_activity(g))


def _delta_powers(n):
    delta = LaurentZ({2: -1, -2: -1})
    out = [LaurentZ.const(1)]
    for _ in range(n):
        out.append(out[-1] * delta)
    return out


def bracket_statesum(pd, bound=DEFAULT_CROSSING_BOUND):
    """Kauffman bracket by summing over all 2^n smoothings."""
    n = len(pd.crossings)
    if n > bound:
        raise UsageError(f"{n} crossings exceeds the state-sum bound of {bound}")
    if n == 0:
        return LaurentZ.const(1)
    labels = 2 * n
    counts = {}
    for state in range(1 << n):
        parent = list(range(labels + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        loops = labels
        n_a = 0
        for i, (a, b, c, d) in enumerate(pd.crossings):
            if state >> i & 1:
                pairs = ((a, d), (b, c))
            else:
                n_a += 1
                pairs = ((a, b), (c, d))
            for u, v in pairs:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    loops -= 1
        key = (n_a - (n - n_a), loops)
        counts[key] = counts.get(key, 0) + 1
    powers = _delta_powers(max(k[1] for k in counts))
    total = LaurentZ.const(0)
    for (shift, loops), c in counts.items():
        total = total + powers[loops - 1].shift(shift, c)
    return total


def jones(bracket, w):
    """(-A^-3)^w <K>, then A = t^(-1/4); raises ArithmeticError for links."""
    if bracket.varname != "A":
        raise UsageError("bracket must be a Laurent polynomial in A")
    v = bracket.shift(-3 * w, -1 if w % 2 else 1)
    return quarter_to_t(v.reexpress(-1, "q"))


def jones_from_pd(pd, shading="default"):
    tait = tait_graph(pd, shading)
    return jones(bracket_via_tutte(tait.graph), tait.writhe)


# ---------------------------------------------------------------- diagram builders


def relabel_by_walk(crossings):
    """Renumber arcs 1..2n in the order the knot traverses them."""
    crossings = [tuple(x) for x in crossings]
    visits, _ = _walk(crossings)
    new = {}
    for i, p in visits:
        new.setdefault(crossings[i][p], len(new) + 1)
    return PDCode(tuple(tuple(new[lab] for lab in x) for x in crossings))


def braid_closure(word, strands):
    """PD code of the closure of a braid word (nonzero ints, sign = handedness).

    The closure must be a knot, which needs a cyclic strand permutation and
    every generator index used at least once.
    """
    if not word:
        raise UsageError("empty braid word")
    used = {abs(g) for g in word}
    if any(g == 0 or abs(g) >= strands for g in word):
        raise UsageError("generator index out of range")
    if used != set(range(1, strands)):
        raise UsageError("every generator index must appear")
    slot = list(range(strands))
    nxt = strands
    raw = []
    for g in word:
        i = abs(g) - 1
        bl, br = slot[i], slot[i + 1]
        tl, tr = nxt, nxt + 1
        nxt += 2
        if g > 0:
            raw.append((bl, br, tr, tl))
        else:
            raw.append((br, tr, tl, bl))
        slot[i], slot[i + 1] = tl, tr
    rename = {slot[j]: j for j in range(strands)}
    closed = [tuple(rename.get(lab, lab) for lab in x) for x in raw]
    return relabel_by_walk(closed)


def flip_crossing(pd, i):
    """Swap over and under at crossing ``i``."""
    _, incoming = _walk(pd.crossings)
    a, b, c, d = pd.crossings[i]
    x = (b, c, d, a) if (i, 1) in incoming else (d, a, b, c)
    crossings = list(pd.crossings)
    crossings[i] = x
    return relabel_by_walk(crossings)


def add_curl(pd, label, kind=0):
    """Insert a Reidemeister-I curl on arc ``label``; ``kind`` in 0..3 picks the curl."""
    if not pd.crossings:
        return PDCode(((1, 2, 2, 1),) if kind % 2 == 0 else ((1, 1, 2, 2),))
    _, incoming = _walk(pd.crossings)
    head = next(pos for pos in incoming if pd.crossings[pos[0]][pos[1]] == label)
    top = 2 * len(pd.crossings)
    u, v = top + 1, top + 2
    crossings = [list(x) for x in pd.crossings]
    crossings[head[0]][head[1]] = v
    new = (label, u, u, v) if kind % 2 == 0 else (label, v, u, u)
    crossings.append(new)
    out = relabel_by_walk(crossings)
    if kind >= 2:
        out = flip_crossing(out, len(out.crossings) - 1)
    return out


def random_knot_pd(rng, max_crossings=10, max_strands=4):
    """Random knot diagram: a braid closure with optional flips and curls."""
    while True:
        strands = rng.randint(2, max_strands)
        length = rng.randint(strands - 1, max(strands - 1, max_crossings - 2))
        word = [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)]
        try:
            pd = braid_closure(word, strands)
        except (UsageError, DiagramError):
            continue
        while len(pd) < max_crossings and rng.random() < 0.3:
            pd = add_curl(pd, rng.randint(1, 2 * len(pd)), rng.randrange(4))
        if pd.crossings and rng.random() < 0.5:
            pd = flip_crossing(pd, rng.randrange(len(pd)))
        if 1 <= len(pd) <= max_crossings:
            return pd


def random_pds(count, seed=0, max_crossings=10):
    rng = random.Random(seed)
    return [random_knot_pd(rng, max_crossings) for _ in range(count)]
