"""Signed, edge-labelled multigraphs.

Loops and parallel edges are allowed.  Labels are the integers 1..n and drive
every activity computation; only their relative order matters.  For
disconnected graphs "spanning tree" means maximal spanning forest throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

INTERNAL_ACTIVE = "internally-active"
INTERNAL_INACTIVE = "internally-inactive"
EXTERNAL_ACTIVE = "externally-active"
EXTERNAL_INACTIVE = "externally-inactive"


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    sign: str
    label: int

    @property
    def is_loop(self):
        return self.u == self.v


@dataclass(frozen=True)
class SignedGraph:
    num_vertices: int
    edges: tuple
    # new label -> label in the graph this one was derived from
    audit: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: e.label)))

    @classmethod
    def from_list(cls, num_vertices, edges):
        """Build from ``(u, v, sign)`` or ``(u, v, sign, label)`` tuples.

        Missing labels are taken from the list position (1-based).
        """
        out = []
        for i, e in enumerate(edges, start=1):
            if len(e) == 3:
                u, v, s = e
                lab = i
            else:
                u, v, s, lab = e
            out.append(Edge(u, v, s, lab))
        g = cls(num_vertices, tuple(out))
        validate(g)
        return g

    def __len__(self):
        return len(self.edges)

    def edge(self, label):
        for e in self.edges:
            if e.label == label:
                return e
        raise GraphError(f"no edge with label {label}")

    def labels(self):
        return sorted(e.label for e in self.edges)

    def by_label(self):
        return {e.label: e for e in self.edges}

    def signs(self):
        return {e.label: e.sign for e in self.edges}

    def components(self):
        uf = _UnionFind(self.num_vertices)
        for e in self.edges:
            uf.union(e.u, e.v)
        return len({uf.find(v) for v in range(self.num_vertices)})

    def is_connected(self):
        return self.components() == 1

    def rank(self):
        return self.num_vertices - self.components()

    def relabel(self, mapping):
        """Return a copy with labels replaced by ``mapping[label]``."""
        edges = tuple(Edge(e.u, e.v, e.sign, mapping[e.label]) for e in self.edges)
        g = SignedGraph(self.num_vertices, edges)
        validate(g)
        return g

    def with_signs(self, sign):
        return SignedGraph(self.num_vertices, tuple(Edge(e.u, e.v, sign, e.label) for e in self.edges))


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def validate(g):
    if g.num_vertices < 1:
        raise GraphError("a graph needs at least one vertex")
    labels = sorted(e.label for e in g.edges)
    if len(set(labels)) != len(labels):
        raise GraphError(f"duplicate labels in {labels}")
    if labels != list(range(1, len(labels) + 1)):
        raise GraphError(f"labels {labels} are not 1..{len(labels)}")
    for e in g.edges:
        if not (0 <= e.u < g.num_vertices and 0 <= e.v < g.num_vertices):
            raise GraphError(f"edge {e.label} has a vertex out of range")
        if e.sign not in ("+", "-"):
            raise GraphError(f"edge {e.label} has sign {e.sign!r}")


# ---------------------------------------------------------------- spanning trees


def _connected_without(num_vertices, edges, skip, comp):
    """True if the endpoints of ``skip`` stay joined in ``edges`` minus ``skip``.

    ``comp`` maps original vertices to contracted super-vertices.
    """
    adj = {}
    for e in edges:
        if e is skip:
            continue
        a, b = comp(e.u), comp(e.v)
        if a == b:
            continue
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    src, dst = comp(skip.u), comp(skip.v)
    seen = {src}
    stack = [src]
    while stack:
        x = stack.pop()
        if x == dst:
            return True
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def spanning_trees(g):
    """Every maximal spanning forest, as sorted label tuples in lexicographic order.

    Deletion-contraction over the edges in label order: an edge that has
    become a loop is always left out, an edge that has become a bridge is
    always taken, anything else branches.
    """
    edges = sorted(g.edges, key=lambda e: e.label)
    found = []

    def rec(i, chosen, parent, remaining):
        if i == len(edges):
            found.append(tuple(chosen))
            return
        e = edges[i]

        def find(x, parent=parent):
            while parent[x] != x:
                x = parent[x]
            return x

        a, b = find(e.u), find(e.v)
        rest = remaining[1:]
        if a == b:
            rec(i + 1, chosen, parent, rest)
            return
        # contract: e joins the forest
        merged = list(parent)
        merged[b] = a
        rec(i + 1, chosen + [e.label], merged, rest)
        # delete: only if e is not a bridge of what is left
        if _connected_without(g.num_vertices, remaining, e, find):
            rec(i + 1, chosen, parent, rest)

    rec(0, [], list(range(g.num_vertices)), edges)
    found.sort()
    yield from found


def spanning_trees_bruteforce(g):
    """Reference enumeration: filter every subset of size rank(g)."""
    r = g.rank()
    edges = sorted(g.edges, key=lambda e: e.label)
    out = []
    for combo in combinations(edges, r):
        uf = _UnionFind(g.num_vertices)
        if all(uf.union(e.u, e.v) for e in combo):
            out.append(tuple(e.label for e in combo))
    out.sort()
    return out


# ---------------------------------------------------------------- cycles and cuts


def _tree_path(g, tree, src, dst):
    """Labels on the tree path from ``src`` to ``dst``, or None if not joined."""
    adj = {}
    for e in g.edges:
        if e.label in tree:
            adj.setdefault(e.u, []).append((e.v, e.label))
            adj.setdefault(e.v, []).append((e.u, e.label))
    prev = {src: None}
    stack = [src]
    while stack:
        x = stack.pop()
        if x == dst:
            break
        for y, lab in adj.get(x, ()):
            if y not in prev:
                prev[y] = (x, lab)
                stack.append(y)
    if dst not in prev:
        return None
    path = []
    x = dst
    while prev[x] is not None:
        x, lab = prev[x]
        path.append(lab)
    return path


def fundamental_cycle(g, tree, f):
    tree = set(tree)
    if f in tree:
        raise GraphError(f"edge {f} is in the tree")
    e = g.edge(f)
    if e.is_loop:
        return {f}
    path = _tree_path(g, tree, e.u, e.v)
    if path is None:
        raise GraphError(f"edge {f} does not close a cycle; tree is not maximal")
    return set(path) | {f}


def fundamental_cut(g, tree, e):
    tree = set(tree)
    if e not in tree:
        raise GraphError(f"edge {e} is not in the tree")
    return {
        f.label
        for f in g.edges
        if f.label not in tree and e in fundamental_cycle(g, tree, f.label)
    }


@dataclass(frozen=True)
class TreeActivities:
    tree: frozenset
    classification: dict
    cycles: dict = field(default_factory=dict, compare=False, repr=False)


class _TreeIndex:
    """Rooted forest with parent pointers for fast path queries."""

    def __init__(self, g, tree):
        adj = {}
        for e in g.edges:
            if e.label in tree:
                adj.setdefault(e.u, []).append((e.v, e.label))
                adj.setdefault(e.v, []).append((e.u, e.label))
        self.parent = {}
        self.depth = {}
        for root in range(g.num_vertices):
            if root in self.depth:
                continue
            self.parent[root] = None
            self.depth[root] = 0
            stack = [root]
            while stack:
                x = stack.pop()
                for y, lab in adj.get(x, ()):
                    if y not in self.depth:
                        self.depth[y] = self.depth[x] + 1
                        self.parent[y] = (x, lab)
                        stack.append(y)

    def path(self, a, b):
        out = []
        da, db = self.depth[a], self.depth[b]
        while da > db:
            a, lab = self.parent[a]
            out.append(lab)
            da -= 1
        while db > da:
            b, lab = self.parent[b]
            out.append(lab)
            db -= 1
        while a != b:
            if self.parent[a] is None or self.parent[b] is None:
                return None
            a, la = self.parent[a]
            b, lb = self.parent[b]
            out.append(la)
            out.append(lb)
        return out


def activities(g, tree):
    """Classify every edge relative to ``tree`` (a maximal spanning forest).

    A tree edge is internally active when its label is below every edge of
    its fundamental cut; a non-tree edge is externally active when it carries
    the smallest label on its fundamental cycle.
    """
    tree = frozenset(tree)
    index = _TreeIndex(g, tree)
    cycles = {}
    cut_min = {}
    cls = {}
    for f in g.edges:
        if f.label in tree:
            continue
        path = [] if f.is_loop else index.path(f.u, f.v)
        if path is None:
            raise GraphError("tree is not a maximal spanning forest")
        cyc = set(path)
        cyc.add(f.label)
        cycles[f.label] = cyc
        cls[f.label] = EXTERNAL_ACTIVE if f.label == min(cyc) else EXTERNAL_INACTIVE
        for t in path:
            if t not in cut_min or f.label < cut_min[t]:
                cut_min[t] = f.label
    for t in tree:
        active = t not in cut_min or t < cut_min[t]
        cls[t] = INTERNAL_ACTIVE if active else INTERNAL_INACTIVE
    return TreeActivities(tree, cls, cycles)


# ---------------------------------------------------------------- minors


def _compress(edges, num_vertices, compress):
    edges = tuple(edges)
    if not compress:
        return SignedGraph(num_vertices, edges)
    order = sorted(e.label for e in edges)
    rank = {lab: i for i, lab in enumerate(order, start=1)}
    new = tuple(Edge(e.u, e.v, e.sign, rank[e.label]) for e in edges)
    audit = tuple(order)  # audit[i - 1] is the old label of new label i
    return SignedGraph(num_vertices, new, audit)


def delete_edge(g, label, compress=True):
    g.edge(label)
    rest = [e for e in g.edges if e.label != label]
    return _compress(rest, g.num_vertices, compress)


def contract_edge(g, label, compress=True):
    e = g.edge(label)
    if e.is_loop:
        raise GraphError(f"refusing to contract loop {label}")
    keep, gone = min(e.u, e.v), max(e.u, e.v)

    def m(x):
        if x == gone:
            x = keep
        return x - 1 if x > gone else x

    rest = [Edge(m(f.u), m(f.v), f.sign, f.label) for f in g.edges if f.label != label]
    return _compress(rest, g.num_vertices - 1, compress)


# ---------------------------------------------------------------- text format


def format_graph(g):
    lines = [f"v {g.num_vertices}"]
    for e in sorted(g.edges, key=lambda e: e.label):
        lines.append(f"e {e.u} {e.v} {e.sign} {e.label}")
    return "\n".join(lines) + "\n"


def parse_graph(text, extra=None):
    """Parse the ``v``/``e`` line format.

    Lines whose keyword is in ``extra`` are returned in a dict instead of
    being rejected (the Tait output uses a trailing ``w`` line).
    """
    n = None
    edges = []
    found = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "v" and len(parts) == 2:
                if n is not None:
                    raise GraphError("duplicate 'v' line")
                n = int(parts[1])
            elif parts[0] == "e" and len(parts) == 5:
                u, v, s, lab = int(parts[1]), int(parts[2]), parts[3], int(parts[4])
                edges.append(Edge(u, v, s, lab))
            elif extra and parts[0] in extra:
                found[parts[0]] = parts[1:]
            else:
                raise GraphError(f"line {lineno}: cannot parse {raw!r}")
        except ValueError as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"line {lineno}: {exc}") from None
    if n is None:
        raise GraphError("missing 'v' line")
    g = SignedGraph(n, tuple(edges))
    validate(g)
    if extra is not None:
        return g, found
    return g
