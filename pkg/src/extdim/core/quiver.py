"""Finite quivers and the Dynkin / Euclidean / wild classification of their underlying graphs."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx


@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate arrow labels")
        if set(labels) & set(self.vertices):
            raise ValueError("arrow and vertex labels must be distinct")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise ValueError(f"arrow {a.label} has an undeclared endpoint")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def arrow(self, label: str) -> Arrow:
        for a in self.arrows:
            if a.label == label:
                return a
        raise KeyError(label)

    def index(self, v: str) -> int:
        return self.vertices.index(v)

    def out_arrows(self, v):
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v):
        return [a for a in self.arrows if a.target == v]

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, tuple(Arrow(a.label, a.target, a.source) for a in self.arrows))

    def underlying_graph(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self.vertices)
        for a in self.arrows:
            g.add_edge(a.source, a.target)
        return g

    def digraph(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for a in self.arrows:
            g.add_edge(a.source, a.target)
        return g

    def components(self) -> list["Quiver"]:
        g = self.underlying_graph()
        out = []
        for comp in nx.connected_components(g):
            vs = tuple(v for v in self.vertices if v in comp)
            arr = tuple(a for a in self.arrows if a.source in comp)
            out.append(Quiver(vs, arr))
        return out

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(nx.DiGraph(self.digraph()))


def quivers_isomorphic(q1: Quiver, q2: Quiver) -> bool:
    """Isomorphism of directed multigraphs (labels ignored)."""
    def simple(q):
        g = nx.DiGraph()
        g.add_nodes_from(q.vertices)
        c = Counter((a.source, a.target) for a in q.arrows)
        for (s, t), m in c.items():
            g.add_edge(s, t, m=m)
        return g
    return nx.is_isomorphic(simple(q1), simple(q2),
                            edge_match=lambda a, b: a["m"] == b["m"])


@dataclass(frozen=True)
class GraphClass:
    """``kind`` is ``"Dynkin"``, ``"Euclidean"`` or ``"Wild"``; ``type`` e.g. ``"A3"``, ``"~D4"``."""

    kind: str
    type: str = ""

    @property
    def is_dynkin(self):
        return self.kind == "Dynkin"

    def __str__(self):
        return f"{self.kind} {self.type}".strip()


def classify_graph(Q: Quiver) -> GraphClass:
    """Classify the underlying graph of a connected quiver."""
    g = Q.underlying_graph()
    n = g.number_of_nodes()
    if n == 0:
        raise ValueError("empty quiver")
    if not nx.is_connected(g):
        raise ValueError("classify_graph expects a connected quiver; classify components separately")
    m = g.number_of_edges()
    loops = nx.number_of_selfloops(g)
    simple = nx.Graph(g)
    multi = m != simple.number_of_edges()
    if loops:
        if n == 1 and m == 1:
            return GraphClass("Euclidean", "~A0")
        return GraphClass("Wild")
    if multi:
        if n == 2 and m == 2:
            return GraphClass("Euclidean", "~A1")
        return GraphClass("Wild")
    if m == n:
        if all(d == 2 for _, d in simple.degree()):
            return GraphClass("Euclidean", f"~A{n - 1}")
        return GraphClass("Wild")
    if m > n:
        return GraphClass("Wild")
    # a tree
    deg = dict(simple.degree())
    branch = [v for v, d in deg.items() if d >= 3]
    if not branch:
        return GraphClass("Dynkin", f"A{n}")
    if any(deg[v] > 4 for v in branch):
        return GraphClass("Wild")
    if len(branch) == 1 and deg[branch[0]] == 4:
        return GraphClass("Euclidean", "~D4") if n == 5 else GraphClass("Wild")
    if len(branch) == 1:
        c = branch[0]
        arms = sorted(_arm_length(simple, c, u) for u in simple.neighbors(c))
        p, q, r = (a + 1 for a in arms)  # arm lengths counted with the centre
        s = Fraction(1, p) + Fraction(1, q) + Fraction(1, r)
        if s > 1:
            if p == 2 and q == 2:
                return GraphClass("Dynkin", f"D{n}")
            return GraphClass("Dynkin", f"E{n}")
        if s == 1:
            return GraphClass("Euclidean", f"~E{n - 1}")
        return GraphClass("Wild")
    if len(branch) == 2 and all(deg[v] == 3 for v in branch):
        # ~D_n: both branch points carry two leaves
        leaves_ok = all(sum(1 for u in simple.neighbors(v) if deg[u] == 1) >= 2 for v in branch)
        if leaves_ok:
            return GraphClass("Euclidean", f"~D{n - 1}")
    return GraphClass("Wild")


def _arm_length(g, centre, start):
    length, prev, cur = 1, centre, start
    while True:
        nxt = [u for u in g.neighbors(cur) if u != prev]
        if not nxt:
            return length
        if len(nxt) > 1:
            raise AssertionError("arm branches")
        prev, cur = cur, nxt[0]
        length += 1


def tits_form_signature(Q: Quiver) -> str:
    """``"positive"``, ``"semidefinite"`` or ``"indefinite"`` for the symmetric Tits form.

    Independent route to :func:`classify_graph` (Dynkin iff positive definite,
    Euclidean iff positive semidefinite and not definite), via exact LDL^T.
    """
    vs = list(Q.vertices)
    idx = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    M = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        M[i][i] = Fraction(2)
    for a in Q.arrows:
        i, j = idx[a.source], idx[a.target]
        if i == j:
            M[i][i] -= 2
        else:
            M[i][j] -= 1
            M[j][i] -= 1
    # eigen-free test: all leading principal minors > 0 -> definite;
    # semidefinite: all principal minors >= 0 (checked through LDL with pivoting on zero rows)
    def det(mat):
        mat = [list(r) for r in mat]
        k = len(mat)
        d = Fraction(1)
        for c in range(k):
            p = next((r for r in range(c, k) if mat[r][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                mat[c], mat[p] = mat[p], mat[c]
                d = -d
            d *= mat[c][c]
            for r in range(c + 1, k):
                f = mat[r][c] / mat[c][c]
                if f:
                    for j in range(c, k):
                        mat[r][j] -= f * mat[c][j]
        return d

    from itertools import combinations
    lead = [det([row[:k] for row in M[:k]]) for k in range(1, n + 1)]
    if all(x > 0 for x in lead):
        return "positive"
    for k in range(1, n + 1):
        for S in combinations(range(n), k):
            if det([[M[i][j] for j in S] for i in S]) < 0:
                return "indefinite"
    return "semidefinite"
