"""Finite graphs and digraphs: shift-graph generators, order-type graphs, homomorphisms."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .seqs import OrderTypePattern, otp


def _label_json(label):
    return list(label) if isinstance(label, tuple) else label


def _label_from_json(label):
    return tuple(label) if isinstance(label, list) else label


def _label_dot(label) -> str:
    if isinstance(label, tuple):
        return "(" + ",".join(str(v) for v in label) + ")"
    return str(label)


class FiniteGraph:
    """Undirected simple graph over an ordered vertex list; edges are index pairs."""

    def __init__(self, vertices: Sequence, edges: Iterable[tuple[int, int]]):
        self.vertices = list(vertices)
        n = len(self.vertices)
        norm = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i},{j}) out of range")
            norm.add((i, j) if i < j else (j, i))
        self.edges = sorted(norm)
        self._adj: list[set[int]] = [set() for _ in range(n)]
        for i, j in self.edges:
            self._adj[i].add(j)
            self._adj[j].add(i)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, i: int) -> set[int]:
        return self._adj[i]

    def degree(self, i: int) -> int:
        return len(self._adj[i])

    def has_edge(self, i: int, j: int) -> bool:
        return j in self._adj[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGraph):
            return NotImplemented
        return list(self.vertices) == list(other.vertices) and self.edges == other.edges

    def __repr__(self) -> str:
        return f"FiniteGraph(n={self.n}, m={self.m})"

    def to_json(self) -> dict:
        return {
            "vertices": [_label_json(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FiniteGraph":
        vertices = [_label_from_json(v) for v in data["vertices"]]
        return cls(vertices, [tuple(e) for e in data["edges"]])

    def to_dot(self) -> str:
        lines = ["graph G {"]
        for v in self.vertices:
            lines.append(f'  "{_label_dot(v)}";')
        for i, j in self.edges:
            lines.append(f'  "{_label_dot(self.vertices[i])}" -- "{_label_dot(self.vertices[j])}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


class FiniteDigraph:
    """Directed graph over an ordered vertex list; arcs are ordered index pairs, no self-arcs."""

    def __init__(self, vertices: Sequence, arcs: Iterable[tuple[int, int]]):
        self.vertices = list(vertices)
        n = len(self.vertices)
        norm = set()
        for i, j in arcs:
            if i == j:
                raise ValueError(f"self-arc at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"arc ({i},{j}) out of range")
            norm.add((i, j))
        self.arcs = sorted(norm)
        self._succ: list[set[int]] = [set() for _ in range(n)]
        for i, j in self.arcs:
            self._succ[i].add(j)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def successors(self, i: int) -> set[int]:
        return self._succ[i]

    def has_arc(self, i: int, j: int) -> bool:
        return j in self._succ[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteDigraph):
            return NotImplemented
        return list(self.vertices) == list(other.vertices) and self.arcs == other.arcs

    def __repr__(self) -> str:
        return f"FiniteDigraph(n={self.n}, m={self.m})"

    def symmetrize(self) -> FiniteGraph:
        """Forget arc directions (and any antiparallel duplicates)."""
        return FiniteGraph(self.vertices, self.arcs)

    def to_json(self) -> dict:
        return {
            "vertices": [_label_json(v) for v in self.vertices],
            "arcs": [list(a) for a in self.arcs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FiniteDigraph":
        vertices = [_label_from_json(v) for v in data["vertices"]]
        return cls(vertices, [tuple(a) for a in data["arcs"]])

    def to_dot(self) -> str:
        lines = ["digraph G {"]
        for v in self.vertices:
            lines.append(f'  "{_label_dot(v)}";')
        for i, j in self.arcs:
            lines.append(f'  "{_label_dot(self.vertices[i])}" -> "{_label_dot(self.vertices[j])}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def graph_from_json(data: dict) -> FiniteGraph | FiniteDigraph:
    """Parse either emitted graph document ("edges" key = undirected, "arcs" = directed)."""
    if "arcs" in data:
        return FiniteDigraph.from_json(data)
    return FiniteGraph.from_json(data)


def shift_graph(r: int, n: int) -> FiniteGraph:
    """Shift graph on increasing r-tuples over 0..n-1.

    Two tuples are adjacent when one is the left shift of the other, i.e. the
    second agrees with the first moved one slot left (s(i) = t(i-1) for every
    interior position, read as one whole condition per direction). For r = 1
    the condition is vacuous both ways, giving the complete graph.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if n < r:
        raise ValueError(f"no increasing {r}-tuples over 0..{n - 1}")
    vertices = list(combinations(range(n), r))
    index = {v: i for i, v in enumerate(vertices)}
    edges = []
    for c in combinations(range(n), r + 1):
        edges.append((index[c[:r]], index[c[1:]]))
    return FiniteGraph(vertices, edges)


def lshift_digraph(k: int, n: int) -> FiniteDigraph:
    """Directed shift graph: an arc from each increasing k-tuple to each of its left shifts.

    For k = 1 this degenerates to the strict order: an arc from every singleton
    to every larger singleton.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if n <= k:
        raise ValueError(f"need n > k, got k={k}, n={n}")
    vertices = list(combinations(range(n), k))
    index = {v: i for i, v in enumerate(vertices)}
    arcs = []
    for c in combinations(range(n), k + 1):
        arcs.append((index[c[:k]], index[c[1:]]))
    return FiniteDigraph(vertices, arcs)


def rshift_digraph(k: int, n: int) -> FiniteDigraph:
    """Directed shift graph oriented toward right shifts.

    Image of lshift_digraph(k, n) under x -> (n-1-x[k-1], ..., n-1-x[0]): an
    arc runs from each k-tuple to each tuple obtained by shifting it one slot
    right (k = 1: from every singleton to every smaller singleton).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if n <= k:
        raise ValueError(f"need n > k, got k={k}, n={n}")
    vertices = list(combinations(range(n), k))
    index = {v: i for i, v in enumerate(vertices)}
    arcs = []
    for c in combinations(range(n), k + 1):
        arcs.append((index[c[1:]], index[c[:k]]))
    return FiniteDigraph(vertices, arcs)


def order_type_graph(pattern: OrderTypePattern, theta: int) -> FiniteGraph:
    """Graph on increasing tuples over 0..theta-1: adjacency = realizing the pattern either way."""
    if not pattern.irreflexive:
        raise ValueError("pattern not irreflexive (identical rank rows)")
    vertices = list(combinations(range(theta), pattern.length))
    edges = []
    for i, u in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            v = vertices[j]
            if otp(u, v) == pattern or otp(v, u) == pattern:
                edges.append((i, j))
    return FiniteGraph(vertices, edges)


def _as_map(f, n_src: int) -> list[int]:
    if isinstance(f, Mapping):
        out = []
        for i in range(n_src):
            if i not in f:
                raise ValueError(f"map undefined at vertex {i}")
            out.append(f[i])
        return out
    out = list(f)
    if len(out) != n_src:
        raise ValueError(f"map covers {len(out)} vertices, source has {n_src}")
    return out


def verify_homomorphism(f, src, dst, mode: str | None = None) -> bool:
    """Check that f sends every source edge (arc) to a target edge (arc).

    mode "graph" or "digraph" may force an interpretation; by default it is
    inferred from the argument types, which must agree.
    """
    if mode is None:
        mode = "digraph" if isinstance(src, FiniteDigraph) else "graph"
    if mode == "graph":
        if not (isinstance(src, FiniteGraph) and isinstance(dst, FiniteGraph)):
            raise ValueError("graph mode needs two undirected graphs")
        mapping = _as_map(f, src.n)
        for x in mapping:
            if not (0 <= x < dst.n):
                raise ValueError(f"image vertex {x} out of range")
        return all(dst.has_edge(mapping[i], mapping[j]) for i, j in src.edges)
    if mode == "digraph":
        if not (isinstance(src, FiniteDigraph) and isinstance(dst, FiniteDigraph)):
            raise ValueError("digraph mode needs two digraphs")
        mapping = _as_map(f, src.n)
        for x in mapping:
            if not (0 <= x < dst.n):
                raise ValueError(f"image vertex {x} out of range")
        return all(dst.has_arc(mapping[i], mapping[j]) for i, j in src.arcs)
    raise ValueError(f"unknown mode {mode!r}")


def verify_strong_homomorphism(f, src: FiniteGraph, dst: FiniteGraph) -> bool:
    """Check that f reflects adjacency as well as preserving it.

    Strong means edge iff image-edge: distinct vertices with the same image
    must be non-adjacent, since graphs carry no loops.
    """
    mapping = _as_map(f, src.n)
    for x in mapping:
        if not (0 <= x < dst.n):
            raise ValueError(f"image vertex {x} out of range")
    for i in range(src.n):
        for j in range(i + 1, src.n):
            if src.has_edge(i, j) != dst.has_edge(mapping[i], mapping[j]):
                return False
    return True


@dataclass(frozen=True)
class SubgraphSearch:
    """Outcome of a subgraph-embedding search.

    status is "found" (mapping set), "absent" (search space exhausted), or
    "inconclusive" (budget ran out before either answer).
    """

    status: str
    mapping: tuple[int, ...] | None
    nodes: int


class _Budget(Exception):
    pass


def find_subgraph_embedding(h: FiniteGraph, g: FiniteGraph, budget: int | None = None) -> SubgraphSearch:
    """Search for an injective map sending every h-edge to a g-edge.

    Backtracking over h-vertices in decreasing-degree order with degree-based
    candidate pruning; budget caps the number of search nodes.
    """
    order = sorted(range(h.n), key=lambda v: (-h.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    assignment: list[int | None] = [None] * h.n
    used = [False] * g.n
    nodes = 0

    def rec(depth: int) -> bool:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Budget
        if depth == h.n:
            return True
        v = order[depth]
        earlier = [u for u in h.neighbors(v) if pos[u] < depth]
        for cand in range(g.n):
            if used[cand] or g.degree(cand) < h.degree(v):
                continue
            if all(g.has_edge(assignment[u], cand) for u in earlier):
                assignment[v] = cand
                used[cand] = True
                if rec(depth + 1):
                    return True
                used[cand] = False
                assignment[v] = None
        return False

    try:
        found = rec(0)
    except _Budget:
        return SubgraphSearch("inconclusive", None, nodes)
    if found:
        return SubgraphSearch("found", tuple(assignment), nodes)
    return SubgraphSearch("absent", None, nodes)


def is_connected(g: FiniteGraph) -> bool:
    """Breadth-first reachability from vertex 0; errors on the empty graph."""
    if g.n == 0:
        raise ValueError("connectivity undefined for the empty graph")
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return len(seen) == g.n
