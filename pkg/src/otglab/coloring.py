"""Proper colorings: exact chromatic number and the four bound-transfer constructions."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

from .graphs import FiniteGraph, order_type_graph, verify_homomorphism, verify_strong_homomorphism
from .seqs import OrderTypePattern


@dataclass(frozen=True)
class Coloring:
    """Total vertex coloring: colors[i] < palette for every vertex i."""

    colors: tuple[int, ...]
    palette: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.palette < 0:
            raise ValueError("palette size must be >= 0")
        for c in self.colors:
            if c < 0 or c >= self.palette:
                raise ValueError(f"color {c} outside palette of size {self.palette}")

    def to_json(self) -> dict:
        return {"palette": self.palette, "colors": list(self.colors)}

    @classmethod
    def from_json(cls, data: dict) -> "Coloring":
        return cls(tuple(data["colors"]), int(data["palette"]))


def verify_coloring(g: FiniteGraph, c: Coloring) -> bool:
    """True iff c is total on g and no edge is monochromatic."""
    if len(c.colors) != g.n:
        return False
    return all(c.colors[i] != c.colors[j] for i, j in g.edges)


def greedy_coloring(g: FiniteGraph, order: Sequence[int] | None = None) -> Coloring:
    """First-fit coloring along the given vertex order (default: index order)."""
    if order is None:
        order = range(g.n)
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    colors = [-1] * g.n
    for v in order:
        taken = {colors[w] for w in g.neighbors(v) if colors[w] >= 0}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    palette = max(colors) + 1 if colors else 0
    return Coloring(tuple(colors), palette)


def greedy_clique(g: FiniteGraph) -> list[int]:
    """Greedy maximal clique: scan by decreasing degree, keep mutually adjacent picks."""
    clique: list[int] = []
    for v in sorted(range(g.n), key=lambda x: (-g.degree(x), x)):
        if all(g.has_edge(v, u) for u in clique):
            clique.append(v)
    return clique


@dataclass(frozen=True)
class ChiResult:
    """Exact chromatic number, or bounds when the node budget ran out.

    chi is None exactly in the inconclusive case; witness always holds the best
    proper coloring seen (palette == upper).
    """

    chi: int | None
    lower: int
    upper: int
    witness: Coloring
    nodes: int

    @property
    def exact(self) -> bool:
        return self.chi is not None

    def to_json(self) -> dict:
        doc = {"chi": self.chi, "witness": list(self.witness.colors), "nodes_explored": self.nodes}
        if self.chi is None:
            doc["lower"] = self.lower
            doc["upper"] = self.upper
        return doc


def _dsatur_greedy(adj: list[int], deg: list[int], n: int) -> list[int]:
    colors = [-1] * n
    nbr_mask = [0] * n
    for _ in range(n):
        best = -1
        best_key = None
        for v in range(n):
            if colors[v] >= 0:
                continue
            key = (bin(nbr_mask[v]).count("1"), deg[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        c = 0
        while nbr_mask[best] >> c & 1:
            c += 1
        colors[best] = c
        bit = 1 << c
        w_mask = adj[best]
        w = 0
        while w_mask:
            if w_mask & 1:
                nbr_mask[w] |= bit
            w_mask >>= 1
            w += 1
    return colors


class _BudgetHit(Exception):
    pass


def chromatic_number(g: FiniteGraph, budget: int | None = None) -> ChiResult:
    """Exact chromatic number by branch and bound.

    Upper bound from a saturation-greedy coloring, lower bound from a greedy
    maximal clique, branching on the uncolored vertex of maximal saturation
    (ties: higher degree, then lower index), trying existing colors in
    ascending order plus at most one fresh color. budget caps the number of
    decision nodes; exhausting it yields an inconclusive result with bounds.
    """
    n = g.n
    if n == 0:
        raise ValueError("chromatic number undefined for the empty graph")
    deg = [g.degree(v) for v in range(n)]
    adj = [0] * n
    for i, j in g.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i

    greedy = _dsatur_greedy(adj, deg, n)
    ub = max(greedy) + 1
    best = list(greedy)
    lb = max(1, len(greedy_clique(g)))

    if lb >= ub:
        return ChiResult(ub, ub, ub, Coloring(tuple(best), ub), 0)

    colors = [-1] * n
    nbr_mask = [0] * n
    nodes = 0

    def pick() -> int:
        chosen = -1
        chosen_key = None
        for v in range(n):
            if colors[v] >= 0:
                continue
            key = (bin(nbr_mask[v]).count("1"), deg[v], -v)
            if chosen_key is None or key > chosen_key:
                chosen, chosen_key = v, key
        return chosen

    def rec(colored: int, used: int) -> None:
        nonlocal nodes, ub, best
        nodes += 1
        if budget is not None and nodes > budget:
            raise _BudgetHit
        if colored == n:
            ub = used
            best = colors[:]
            return
        v = pick()
        limit = min(used + 1, ub - 1)
        forbidden = nbr_mask[v]
        for c in range(limit):
            if forbidden >> c & 1:
                continue
            colors[v] = c
            bit = 1 << c
            touched = []
            w_mask = adj[v]
            w = 0
            while w_mask:
                if w_mask & 1 and not nbr_mask[w] >> c & 1:
                    nbr_mask[w] |= bit
                    touched.append(w)
                w_mask >>= 1
                w += 1
            rec(colored + 1, max(used, c + 1))
            for w in touched:
                nbr_mask[w] ^= bit
            colors[v] = -1
            if ub <= lb:
                return

    try:
        rec(0, 0)
    except _BudgetHit:
        return ChiResult(None, lb, ub, Coloring(tuple(best), ub), nodes)
    return ChiResult(ub, ub, ub, Coloring(tuple(best), ub), nodes)


def sum_coloring(g: FiniteGraph, pieces: Sequence[tuple[Sequence[int], Coloring]]) -> Coloring:
    """Combine per-piece colorings of a vertex partition with disjoint palettes.

    The result is proper whenever each piece coloring is proper on its induced
    subgraph, with palette = sum of the piece palettes.
    """
    seen: set[int] = set()
    for subset, _ in pieces:
        for v in subset:
            if v in seen:
                raise ValueError(f"vertex {v} in two pieces")
            seen.add(v)
    if seen != set(range(g.n)):
        raise ValueError("pieces do not partition the vertex set")
    colors = [-1] * g.n
    offset = 0
    for subset, col in pieces:
        subset = list(subset)
        if len(col.colors) != len(subset):
            raise ValueError("piece coloring length mismatch")
        local = {v: col.colors[i] for i, v in enumerate(subset)}
        for i, j in g.edges:
            if i in local and j in local and local[i] == local[j]:
                raise ValueError("piece coloring not proper on its induced subgraph")
        for v, c in local.items():
            colors[v] = offset + c
        offset += col.palette
    return Coloring(tuple(colors), offset)


def product_coloring(
    g: FiniteGraph, edge_pieces: Sequence[tuple[Iterable[tuple[int, int]], Coloring]]
) -> Coloring:
    """Combine colorings of edge-subset relations into one for their union.

    Each piece coloring must be proper for its own edge set; every g-edge must
    be covered by some piece. Colors are digit tuples packed into a palette of
    size = product of the piece palettes.
    """
    norm_pieces = []
    covered: set[tuple[int, int]] = set()
    for edge_set, col in edge_pieces:
        edges = {(min(i, j), max(i, j)) for i, j in edge_set}
        if len(col.colors) != g.n:
            raise ValueError("piece coloring must color every vertex")
        for i, j in edges:
            if i == j or not (0 <= i < g.n and 0 <= j < g.n):
                raise ValueError(f"bad edge ({i},{j}) in piece")
            if col.colors[i] == col.colors[j]:
                raise ValueError("piece coloring not proper for its edge set")
        covered |= edges
        norm_pieces.append(col)
    if not set(g.edges) <= covered:
        raise ValueError("edge pieces do not cover the graph")
    palettes = [col.palette for col in norm_pieces]
    palette = prod(palettes) if palettes else 1
    colors = []
    for v in range(g.n):
        value = 0
        for col in norm_pieces:
            value = value * col.palette + col.colors[v]
        colors.append(value)
    return Coloring(tuple(colors), palette)


def pullback_coloring(f, h: FiniteGraph, g: FiniteGraph, c: Coloring) -> Coloring:
    """Pull a proper coloring of g back along a homomorphism h -> g."""
    if not verify_homomorphism(f, h, g):
        raise ValueError("f is not a homomorphism")
    if not verify_coloring(g, c):
        raise ValueError("c is not a proper coloring of the target")
    mapping = f if isinstance(f, Sequence) else [f[i] for i in range(h.n)]
    return Coloring(tuple(c.colors[mapping[i]] for i in range(h.n)), c.palette)


def quotient_coloring(f, h: FiniteGraph, g: FiniteGraph, c: Coloring) -> Coloring:
    """Push a proper coloring of h down a surjective strong homomorphism onto g.

    Coloring each target vertex by one of its preimages is proper exactly
    because a strong map reflects edges; together with pullback_coloring this
    pins the chromatic numbers of h and g to each other.
    """
    if not verify_strong_homomorphism(f, h, g):
        raise ValueError("f is not a strong homomorphism")
    if not verify_coloring(h, c):
        raise ValueError("c is not a proper coloring of the source")
    mapping = f if isinstance(f, Sequence) else [f[i] for i in range(h.n)]
    section: dict[int, int] = {}
    for u in range(h.n):
        section.setdefault(mapping[u], u)
    if len(section) != g.n:
        raise ValueError("f is not surjective")
    return Coloring(tuple(c.colors[section[v]] for v in range(g.n)), c.palette)


@dataclass(frozen=True)
class PatternUnionResult:
    """Product bound for a union of order-type graphs on a shared vertex set."""

    bound: int | None
    coloring: Coloring | None
    parts: tuple[ChiResult, ...]

    @property
    def exact_parts(self) -> bool:
        return all(p.exact for p in self.parts)


def pattern_union_chromatic(
    j_len: int, theta: int, patterns: Sequence[OrderTypePattern], budget: int | None = None
) -> PatternUnionResult:
    """Bound the chromatic number of a union of pattern graphs by the product of exact parts.

    Each pattern graph is solved exactly; the product of those chromatic
    numbers bounds the union, witnessed by the packed product coloring. Any
    budget-inconclusive part makes the whole result inconclusive.
    """
    if not patterns:
        raise ValueError("need at least one pattern")
    for p in patterns:
        if p.length != j_len:
            raise ValueError("pattern length mismatch")
    graphs = [order_type_graph(p, theta) for p in patterns]
    union = FiniteGraph(graphs[0].vertices, [e for gr in graphs for e in gr.edges])
    parts = []
    for gr in graphs:
        res = chromatic_number(gr, budget)
        parts.append(res)
        if not res.exact:
            return PatternUnionResult(None, None, tuple(parts))
    combo = product_coloring(union, [(gr.edges, res.witness) for gr, res in zip(graphs, parts)])
    if not verify_coloring(union, combo):
        raise RuntimeError("product coloring failed verification on the union graph")
    return PatternUnionResult(combo.palette, combo, tuple(parts))
