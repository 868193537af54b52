"""Pattern-preserving embeddings of shift graphs built from block ladders."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .decompose import Block, CoverWitness, verify_cover
from .graphs import FiniteDigraph, FiniteGraph, lshift_digraph, shift_graph
from .seqs import IncreasingTuple, LexFrame, OrderTypePattern, otp


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class StarOrder:
    """Linear order with a shadow point below each of base elements, plus a top.

    Element beta is encoded 2*beta + 1, its shadow 2*beta, the top 2*base, so
    plain integer comparison realizes the order.
    """

    base: int

    def __post_init__(self) -> None:
        if self.base < 1:
            raise ValueError("need base >= 1")

    def real(self, beta: int) -> int:
        if not 0 <= beta < self.base:
            raise ValueError("element out of range")
        return 2 * beta + 1

    @property
    def top(self) -> int:
        return 2 * self.base

    @property
    def size(self) -> int:
        return 2 * self.base + 1

    def tuple_pred(self, t: Sequence[int]) -> tuple[int, ...]:
        """Lexicographic predecessor: decrement the last nonzero digit, max out the rest."""
        t = list(t)
        for i in range(len(t) - 1, -1, -1):
            if t[i] > 0:
                t[i] -= 1
                for j in range(i + 1, len(t)):
                    t[j] = self.top
                return tuple(t)
        return tuple(t)


@dataclass(frozen=True)
class LevelMaps:
    """Per-block digit tuples realizing the ladder of a k-orderly pair.

    sets[i] lists the indices whose low value sits in block i; values[(i, beta)]
    is the k-digit star tuple assigned at level i; tops[i] is the strict upper
    fence for level i.
    """

    k: int
    star: StarOrder
    sets: tuple[tuple[int, ...], ...]
    values: dict
    tops: tuple[tuple[int, ...], ...]
    level_index: dict

    def level_of(self, beta: int) -> int:
        return self.level_index[beta]

    def digits(self, beta: int) -> tuple[int, ...]:
        return self.values[(self.level_index[beta], beta)]


def _check_orderly(a: Sequence[int], b: Sequence[int], k: int, blocks: Sequence[Block]) -> list[int]:
    if len(a) != len(b) or not a:
        raise EmbeddingError("need two nonempty tuples of equal length")
    if len(blocks) != k + 1:
        raise EmbeddingError(f"need {k + 1} blocks for a {k}-step ladder")
    levels = []
    for i in range(len(a)):
        la = [m for m, blk in enumerate(blocks) if blk.contains(a[i])]
        lb = [m for m, blk in enumerate(blocks) if blk.contains(b[i])]
        if len(la) != 1 or len(lb) != 1 or lb[0] != la[0] + 1:
            raise EmbeddingError(f"blocks do not certify the ladder at index {i}")
        levels.append(la[0])
    return levels


def build_level_maps(
    a: Sequence[int], b: Sequence[int], k: int, blocks: Sequence[Block]
) -> LevelMaps:
    """Assign star-digit tuples level by level so value order mirrors the pattern.

    The top level gets single live digits; each lower level threads under the
    next one via the least index whose low value clears the given high value,
    sharing digits on exact contact and slotting below the predecessor
    otherwise. The result is checked: levels strictly increase below their
    fence, and comparisons across adjacent levels reproduce the comparisons of
    the corresponding tuple values.
    """
    levels = _check_orderly(a, b, k, blocks)
    star = StarOrder(len(a))
    sets = tuple(tuple(i for i in range(len(a)) if levels[i] == lv) for lv in range(k))
    if sum(len(s) for s in sets) != len(a):
        raise EmbeddingError("some index escaped the first k blocks")

    zeros = (0,) * k
    values: dict = {}
    tops: list[tuple[int, ...] | None] = [None] * k
    for beta in sets[k - 1]:
        values[(k - 1, beta)] = (star.real(beta),) + zeros[: k - 1]
    tops[k - 1] = (star.top,) + zeros[: k - 1]

    for i in range(k - 1, 0, -1):
        width = k - i
        for beta in sets[i - 1]:
            gamma = next((xi for xi in sets[i] if b[beta] <= a[xi]), None)
            if gamma is not None and a[gamma] == b[beta]:
                values[(i - 1, beta)] = values[(i, gamma)]
            elif gamma is not None:
                prefix = star.tuple_pred(values[(i, gamma)][:width])
                values[(i - 1, beta)] = prefix + (star.real(beta),) + zeros[: k - width - 1]
            else:
                prefix = tops[i][:width]
                values[(i - 1, beta)] = prefix + (star.real(beta),) + zeros[: k - width - 1]
        tops[i - 1] = tops[i][:width] + (star.top,) + zeros[: k - width - 1]

    maps = LevelMaps(
        k,
        star,
        sets,
        values,
        tuple(tops),
        {beta: lv for lv, group in enumerate(sets) for beta in group},
    )
    _verify_level_maps(a, b, maps)
    return maps


def _verify_level_maps(a: Sequence[int], b: Sequence[int], maps: LevelMaps) -> None:
    for i in range(maps.k):
        chain = [maps.values[(i, beta)] for beta in maps.sets[i]] + [maps.tops[i]]
        for x, y in zip(chain, chain[1:]):
            if not x < y:
                raise EmbeddingError(f"level {i} digits not strictly increasing: {x} !< {y}")
    for i in range(1, maps.k):
        for b1 in maps.sets[i]:
            for b2 in maps.sets[i - 1]:
                left, right = a[b1], b[b2]
                lo, hi = maps.values[(i, b1)], maps.values[(i - 1, b2)]
                same = (left == right) == (lo == hi)
                order = (left < right) == (lo < hi)
                if not (same and order):
                    raise EmbeddingError(
                        f"cross-level mismatch at i={i}, indices ({b1},{b2}): "
                        f"values ({left},{right}) vs digits ({lo},{hi})"
                    )


@dataclass(frozen=True)
class EmbeddingMap:
    """Vertex images of a shift graph inside a lex frame, realizing a pattern."""

    source: FiniteGraph | FiniteDigraph
    frame: LexFrame
    images: tuple[IncreasingTuple, ...]
    pattern: OrderTypePattern

    def image_of(self, vertex_index: int) -> IncreasingTuple:
        return self.images[vertex_index]

    def to_json(self) -> dict:
        return {
            "frame": list(self.frame.radices),
            "pattern": self.pattern.to_json(),
            "source": self.source.to_json(),
            "images": [
                {
                    "digits": [list(self.frame.decode(v)) for v in img],
                    "values": list(img),
                }
                for img in self.images
            ],
            "verified": True,
        }

    @classmethod
    def from_json(cls, data: dict) -> "EmbeddingMap":
        from .graphs import graph_from_json

        frame = LexFrame(tuple(data["frame"]))
        source = graph_from_json(data["source"])
        images = tuple(
            IncreasingTuple(entry["values"], max_len=len(entry["values"]), max_value=frame.size - 1)
            for entry in data["images"]
        )
        return cls(source, frame, images, OrderTypePattern.from_json(data["pattern"]))


def verify_embedding(emb: EmbeddingMap, pattern: OrderTypePattern | None = None) -> bool:
    """Check every edge or arc of the source realizes the pattern through the images.

    Arcs must realize it in arc direction; undirected edges in at least one
    direction.
    """
    if pattern is None:
        pattern = emb.pattern
    if len(emb.images) != emb.source.n:
        return False
    if isinstance(emb.source, FiniteDigraph):
        return all(otp(emb.images[u], emb.images[v]) == pattern for u, v in emb.source.arcs)
    return all(
        otp(emb.images[u], emb.images[v]) == pattern or otp(emb.images[v], emb.images[u]) == pattern
        for u, v in emb.source.edges
    )


def lemma_embedding(
    a: Sequence[int], b: Sequence[int], k: int, blocks: Sequence[Block], n: int
) -> EmbeddingMap:
    """Embed the directed k-shift graph on n letters so every arc realizes otp(a, b).

    Requires blocks certifying the pair as k-orderly. Each image coordinate
    packs the block-level letter of the source vertex with that coordinate's
    star digits into one lex frame value.
    """
    if n <= k:
        raise EmbeddingError("need more letters than the shift order")
    maps = build_level_maps(a, b, k, blocks)
    pattern = otp(a, b)
    frame = LexFrame((n,) + (maps.star.size,) * k)
    source = lshift_digraph(k, n)
    images = []
    for eta in source.vertices:
        coords = []
        for beta in range(len(a)):
            lv = maps.level_of(beta)
            coords.append(frame.encode((eta[lv],) + maps.digits(beta)))
        images.append(IncreasingTuple(coords, max_len=len(a), max_value=frame.size - 1))
    emb = EmbeddingMap(source, frame, tuple(images), pattern)
    if not verify_embedding(emb, pattern):
        raise EmbeddingError("constructed images fail the arc pattern check")
    return emb


def cover_embedding(a: Sequence[int], b: Sequence[int], w: CoverWitness, n: int) -> EmbeddingMap:
    """Embed the undirected w.k-shift graph on n letters so every edge realizes otp(a, b).

    Each cover piece contributes a band of image coordinates: forward pieces
    read the vertex letters directly, swapped pieces read them reversed and
    complemented, equal pieces pin a constant. Requires n > w.k.
    """
    if not verify_cover(a, b, w):
        raise EmbeddingError("cover witness does not verify")
    k = w.k
    if n <= k:
        raise EmbeddingError("need more letters than the shift order")
    pattern = otp(a, b)
    star_size = 2 * len(a) + 1
    frame = LexFrame((len(a), n) + (star_size,) * k)
    source = shift_graph(k, n)

    piece_maps = []
    for p in w.pieces:
        sub_a = tuple(a[i] for i in p.indices)
        sub_b = tuple(b[i] for i in p.indices)
        if p.kind == "equal":
            piece_maps.append(None)
        elif p.kind == "A":
            piece_maps.append(build_level_maps(sub_a, sub_b, p.k, p.blocks))
        else:
            piece_maps.append(build_level_maps(sub_b, sub_a, p.k, p.blocks))

    pad = (0,) * k
    images = []
    for eta in source.vertices:
        coords = []
        for pi, p in enumerate(w.pieces):
            maps = piece_maps[pi]
            if maps is None:
                coords.append(frame.encode((pi, 0) + pad))
                continue
            if p.kind == "A":
                letters = eta[: p.k]
            else:
                letters = tuple(n - 1 - x for x in reversed(eta[: p.k]))
            for local in range(p.hi - p.lo + 1):
                lv = maps.level_of(local)
                digits = maps.digits(local) + pad[: k - p.k]
                coords.append(frame.encode((pi, letters[lv]) + digits))
        images.append(IncreasingTuple(coords, max_len=len(a), max_value=frame.size - 1))
    emb = EmbeddingMap(source, frame, tuple(images), pattern)
    if not verify_embedding(emb, pattern):
        raise EmbeddingError("constructed images fail the edge pattern check")
    return emb
