"""Structure of an increasing tuple pair: sign partition, convex classes, blocks, covers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Sequence

ZERO = "zero"
PLUS = "plus"
MINUS = "minus"


class DecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class SignPartition:
    zero: tuple[int, ...]
    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def sign_of(self, i: int) -> str:
        if i in self.zero:
            return ZERO
        if i in self.plus:
            return PLUS
        return MINUS

    def to_json(self) -> dict:
        return {"zero": list(self.zero), "plus": list(self.plus), "minus": list(self.minus)}


def _check_pair(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b) or not a:
        raise DecompositionError("need two nonempty tuples of equal length")
    for t in (a, b):
        if any(t[i] >= t[i + 1] for i in range(len(t) - 1)):
            raise DecompositionError("tuples must be strictly increasing")


def sign_partition(a: Sequence[int], b: Sequence[int]) -> SignPartition:
    """Split indices by comparing coordinates: a_i = b_i, a_i < b_i, a_i > b_i."""
    _check_pair(a, b)
    zero, plus, minus = [], [], []
    for i in range(len(a)):
        if a[i] == b[i]:
            zero.append(i)
        elif a[i] < b[i]:
            plus.append(i)
        else:
            minus.append(i)
    return SignPartition(tuple(zero), tuple(plus), tuple(minus))


def generator_pairs(a: Sequence[int], b: Sequence[int]) -> list[tuple[int, int]]:
    """Index pairs that must share a convex class.

    (beta, gamma) qualifies when the coordinates interlock: a_beta == b_gamma,
    or a_beta < a_gamma <= b_beta, or b_beta < b_gamma <= a_beta.
    """
    _check_pair(a, b)
    out = []
    n = len(a)
    for beta in range(n):
        for gamma in range(n):
            if beta == gamma:
                continue
            if a[beta] == b[gamma] or a[beta] < a[gamma] <= b[beta] or b[beta] < b[gamma] <= a[beta]:
                out.append((beta, gamma))
    return out


@dataclass(frozen=True)
class ConvexClass:
    """Maximal run of related indices [lo, hi], all of one sign."""

    lo: int
    hi: int
    sign: str

    @property
    def indices(self) -> range:
        return range(self.lo, self.hi + 1)

    def to_json(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "sign": self.sign}


def convex_closure(a: Sequence[int], b: Sequence[int]) -> list[ConvexClass]:
    """Partition indices into the coarsest convex classes closed under the generators.

    Each generator pair forces its whole index interval into one class;
    overlapping intervals merge. Indices touched by no generator stay
    singletons. Every class comes out sign-pure, and zero classes are
    singletons.
    """
    _check_pair(a, b)
    if tuple(a) == tuple(b):
        raise DecompositionError("pair must differ")
    n = len(a)
    intervals = [[min(p), max(p)] for p in generator_pairs(a, b)]
    merged = True
    while merged:
        merged = False
        for i in range(len(intervals)):
            for j in range(i + 1, len(intervals)):
                lo1, hi1 = intervals[i]
                lo2, hi2 = intervals[j]
                if lo1 <= hi2 and lo2 <= hi1:
                    intervals[i] = [min(lo1, lo2), max(hi1, hi2)]
                    del intervals[j]
                    merged = True
                    break
            if merged:
                break
    intervals.sort()
    signs = sign_partition(a, b)
    classes = []
    pos = 0
    for lo, hi in intervals:
        while pos < lo:
            classes.append(ConvexClass(pos, pos, signs.sign_of(pos)))
            pos += 1
        cls_signs = {signs.sign_of(i) for i in range(lo, hi + 1)}
        if len(cls_signs) != 1:
            raise DecompositionError(f"class [{lo},{hi}] mixes signs {sorted(cls_signs)}")
        sign = cls_signs.pop()
        if sign == ZERO and lo != hi:
            raise DecompositionError(f"zero class [{lo},{hi}] is not a singleton")
        classes.append(ConvexClass(lo, hi, sign))
        pos = hi + 1
    while pos < n:
        classes.append(ConvexClass(pos, pos, signs.sign_of(pos)))
        pos += 1
    return classes


def classes_separated(a: Sequence[int], b: Sequence[int], first: ConvexClass, second: ConvexClass) -> bool:
    """True iff all values of the earlier class lie strictly below all of the later one."""
    fa = [a[i] for i in first.indices]
    fb = [b[i] for i in first.indices]
    sa = [a[i] for i in second.indices]
    sb = [b[i] for i in second.indices]
    return max(fa) < min(sa) and max(fb) < min(sb) and max(fa) < min(sb) and max(fb) < min(sa)


@dataclass(frozen=True)
class Block:
    """Half-open value interval [lo, hi), or closed [lo, hi] for the final block."""

    lo: int
    hi: int
    closed: bool = False

    def contains(self, x: int) -> bool:
        return self.lo <= x <= self.hi if self.closed else self.lo <= x < self.hi

    @property
    def is_empty(self) -> bool:
        return not self.closed and self.lo >= self.hi

    def to_json(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "closed": self.closed}

    @classmethod
    def from_json(cls, data: dict) -> "Block":
        return cls(int(data["lo"]), int(data["hi"]), bool(data["closed"]))


@dataclass(frozen=True)
class ClassAnalysis:
    """Ladder structure of one strictly-plus class (minus classes are analyzed swapped)."""

    cls: ConvexClass
    deltas: tuple[int, ...]
    blocks: tuple[Block, ...]
    zetas: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.deltas)

    def to_json(self) -> dict:
        return {
            "class": self.cls.to_json(),
            "deltas": list(self.deltas),
            "blocks": [blk.to_json() for blk in self.blocks],
            "zetas": list(self.zetas),
        }


def analyze_class(a: Sequence[int], b: Sequence[int], cls: ConvexClass) -> ClassAnalysis:
    """Compute the ladder indices, value blocks, and the witness chain of one class.

    For a minus class the roles of the tuples are swapped first, so the
    analysis is always of a plus-oriented pair and is reported in that
    orientation.
    """
    _check_pair(a, b)
    if cls.sign == ZERO:
        raise DecompositionError("zero classes carry no ladder structure")
    if cls.sign == MINUS:
        a, b = b, a
    idx = list(cls.indices)
    if any(not a[i] < b[i] for i in idx):
        raise DecompositionError("class sign does not match the tuple pair")

    deltas = [idx[0]]
    while True:
        last = deltas[-1]
        nxt = next((i for i in idx if i > last and b[last] <= a[i]), None)
        if nxt is None:
            break
        deltas.append(nxt)
    depth = len(deltas)

    blocks = []
    for m in range(depth):
        if m == 0:
            blocks.append(Block(a[deltas[0]], b[deltas[0]]))
        else:
            blocks.append(Block(b[deltas[m - 1]], b[deltas[m]]))
    top = max(max(a[i] for i in idx), max(b[i] for i in idx))
    blocks.append(Block(b[deltas[-1]], top, closed=True))

    for i in idx:
        ma = next(m for m, blk in enumerate(blocks) if blk.contains(a[i]))
        mb = next(m for m, blk in enumerate(blocks) if blk.contains(b[i]))
        if mb != ma + 1:
            raise DecompositionError(f"index {i}: values fall in blocks {ma},{mb}, not adjacent")

    gammas = []
    for m in range(depth - 1):
        if b[deltas[m]] == a[deltas[m + 1]]:
            gammas.append(deltas[m + 1])
        else:
            eps = next(
                i for i in idx if deltas[m] < i < deltas[m + 1] and b[i] >= a[deltas[m + 1]]
            )
            gammas.append(eps)

    ladder = sorted(set(deltas) | set(gammas))
    zetas = [deltas[0]]
    while len(zetas) < depth:
        prev = zetas[-1]
        cand = [i for i in ladder if a[prev] < a[i] <= b[prev]]
        if not cand:
            raise DecompositionError("witness chain broke before reaching full depth")
        zetas.append(max(cand))

    for m in range(depth - 1):
        if not a[zetas[m + 1]] <= b[zetas[m]]:
            raise DecompositionError("witness chain overlap violated")
    for m in range(depth - 2):
        if not b[zetas[m]] < a[zetas[m + 2]]:
            raise DecompositionError("witness chain spacing violated")

    return ClassAnalysis(cls, tuple(deltas), tuple(blocks), tuple(zetas))


def _merged_values(a: Sequence[int], b: Sequence[int]) -> list[int]:
    return sorted(set(a) | set(b))


def exhaustive_k_orderly(a: Sequence[int], b: Sequence[int], k: int) -> tuple[Block, ...] | None:
    """Search all ways to cut the merged values into k+1 convex blocks.

    Returns blocks witnessing the ladder condition (each a_i one block below
    b_i) or None. Cuts are placed between distinct merged values, so empty
    middle blocks are representable.
    """
    _check_pair(a, b)
    if k < 1:
        raise DecompositionError("need k >= 1")
    values = _merged_values(a, b)
    m = len(values)
    lo, hi = values[0], values[-1]
    for cuts in combinations_with_replacement(range(m + 1), k):
        bounds = [lo] + [values[c] if c < m else hi + 1 for c in cuts] + [hi + 1]
        ok = True
        for i in range(len(a)):
            ba = next(t for t in range(k + 1) if bounds[t] <= a[i] < bounds[t + 1])
            bb = next(t for t in range(k + 1) if bounds[t] <= b[i] < bounds[t + 1])
            if bb != ba + 1:
                ok = False
                break
        if ok:
            blocks = [Block(bounds[t], bounds[t + 1]) for t in range(k)]
            blocks.append(Block(bounds[k], hi, closed=True))
            return tuple(blocks)
    return None


def is_k_orderly(
    a: Sequence[int], b: Sequence[int], k: int, *, max_merged: int = 24
) -> tuple[Block, ...] | None:
    """Blocks witnessing that the pair is k-orderly, or None.

    Pairs whose convex closure is a single plus class have a canonical answer:
    the minimal k equals the ladder depth, and larger k pad empty top blocks.
    Everything else falls back to exhaustive cut search, capped at max_merged
    distinct values.
    """
    _check_pair(a, b)
    if k < 1:
        raise DecompositionError("need k >= 1")
    if tuple(a) == tuple(b):
        return None
    classes = convex_closure(a, b)
    if len(classes) == 1 and classes[0].sign == PLUS:
        analysis = analyze_class(a, b, classes[0])
        if k < analysis.depth:
            return None
        blocks = list(analysis.blocks)
        if k > analysis.depth:
            last = blocks.pop()
            blocks.append(Block(last.lo, last.hi + 1))
            blocks.extend(Block(last.hi + 1, last.hi + 1) for _ in range(k - analysis.depth - 1))
            blocks.append(Block(last.hi + 1, last.hi, closed=True))
        return tuple(blocks)
    if len(_merged_values(a, b)) > max_merged:
        raise DecompositionError("pair too large for exhaustive orderliness search")
    return exhaustive_k_orderly(a, b, k)


@dataclass(frozen=True)
class CoverPiece:
    """One convex index range of a cover with its certified kind.

    kind "A": the restricted pair itself is k-orderly; kind "B": the swapped
    restriction is; kind "equal": singleton with equal coordinates (k == 0,
    no blocks).
    """

    lo: int
    hi: int
    kind: str
    k: int
    blocks: tuple[Block, ...]

    @property
    def indices(self) -> range:
        return range(self.lo, self.hi + 1)

    def to_json(self) -> dict:
        return {
            "lo": self.lo,
            "hi": self.hi,
            "kind": self.kind,
            "k": self.k,
            "blocks": [blk.to_json() for blk in self.blocks],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CoverPiece":
        return cls(
            int(data["lo"]),
            int(data["hi"]),
            str(data["kind"]),
            int(data["k"]),
            tuple(Block.from_json(blk) for blk in data["blocks"]),
        )


@dataclass(frozen=True)
class CoverWitness:
    pieces: tuple[CoverPiece, ...]
    k: int

    def to_json(self) -> dict:
        return {"k": self.k, "pieces": [p.to_json() for p in self.pieces]}

    @classmethod
    def from_json(cls, data: dict) -> "CoverWitness":
        return cls(tuple(CoverPiece.from_json(p) for p in data["pieces"]), int(data["k"]))


def orderly_cover(a: Sequence[int], b: Sequence[int]) -> CoverWitness:
    """Cover the index set by the convex classes, certifying each one.

    Plus classes are orderly at their ladder depth, minus classes at the depth
    of the swapped pair, equal singletons need no blocks. The witness k is the
    maximum piece depth, at least 1.
    """
    _check_pair(a, b)
    if tuple(a) == tuple(b):
        raise DecompositionError("identical tuples have no proper cover")
    pieces = []
    for cls in convex_closure(a, b):
        sub_a = tuple(a[i] for i in cls.indices)
        sub_b = tuple(b[i] for i in cls.indices)
        if cls.sign == ZERO:
            pieces.append(CoverPiece(cls.lo, cls.hi, "equal", 0, ()))
            continue
        if cls.sign == PLUS:
            analysis = analyze_class(a, b, cls)
            blocks = is_k_orderly(sub_a, sub_b, analysis.depth)
            kind = "A"
        else:
            analysis = analyze_class(a, b, cls)
            blocks = is_k_orderly(sub_b, sub_a, analysis.depth)
            kind = "B"
        if blocks is None:
            raise DecompositionError("class failed its own depth certificate")
        pieces.append(CoverPiece(cls.lo, cls.hi, kind, analysis.depth, blocks))
    k = max((p.k for p in pieces), default=0)
    return CoverWitness(tuple(pieces), max(k, 1))


def verify_cover(a: Sequence[int], b: Sequence[int], w: CoverWitness) -> bool:
    """Check a cover witness from scratch.

    Pieces must tile the index range in order; each piece's declared kind must
    hold (orderly blocks for A, swapped-orderly for B, coordinate equality for
    equal); blocks must tile the piece's merged values with the one-step shift
    condition; distinct pieces must be value-separated both ways; and w.k must
    be the (floored at 1) max piece depth.
    """
    try:
        _check_pair(a, b)
    except DecompositionError:
        return False
    if tuple(a) == tuple(b):
        return False
    n = len(a)
    pos = 0
    for p in w.pieces:
        if p.lo != pos or p.hi < p.lo or p.hi >= n:
            return False
        pos = p.hi + 1
    if pos != n:
        return False

    for p in w.pieces:
        sub_a = tuple(a[i] for i in p.indices)
        sub_b = tuple(b[i] for i in p.indices)
        if p.kind == "equal":
            if p.lo != p.hi or a[p.lo] != b[p.lo] or p.k != 0 or p.blocks:
                return False
            continue
        if p.kind == "A":
            lo_t, hi_t = sub_a, sub_b
        elif p.kind == "B":
            lo_t, hi_t = sub_b, sub_a
        else:
            return False
        if p.k < 1 or len(p.blocks) != p.k + 1:
            return False
        values = _merged_values(lo_t, hi_t)
        for x in values:
            homes = [m for m, blk in enumerate(p.blocks) if blk.contains(x)]
            if len(homes) != 1:
                return False
        prev_hi = None
        for m, blk in enumerate(p.blocks):
            if prev_hi is not None and blk.lo != prev_hi:
                return False
            closed = m == p.k
            if blk.closed != closed:
                return False
            prev_hi = blk.hi
        for i in range(len(lo_t)):
            ma = next(m for m, blk in enumerate(p.blocks) if blk.contains(lo_t[i]))
            mb = next(m for m, blk in enumerate(p.blocks) if blk.contains(hi_t[i]))
            if mb != ma + 1:
                return False

    for pi in range(len(w.pieces)):
        for pj in range(pi + 1, len(w.pieces)):
            first, second = w.pieces[pi], w.pieces[pj]
            fc = ConvexClass(first.lo, first.hi, PLUS)
            sc = ConvexClass(second.lo, second.hi, PLUS)
            if not classes_separated(a, b, fc, sc):
                return False

    expected = max(max((p.k for p in w.pieces), default=0), 1)
    return w.k == expected


def decomposition_report(a: Sequence[int], b: Sequence[int]) -> dict:
    """Full JSON-ready analysis of a pair: signs, classes, ladders, cover."""
    _check_pair(a, b)
    signs = sign_partition(a, b)
    classes = convex_closure(a, b)
    analyses = [
        analyze_class(a, b, cls).to_json() for cls in classes if cls.sign != ZERO
    ]
    cover = orderly_cover(a, b)
    if not verify_cover(a, b, cover):
        raise DecompositionError("internal cover failed verification")
    return {
        "a": list(a),
        "b": list(b),
        "signs": signs.to_json(),
        "classes": [cls.to_json() for cls in classes],
        "analyses": analyses,
        "cover": cover.to_json(),
    }
