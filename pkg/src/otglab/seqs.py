"""Increasing tuples, order-type patterns, and mixed-radix lexicographic encoding."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Callable, Iterable, Iterator

MAX_TUPLE_LEN = 16
MAX_TUPLE_VALUE = 2**32 - 1


class IncreasingTuple(tuple):
    """Nonempty, strictly increasing tuple of bounded naturals.

    Caps default to length 16 and value 2**32 - 1; they keep brute-force
    oracles tractable and keep every mixed-radix encoding overflow-free.
    """

    def __new__(
        cls,
        values: Iterable[int],
        *,
        max_len: int = MAX_TUPLE_LEN,
        max_value: int = MAX_TUPLE_VALUE,
    ) -> "IncreasingTuple":
        vals = tuple(int(v) for v in values)
        if not vals:
            raise ValueError("increasing tuple must be nonempty")
        if len(vals) > max_len:
            raise ValueError(f"tuple length {len(vals)} exceeds cap {max_len}")
        for v in vals:
            if v < 0 or v > max_value:
                raise ValueError(f"value {v} outside [0, {max_value}]")
        for x, y in zip(vals, vals[1:]):
            if x >= y:
                raise ValueError(f"values not strictly increasing: {x} before {y}")
        return super().__new__(cls, vals)

    def to_json(self) -> list[int]:
        return list(self)

    @classmethod
    def from_json(cls, data: Iterable[int]) -> "IncreasingTuple":
        return cls(data)


@dataclass(frozen=True)
class OrderTypePattern:
    """Canonical order type of a pair of increasing tuples.

    ranks_a / ranks_b give each value's rank in the sorted union of both
    images; equal values share a rank, so the pattern is exactly the
    remap-invariant of the pair.
    """

    length: int
    ranks_a: tuple[int, ...]
    ranks_b: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError("pattern length must be >= 1")
        for ranks in (self.ranks_a, self.ranks_b):
            if len(ranks) != self.length:
                raise ValueError("rank sequence length mismatch")
            if any(x >= y for x, y in zip(ranks, ranks[1:])):
                raise ValueError("rank sequence not strictly increasing")
        used = set(self.ranks_a) | set(self.ranks_b)
        if used != set(range(len(used))):
            raise ValueError("ranks must form a contiguous block 0..m-1")

    @property
    def irreflexive(self) -> bool:
        """True when the pattern can appear between two distinct tuples only."""
        return self.ranks_a != self.ranks_b

    def to_json(self) -> dict:
        return {"n": self.length, "ra": list(self.ranks_a), "rb": list(self.ranks_b)}

    @classmethod
    def from_json(cls, data: dict) -> "OrderTypePattern":
        return cls(int(data["n"]), tuple(data["ra"]), tuple(data["rb"]))


def otp(c: Iterable[int], d: Iterable[int]) -> OrderTypePattern:
    """Order type of the pair (c, d): ranks of each entry in the merged value set."""
    cs, ds = tuple(c), tuple(d)
    if len(cs) != len(ds):
        raise ValueError(f"length mismatch: {len(cs)} vs {len(ds)}")
    rank = {v: r for r, v in enumerate(sorted(set(cs) | set(ds)))}
    return OrderTypePattern(len(cs), tuple(rank[v] for v in cs), tuple(rank[v] for v in ds))


def remap_monotone(t: Iterable[int], f: Callable[[int], int]) -> IncreasingTuple:
    """Apply a strictly increasing value map; the result is validated on construction."""
    return IncreasingTuple(f(v) for v in t)


@dataclass(frozen=True)
class LexFrame:
    """Mixed-radix frame, most significant digit first.

    Encoding digit vectors to naturals preserves lexicographic order, which is
    the only property the embedding constructions rely on.
    """

    radices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "radices", tuple(int(r) for r in self.radices))
        if not self.radices:
            raise ValueError("frame needs at least one radix")
        if any(r < 1 for r in self.radices):
            raise ValueError("radices must be >= 1")

    @property
    def size(self) -> int:
        return prod(self.radices)

    def encode(self, digits: Iterable[int]) -> int:
        digs = tuple(digits)
        if len(digs) != len(self.radices):
            raise ValueError(f"expected {len(self.radices)} digits, got {len(digs)}")
        value = 0
        for d, r in zip(digs, self.radices):
            if d < 0 or d >= r:
                raise ValueError(f"digit {d} out of range for radix {r}")
            value = value * r + d
        return value

    def decode(self, value: int) -> tuple[int, ...]:
        if value < 0 or value >= self.size:
            raise ValueError(f"value {value} outside frame of size {self.size}")
        digits = []
        for r in reversed(self.radices):
            digits.append(value % r)
            value //= r
        return tuple(reversed(digits))


def increasing_tuples(length: int, bound: int) -> Iterator[tuple[int, ...]]:
    """All strictly increasing length-tuples over 0..bound-1, in lexicographic order."""
    if length < 1:
        raise ValueError("length must be >= 1")
    return combinations(range(bound), length)
