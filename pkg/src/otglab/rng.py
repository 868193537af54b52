"""Deterministic 64-bit generator so seeded runs agree across platforms and languages."""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """Finalizer: xor-shift and multiply steps over 64 bits."""
    z &= _MASK
    z ^= z >> 30
    z = z * 0xBF58476D1CE4E5B9 & _MASK
    z ^= z >> 27
    z = z * 0x94D049BB133111EB & _MASK
    z ^= z >> 31
    return z


class SplitMix64:
    """Counter-based generator: state walks by a golden-ratio step, output is mix64."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        return mix64(self.state)

    def below(self, n: int) -> int:
        """Uniform draw in [0, n) by rejection, bias-free."""
        if n < 1:
            raise ValueError("need n >= 1")
        limit = _MASK + 1 - (_MASK + 1) % n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def bit(self) -> int:
        return self.next_u64() >> 63


def case_seed(seed: int, index: int) -> int:
    """Independent per-case stream seed, stable under reordering and worker count."""
    return mix64((seed & _MASK) ^ mix64(index + 1))


def random_pair(rng: SplitMix64, max_len: int, value_bound: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Draw a distinct pair of strictly increasing equal-length tuples.

    Values are drawn in one batch and sorted; consecutive sorted values feed
    each index, with a per-index bit choosing which side gets the smaller one,
    so all three coordinate signs occur. Non-increasing or identical draws are
    rejected and retried.
    """
    if max_len < 1 or value_bound < 2:
        raise ValueError("need max_len >= 1 and value_bound >= 2")
    for _ in range(100000):
        length = 1 + rng.below(min(max_len, value_bound))
        draws = sorted(rng.below(value_bound) for _ in range(2 * length))
        a, b = [], []
        for i in range(length):
            lo, hi = draws[2 * i], draws[2 * i + 1]
            if rng.bit():
                lo, hi = hi, lo
            a.append(lo)
            b.append(hi)
        if any(a[i] >= a[i + 1] for i in range(length - 1)):
            continue
        if any(b[i] >= b[i + 1] for i in range(length - 1)):
            continue
        if a == b:
            continue
        return tuple(a), tuple(b)
    raise RuntimeError("pair sampler exceeded its retry budget")
