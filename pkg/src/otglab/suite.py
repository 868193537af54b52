"""Seeded self-check battery crossing the fast implementations against brute oracles."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .coloring import (
    chromatic_number,
    product_coloring,
    pullback_coloring,
    sum_coloring,
    verify_coloring,
)
from .decompose import (
    MINUS,
    ZERO,
    CoverWitness,
    analyze_class,
    classes_separated,
    convex_closure,
    is_k_orderly,
    orderly_cover,
    sign_partition,
    verify_cover,
)
from .embedding import EmbeddingMap, cover_embedding, verify_embedding
from .graphs import FiniteGraph
from .oracles import brute_chromatic, closure_oracle, exhaustive_min_k
from .rng import SplitMix64, case_seed, random_pair
from .seqs import LexFrame, otp, remap_monotone

CHECKS = (
    "otp-remap",
    "lex-order",
    "sign-purity",
    "class-separation",
    "block-shift",
    "zeta-chain",
    "closure-confluence",
    "cover-verifies",
    "orderly-oracle",
    "embedding",
    "chi-oracle",
    "coloring-calculus",
)

DECOMP_CHECKS = (
    "sign-purity",
    "class-separation",
    "block-shift",
    "zeta-chain",
    "closure-confluence",
    "cover-verifies",
)


@dataclass(frozen=True)
class SuiteCaps:
    max_len: int = 8
    value_bound: int = 32
    max_shift: int = 5

    def to_json(self) -> dict:
        return {"max_len": self.max_len, "value_bound": self.value_bound, "max_shift": self.max_shift}


def _fail(detail: str) -> tuple[str, str]:
    return "fail", detail


def _ok() -> tuple[str, str]:
    return "pass", ""


def _check_otp_remap(a, b, rng: SplitMix64, caps: SuiteCaps) -> tuple[str, str]:
    pattern = otp(a, b)
    values = sorted(set(a) | set(b))
    image = {}
    cursor = rng.below(7)
    for v in values:
        image[v] = cursor
        cursor += 1 + rng.below(5)
    ra = remap_monotone(a, image.__getitem__)
    rb = remap_monotone(b, image.__getitem__)
    if otp(ra, rb) != pattern:
        return _fail(f"pattern changed under monotone remap of {a},{b}")
    if otp(pattern.ranks_a, pattern.ranks_b) != pattern:
        return _fail(f"rank rows of {pattern} do not realize it")
    return _ok()


def _check_lex_order(a, b, rng: SplitMix64, caps: SuiteCaps) -> tuple[str, str]:
    for _ in range(5):
        radices = tuple(2 + rng.below(5) for _ in range(1 + rng.below(4)))
        frame = LexFrame(radices)
        d1 = tuple(rng.below(r) for r in radices)
        d2 = tuple(rng.below(r) for r in radices)
        v1, v2 = frame.encode(d1), frame.encode(d2)
        if frame.decode(v1) != d1 or frame.decode(v2) != d2:
            return _fail(f"decode round trip broke for {radices}")
        if (d1 < d2) != (v1 < v2) or (d1 == d2) != (v1 == v2):
            return _fail(f"order not preserved for {d1},{d2} under {radices}")
    return _ok()


def _check_sign_purity(a, b, rng: SplitMix64, caps: SuiteCaps) -> tuple[str, str]:
    signs = sign_partition(a, b)
    for cls in convex_closure(a, b):
        kinds = {signs.sign_of(i) for i in cls.indices}
        if kinds != {cls.sign}:
            return _fail(f"class {cls} carries signs {sorted(kinds)}")
        if cls.sign == ZERO and cls.lo != cls.hi:
            return _fail(f"zero class {cls} not a singleton")
    return _ok()


def _check_class_separation(a, b, rng: SplitMix64, caps: SuiteCaps) -> tuple[str, str]:
    classes = convex_closure(a, b)
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            if not classes_separated(a, b, classes[i], classes[j]):
                return _fail(f"classes {classes[i]} and {classes[j]} not separated")
    return _ok()


def _oriented(a, b, cls):
    sub_a = tuple(a[i] for i in cls.indices)
    sub_b = tuple(b[i] for i in cls.indices)
    return (sub_b, sub_a) if cls.sign == MINUS else (sub_a, sub_b)


def _check_block_shift(a, b, rng: SplitMix64, caps: SuiteCaps) -> tuple[str, str]:
    for cls in convex_closure(a, b):
        if cls.sign == ZERO:
            continue
        lo_t, hi_t = _oriented(a, b, cls)
        blocks = analyze_class(a, b, cls).blocks
        merged = sorted(set(lo_t) | set(hi_t))
        for x in merged:
            homes = [m for m, blk in enumerate(blocks) if blk.contains(x)]
            if len(homes) != 1:
                return _fail(f"value {x} sits in blocks {homes} of class {cls}")
        for i in range(len(lo_t)):
            ma = next(m for m, blk in enumerate(blocks) if blk.contains(lo_t[i]))
            mb = next(m for m, blk in enumerate(blocks) if blk.contains(hi_t[i]))
            if mb != ma + 1:
                return _fail(f"index {i} of class {cls} jumps blocks {ma}->{mb}")
        if not blocks[-1].closed or any(blk.closed for blk in blocks[:-1]):
            return _fail(f"closed flags wrong in class {cls}")
    return _ok()


def _check_zeta_chain(a, b, rng: SplitMix64, caps: SuiteCaps) -> tuple[str, str]:
    for cls in convex_closure(a, b):
        if cls.sign == ZERO:
            continue
        lo_t, hi_t = _oriented(a, b, cls)
        analysis = analyze_class(a, b, cls)
        z = [i - cls.lo for i in analysis.zetas]
        d = [i - cls.lo for i in analysis.deltas]
        if len(z) != analysis.depth or len(d) != analysis.depth:
            return _fail(f"ladder lengths disagree in class {cls}")
        if z[0] != d[0]:
            return _fail(f"witness chain does not start at the first rung in {cls}")
        for m in range(len(z) - 1):
            if not lo_t[z[m]] < lo_t[z[m + 1]] <= hi_t[z[m]]:
                return _fail(f"chain link {m} broken in class {cls}")
        for m in range(len(z) - 2):
            if not hi_t[z[m]] < lo_t[z[m + 2]]:
                return _fail(f"chain spacing {m} broken in class {cls}")
    return _ok()


def _check_closure_confluence(a, b, rng: SplitMix64, caps: SuiteCaps) -> tuple[str, str]:
    fast = convex_closure(a, b)
    slow = closure_oracle(a, b)
    if fast != slow:
        return _fail(f"closures disagree: {fast} vs {slow}")
    return _ok()


def _check_cover_verifies(a, b, rng: SplitMix64, caps: SuiteCaps) -> tuple[str, str]:
    w = orderly_cover(a, b)
    if not verify_cover(a, b, w):
        return _fail(f"cover of {a},{b} fails verification")
    if CoverWitness.from_json(w.to_json()) != w:
        return _fail("cover witness does not survive its JSON round trip")
    return _ok()


def _check_orderly_oracle(a, b, rng: SplitMix64, caps: SuiteCaps) -> tuple[str, str]:
    w = orderly_cover(a, b)
    checked = 0
    for p in w.pieces:
        if p.kind == "equal":
            continue
        sub = tuple(a[i] for i in p.indices), tuple(b[i] for i in p.indices)
        lo_t, hi_t = (sub[1], sub[0]) if p.kind == "B" else sub
        merged = len(set(lo_t) | set(hi_t))
        if merged > 12 or p.k > 4:
            continue
        checked += 1
        best = exhaustive_min_k(lo_t, hi_t, p.k + 1)
        if best != p.k:
            return _fail(f"piece {p.lo}..{p.hi}: exhaustive minimum {best} vs depth {p.k}")
        if is_k_orderly(lo_t, hi_t, p.k) is None:
            return _fail(f"piece {p.lo}..{p.hi}: canonical witness missing at its own depth")
        if p.k > 1 and is_k_orderly(lo_t, hi_t, p.k - 1) is not None:
            return _fail(f"piece {p.lo}..{p.hi}: canonical witness below the exhaustive minimum")
    if not checked:
        return "skip", "all pieces above the oracle size cap"
    return _ok()


def _check_embedding(a, b, rng: SplitMix64, caps: SuiteCaps) -> tuple[str, str]:
    w = orderly_cover(a, b)
    n = w.k + 2
    emb = cover_embedding(a, b, w, n)
    if not verify_embedding(emb):
        return _fail(f"embedding of {a},{b} at n={n} fails the edge check")
    again = EmbeddingMap.from_json(emb.to_json())
    if not verify_embedding(again):
        return _fail("embedding does not survive its JSON round trip")
    return _ok()


def _random_graph(rng: SplitMix64) -> FiniteGraph:
    nv = 4 + rng.below(5)
    edges = [(i, j) for i in range(nv) for j in range(i + 1, nv) if rng.bit()]
    return FiniteGraph(list(range(nv)), edges)


def _induced(g: FiniteGraph, subset: Sequence[int]) -> FiniteGraph:
    pos = {v: i for i, v in enumerate(subset)}
    edges = [(pos[i], pos[j]) for i, j in g.edges if i in pos and j in pos]
    return FiniteGraph([g.vertices[v] for v in subset], edges)


def _check_chi_oracle(a, b, rng: SplitMix64, caps: SuiteCaps) -> tuple[str, str]:
    g = _random_graph(rng)
    res = chromatic_number(g)
    if not res.exact:
        return _fail(f"unbudgeted search came back inconclusive on {g.n} vertices")
    truth = brute_chromatic(g)
    if res.chi != truth:
        return _fail(f"chi {res.chi} vs brute force {truth} on {g!r}")
    if not verify_coloring(g, res.witness) or res.witness.palette != res.chi:
        return _fail("witness coloring invalid or off palette")
    return _ok()


def _check_coloring_calculus(a, b, rng: SplitMix64, caps: SuiteCaps) -> tuple[str, str]:
    g = _random_graph(rng)
    left = list(range(0, g.n, 2))
    right = list(range(1, g.n, 2))
    cl = chromatic_number(_induced(g, left)).witness
    cr = chromatic_number(_induced(g, right)).witness
    combined = sum_coloring(g, [(left, cl), (right, cr)])
    if not verify_coloring(g, combined) or combined.palette != cl.palette + cr.palette:
        return _fail("vertex-split coloring broke")

    e1 = g.edges[::2]
    e2 = g.edges[1::2]
    c1 = chromatic_number(FiniteGraph(g.vertices, e1)).witness if g.edges else None
    if g.edges:
        c2 = chromatic_number(FiniteGraph(g.vertices, e2)).witness
        prod_col = product_coloring(g, [(e1, c1), (e2, c2)])
        if not verify_coloring(g, prod_col) or prod_col.palette != c1.palette * c2.palette:
            return _fail("edge-split coloring broke")

    h = FiniteGraph(g.vertices, g.edges[::2])
    base = chromatic_number(g).witness
    pulled = pullback_coloring(list(range(g.n)), h, g, base)
    if not verify_coloring(h, pulled):
        return _fail("pulled-back coloring not proper on the subgraph")
    return _ok()


_CHECK_FNS = {
    "otp-remap": _check_otp_remap,
    "lex-order": _check_lex_order,
    "sign-purity": _check_sign_purity,
    "class-separation": _check_class_separation,
    "block-shift": _check_block_shift,
    "zeta-chain": _check_zeta_chain,
    "closure-confluence": _check_closure_confluence,
    "cover-verifies": _check_cover_verifies,
    "orderly-oracle": _check_orderly_oracle,
    "embedding": _check_embedding,
    "chi-oracle": _check_chi_oracle,
    "coloring-calculus": _check_coloring_calculus,
}


def run_case(stream_seed: int, caps: SuiteCaps, only: Iterable[str] | None = None) -> dict:
    """Run the selected checks on one seeded case.

    Every check gets its own derived stream, so results per check do not
    depend on which other checks were selected.
    """
    pair_rng = SplitMix64(case_seed(stream_seed, 0))
    a, b = random_pair(pair_rng, caps.max_len, caps.value_bound)
    wanted = set(CHECKS if only is None else only)
    unknown = wanted - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    results = {}
    for idx, key in enumerate(CHECKS, start=1):
        if key not in wanted:
            continue
        rng = SplitMix64(case_seed(stream_seed, idx))
        try:
            outcome, detail = _CHECK_FNS[key](a, b, rng, caps)
        except Exception as exc:
            outcome, detail = "fail", f"{type(exc).__name__}: {exc}"
        results[key] = (outcome, detail)
    return {"pair": (a, b), "results": results}


@dataclass
class SuiteReport:
    seed: int
    count: int
    caps: SuiteCaps
    checks: tuple[str, ...]
    tallies: dict
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "cases": self.count,
            "caps": self.caps.to_json(),
            "checks": list(self.checks),
            "tallies": {k: dict(v) for k, v in self.tallies.items()},
            "failures": list(self.failures),
            "ok": self.ok,
        }

    def to_table(self) -> str:
        width = max(len(k) for k in self.checks)
        lines = [f"{'check'.ljust(width)}  pass  fail  skip"]
        for key in self.checks:
            t = self.tallies[key]
            lines.append(f"{key.ljust(width)}  {t['pass']:4d}  {t['fail']:4d}  {t['skip']:4d}")
        lines.append(f"cases: {self.count}  failures: {len(self.failures)}")
        return "\n".join(lines)


def run_suite(
    seed: int,
    count: int,
    caps: SuiteCaps | None = None,
    workers: int = 1,
    only: Iterable[str] | None = None,
) -> SuiteReport:
    """Run count seeded cases; identical arguments give identical reports.

    Cases use independent derived seeds and are aggregated in index order, so
    the worker count never changes the outcome.
    """
    if count < 0:
        raise ValueError("need count >= 0")
    caps = caps or SuiteCaps()
    selected = tuple(k for k in CHECKS if only is None or k in set(only))
    if only is not None and len(selected) != len(set(only)):
        raise ValueError(f"unknown checks: {sorted(set(only) - set(CHECKS))}")
    if not selected:
        raise ValueError("no checks selected")

    def one(i: int) -> dict:
        return run_case(case_seed(seed, i), caps, selected)

    if workers <= 1:
        outcomes = [one(i) for i in range(count)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(one, range(count)))

    tallies = {k: {"pass": 0, "fail": 0, "skip": 0} for k in selected}
    failures = []
    for i, case in enumerate(outcomes):
        for key, (outcome, detail) in case["results"].items():
            tallies[key][outcome] += 1
            if outcome == "fail":
                failures.append({"case": i, "check": key, "pair": [list(t) for t in case["pair"]], "detail": detail})
    return SuiteReport(seed, count, caps, selected, tallies, failures)


def embedding_sweep(seed: int, count: int, caps: SuiteCaps | None = None) -> dict:
    """Build and verify cover embeddings for seeded pairs at every in-range letter count.

    Letter counts 3, 4, 5 are attempted whenever they exceed the witness
    depth; the report counts built instances and any failures.
    """
    caps = caps or SuiteCaps()
    instances = 0
    failures = []
    for i in range(count):
        stream_seed = case_seed(seed, i)
        pair_rng = SplitMix64(case_seed(stream_seed, 0))
        a, b = random_pair(pair_rng, caps.max_len, caps.value_bound)
        w = orderly_cover(a, b)
        for n in (3, 4, 5):
            if n <= w.k:
                continue
            instances += 1
            try:
                emb = cover_embedding(a, b, w, n)
                if not verify_embedding(emb):
                    failures.append({"case": i, "n": n, "pair": [list(a), list(b)], "detail": "edge check"})
            except Exception as exc:
                failures.append(
                    {"case": i, "n": n, "pair": [list(a), list(b)], "detail": f"{type(exc).__name__}: {exc}"}
                )
    return {"cases": count, "instances": instances, "failures": failures, "ok": not failures}
