"""Order-type graph toolkit: shift graphs, pattern graphs, pair decomposition, embeddings."""

from .coloring import (
    ChiResult,
    Coloring,
    PatternUnionResult,
    chromatic_number,
    greedy_clique,
    greedy_coloring,
    pattern_union_chromatic,
    product_coloring,
    pullback_coloring,
    quotient_coloring,
    sum_coloring,
    verify_coloring,
)
from .decompose import (
    Block,
    ClassAnalysis,
    ConvexClass,
    CoverPiece,
    CoverWitness,
    DecompositionError,
    SignPartition,
    analyze_class,
    classes_separated,
    convex_closure,
    decomposition_report,
    exhaustive_k_orderly,
    generator_pairs,
    is_k_orderly,
    orderly_cover,
    sign_partition,
    verify_cover,
)
from .embedding import (
    EmbeddingError,
    EmbeddingMap,
    LevelMaps,
    StarOrder,
    build_level_maps,
    cover_embedding,
    lemma_embedding,
    verify_embedding,
)
from .graphs import (
    FiniteDigraph,
    FiniteGraph,
    SubgraphSearch,
    find_subgraph_embedding,
    graph_from_json,
    is_connected,
    lshift_digraph,
    order_type_graph,
    rshift_digraph,
    shift_graph,
    verify_homomorphism,
    verify_strong_homomorphism,
)
from .rng import SplitMix64, case_seed, mix64, random_pair
from .seqs import (
    IncreasingTuple,
    LexFrame,
    OrderTypePattern,
    increasing_tuples,
    otp,
    remap_monotone,
)
from .suite import CHECKS, DECOMP_CHECKS, SuiteCaps, SuiteReport, embedding_sweep, run_suite

__version__ = "0.1.0"

__all__ = [
    "Block",
    "CHECKS",
    "ChiResult",
    "ClassAnalysis",
    "Coloring",
    "ConvexClass",
    "CoverPiece",
    "CoverWitness",
    "DECOMP_CHECKS",
    "DecompositionError",
    "EmbeddingError",
    "EmbeddingMap",
    "FiniteDigraph",
    "FiniteGraph",
    "IncreasingTuple",
    "LevelMaps",
    "LexFrame",
    "OrderTypePattern",
    "PatternUnionResult",
    "SignPartition",
    "SplitMix64",
    "StarOrder",
    "SubgraphSearch",
    "SuiteCaps",
    "SuiteReport",
    "analyze_class",
    "build_level_maps",
    "case_seed",
    "chromatic_number",
    "classes_separated",
    "convex_closure",
    "cover_embedding",
    "decomposition_report",
    "embedding_sweep",
    "exhaustive_k_orderly",
    "find_subgraph_embedding",
    "generator_pairs",
    "graph_from_json",
    "greedy_clique",
    "greedy_coloring",
    "increasing_tuples",
    "is_connected",
    "is_k_orderly",
    "lemma_embedding",
    "lshift_digraph",
    "mix64",
    "order_type_graph",
    "orderly_cover",
    "otp",
    "pattern_union_chromatic",
    "product_coloring",
    "pullback_coloring",
    "quotient_coloring",
    "random_pair",
    "remap_monotone",
    "rshift_digraph",
    "run_suite",
    "shift_graph",
    "sign_partition",
    "sum_coloring",
    "verify_coloring",
    "verify_cover",
    "verify_embedding",
    "verify_homomorphism",
    "verify_strong_homomorphism",
]
