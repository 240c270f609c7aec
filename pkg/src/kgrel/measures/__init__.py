from .adjacent import in_link_sets, lod_jaccard, lod_overlap, wlm_distance
from .patterns import (
    GlobalPatternCounts,
    PatternCounts,
    global_pattern_counts,
    ldsd,
    ldsdgn,
    pattern_counts,
    pldsd,
)
from .weights import (
    IsolatedResourceError,
    UnweightedPredicateError,
    asrmp,
    excl_path_weight,
    excl_relatedness,
    exclusivity,
    hamacher_snorm,
    hamacher_tnorm,
    ic_triple_weight,
    icm,
    information_content,
    max_triple_weight,
    path_informativeness,
    pf_itf,
    proximity,
    psi,
    relatedness_space,
    reword,
    snorm_fold,
    tnorm_fold,
    wsrm,
)

__all__ = [
    "in_link_sets", "wlm_distance", "lod_overlap", "lod_jaccard",
    "PatternCounts", "GlobalPatternCounts", "pattern_counts",
    "global_pattern_counts", "ldsd", "ldsdgn", "pldsd",
    "IsolatedResourceError", "UnweightedPredicateError",
    "information_content", "ic_triple_weight", "max_triple_weight", "icm",
    "pf_itf", "path_informativeness", "relatedness_space", "reword",
    "exclusivity", "excl_path_weight", "excl_relatedness", "wsrm",
    "hamacher_tnorm", "hamacher_snorm", "tnorm_fold", "snorm_fold",
    "asrmp", "psi", "proximity",
]
