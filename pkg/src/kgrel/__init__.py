"""Semantic relatedness over RDF knowledge graphs.

An indexed in-memory triple store, a bounded acyclic path engine, ten
families of graph-based relatedness methods behind one registry, and a
benchmark harness correlating method output with human judgments.
"""

from .bench import (
    BenchmarkReport,
    DatasetError,
    GoldenPair,
    ResolvedPair,
    UndefinedCorrelationError,
    Unresolved,
    clean,
    gold_vector,
    load_dataset,
    load_mapping,
    pearson,
    report_json,
    report_tsv,
    resolve,
    run_benchmark,
    spearman,
)
from .methods import (
    ALL_METHODS,
    Params,
    conversion,
    is_method,
    method_names,
    relatedness,
    score,
    to_relatedness,
)
from .paths import DegeneratePairError, enumerate_paths, top_k_paths
from .store import (
    RDF_TYPE,
    IngestError,
    IngestOptions,
    IngestStats,
    NotSealedError,
    Triple,
    TripleStore,
    from_triples,
    ingest,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_METHODS",
    "BenchmarkReport",
    "DatasetError",
    "DegeneratePairError",
    "GoldenPair",
    "IngestError",
    "IngestOptions",
    "IngestStats",
    "NotSealedError",
    "Params",
    "RDF_TYPE",
    "ResolvedPair",
    "Triple",
    "TripleStore",
    "UndefinedCorrelationError",
    "Unresolved",
    "clean",
    "conversion",
    "enumerate_paths",
    "from_triples",
    "gold_vector",
    "ingest",
    "is_method",
    "load_dataset",
    "load_mapping",
    "method_names",
    "pearson",
    "relatedness",
    "report_json",
    "report_tsv",
    "resolve",
    "run_benchmark",
    "score",
    "spearman",
    "to_relatedness",
    "top_k_paths",
]
