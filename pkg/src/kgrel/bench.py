"""Golden-dataset benchmark harness.

Loads term-pair datasets with human judgments, resolves terms to graph
resources through an optional mapping table, filters to connected pairs
on request, scores every pair with the requested methods on the
higher-is-more-related scale, and correlates against the gold values.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .methods import Params, relatedness, to_relatedness  # noqa: F401
from .paths import enumerate_paths
from .store import TripleStore


class DatasetError(ValueError):
    def __init__(self, source: str, row: int, problem: str):
        super().__init__(f"{source}: row {row}: {problem}")
        self.source = source
        self.row = row


class UndefinedCorrelationError(ValueError):
    def __init__(self, problem: str):
        super().__init__(f"undefined-correlation: {problem}")


@dataclass(frozen=True)
class GoldenPair:
    term1: str
    term2: str
    human_score: Optional[float] = None
    rank: Optional[int] = None

    def __post_init__(self):
        if self.human_score is None and self.rank is None:
            raise ValueError("pair needs a human score or a rank")


@dataclass(frozen=True)
class ResolvedPair:
    pair: GoldenPair
    a: int
    b: int


@dataclass(frozen=True)
class Unresolved:
    pair: GoldenPair
    term: str
    reason: str  # "no-mapping" or "not-in-graph"


@dataclass(frozen=True)
class BenchmarkReport:
    """One dataset/method row plus everything needed to audit it."""
    dataset: str
    method: str
    scores: tuple[Optional[float], ...]
    n: int
    spearman: Optional[float]
    pearson: Optional[float]
    excluded: int
    unresolved: int
    filtered: int
    seconds: float


# ----------------------------------------------------------------------
# loading

def load_dataset(path) -> list[GoldenPair]:
    """Parse a `term1 <TAB> term2 <TAB> score|rank` file, header first.

    The third header cell picks the gold column type.  An entirely empty
    file is an empty dataset; any malformed row is an error naming it.
    """
    source = str(path)
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    rows = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip()]
    if not rows:
        return []
    head_no, head = rows[0]
    cells = head.split("\t")
    if len(cells) != 3:
        raise DatasetError(source, head_no, "header must have 3 columns")
    kind = cells[2].strip().lower()
    if kind not in ("score", "rank"):
        raise DatasetError(source, head_no,
                           f"third column must be score or rank, got {cells[2]!r}")
    pairs = []
    for no, line in rows[1:]:
        cells = line.split("\t")
        if len(cells) != 3:
            raise DatasetError(source, no, "expected 3 tab-separated fields")
        t1, t2 = cells[0].strip(), cells[1].strip()
        if not t1 or not t2:
            raise DatasetError(source, no, "empty term")
        try:
            if kind == "score":
                pairs.append(GoldenPair(t1, t2, human_score=float(cells[2])))
            else:
                pairs.append(GoldenPair(t1, t2, rank=int(cells[2])))
        except ValueError:
            raise DatasetError(source, no,
                               f"bad {kind} value {cells[2]!r}") from None
    return pairs


def load_mapping(path) -> dict[str, str]:
    """Parse a `term <TAB> iri` table; # comments and blanks skipped."""
    source = str(path)
    mapping: dict[str, str] = {}
    for no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cells = line.split("\t")
        if len(cells) != 2 or not cells[0].strip() or not cells[1].strip():
            raise DatasetError(source, no, "expected `term<TAB>iri`")
        mapping[cells[0].strip()] = cells[1].strip()
    return mapping


def gold_vector(pairs: Sequence[GoldenPair],
                total: Optional[int] = None) -> tuple[np.ndarray, bool]:
    """Gold values plus whether they are human scores.

    Rank r becomes (total - r) so that higher still means more related;
    pass the original dataset size as total when pairs were filtered.
    """
    if not pairs:
        return np.empty(0), True
    if pairs[0].human_score is not None:
        return np.array([p.human_score for p in pairs], dtype=float), True
    n = len(pairs) if total is None else total
    return np.array([n - p.rank for p in pairs], dtype=float), False


# ----------------------------------------------------------------------
# resolution and filtering

def resolve(store: TripleStore, pairs: Sequence[GoldenPair],
            mapping: Optional[dict[str, str]] = None,
            ) -> tuple[list[ResolvedPair], list[Unresolved]]:
    """Map both terms of each pair to resource handles.

    A term maps through the table when present, else it is tried as an
    IRI directly.  Pairs with any unmapped term are set aside with the
    failing term and a reason, never dropped silently.
    """
    mapping = mapping or {}
    resolved: list[ResolvedPair] = []
    unresolved: list[Unresolved] = []
    for pair in pairs:
        handles = []
        failure = None
        for term in (pair.term1, pair.term2):
            h = store.handle(mapping.get(term, term))
            if h is None:
                reason = "not-in-graph" if term in mapping else "no-mapping"
                failure = Unresolved(pair, term, reason)
                break
            handles.append(h)
        if failure is not None:
            unresolved.append(failure)
        else:
            resolved.append(ResolvedPair(pair, handles[0], handles[1]))
    return resolved, unresolved


def clean(store: TripleStore,
          resolved: Sequence[ResolvedPair]) -> list[ResolvedPair]:
    """Keep pairs joined by at least one undirected path of length <= 2."""
    kept = []
    for rp in resolved:
        if rp.a == rp.b or enumerate_paths(store, rp.a, rp.b,
                                           "undirected", "at_most", 2):
            kept.append(rp)
    return kept


# ----------------------------------------------------------------------
# correlation

def _average_ranks(x: np.ndarray) -> np.ndarray:
    order = np.argsort(x, kind="stable")
    sx = x[order]
    new_group = np.empty(len(sx), dtype=bool)
    new_group[0] = True
    new_group[1:] = sx[1:] != sx[:-1]
    group = np.cumsum(new_group) - 1
    counts = np.bincount(group)
    ends = np.cumsum(counts)
    mids = ends - (counts - 1) / 2.0  # mean of ranks end-count+1 .. end
    ranks = np.empty(len(sx))
    ranks[order] = mids[group]
    return ranks


def _check(x, y) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.ndim != 1 or y.ndim != 1 or len(x) != len(y):
        raise UndefinedCorrelationError("inputs must be equal-length vectors")
    if len(x) < 2:
        raise UndefinedCorrelationError(f"need at least 2 points, got {len(x)}")
    return x, y


def pearson(x, y) -> float:
    """Product-moment correlation; constant input is an error."""
    x, y = _check(x, y)
    xc = x - x.mean()
    yc = y - y.mean()
    sx = float(np.sqrt(xc @ xc))
    sy = float(np.sqrt(yc @ yc))
    if sx == 0.0 or sy == 0.0:
        raise UndefinedCorrelationError("zero variance")
    return float((xc @ yc) / (sx * sy))


def spearman(x, y) -> float:
    """Rank correlation with average ranks on ties."""
    x, y = _check(x, y)
    return pearson(_average_ranks(x), _average_ranks(y))


# ----------------------------------------------------------------------
# the run

def run_benchmark(store: TripleStore, methods: Sequence[str],
                  pairs: Sequence[GoldenPair],
                  mapping: Optional[dict[str, str]] = None,
                  params: Optional[Params] = None,
                  clean_pairs: bool = False,
                  dataset_name: str = "dataset") -> list[BenchmarkReport]:
    """Score one dataset with every requested method.

    Per-pair method errors become null scores and count as excluded;
    correlations run over the surviving pairs, Pearson only when the
    gold column holds human scores.  An undefined correlation (too few
    pairs, constant vector) is reported as null rather than raised.
    """
    params = params or Params()
    resolved, unresolved = resolve(store, pairs, mapping)
    filtered = 0
    if clean_pairs:
        kept = clean(store, resolved)
        filtered = len(resolved) - len(kept)
        resolved = kept
    gold, has_scores = gold_vector([rp.pair for rp in resolved],
                                   total=len(pairs))
    reports = []
    for method in methods:
        t0 = time.perf_counter()
        scores: list[Optional[float]] = []
        excluded = 0
        for rp in resolved:
            try:
                scores.append(relatedness(store, method, rp.a, rp.b, params))
            except (ValueError, ArithmeticError):
                scores.append(None)
                excluded += 1
        ok = [i for i, v in enumerate(scores) if v is not None]
        xs = np.array([scores[i] for i in ok], dtype=float)
        ys = gold[ok]

        def safe(f) -> Optional[float]:
            try:
                return f(xs, ys)
            except UndefinedCorrelationError:
                return None

        reports.append(BenchmarkReport(
            dataset=dataset_name,
            method=method,
            scores=tuple(scores),
            n=len(ok),
            spearman=safe(spearman),
            pearson=safe(pearson) if has_scores else None,
            excluded=excluded,
            unresolved=len(unresolved),
            filtered=filtered,
            seconds=time.perf_counter() - t0,
        ))
    return reports


# ----------------------------------------------------------------------
# report rendering

REPORT_COLUMNS = ("dataset", "method", "n", "spearman", "pearson", "excluded")


def _cell(v: Optional[float]) -> str:
    return "-" if v is None else f"{v:.6f}"


def report_tsv(reports: Sequence[BenchmarkReport]) -> str:
    lines = ["\t".join(REPORT_COLUMNS)]
    for r in reports:
        lines.append("\t".join((r.dataset, r.method, str(r.n),
                                _cell(r.spearman), _cell(r.pearson),
                                str(r.excluded))))
    return "\n".join(lines) + "\n"


def report_json(reports: Sequence[BenchmarkReport]) -> str:
    rows = [{
        "dataset": r.dataset,
        "method": r.method,
        "n": r.n,
        "spearman": r.spearman,
        "pearson": r.pearson,
        "excluded": r.excluded,
        "unresolved": r.unresolved,
        "filtered": r.filtered,
        "seconds": r.seconds,
        "scores": list(r.scores),
    } for r in reports]
    return json.dumps(rows, indent=2) + "\n"
