import json
import math
import random

import numpy as np
import pytest
import scipy.stats

from helpers import iri, random_store, sample_pair
from kgrel import (
    BenchmarkReport,
    DatasetError,
    GoldenPair,
    Params,
    ResolvedPair,
    UndefinedCorrelationError,
    clean,
    gold_vector,
    load_dataset,
    load_mapping,
    pearson,
    relatedness,
    report_json,
    report_tsv,
    resolve,
    run_benchmark,
    spearman,
)
from kgrel.bench import REPORT_COLUMNS
from kgrel.store import RDF_TYPE
from oracles import naive_paths, store_triples


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return p


# ----------------------------------------------------------------------
# loading

def test_load_dataset_scores(tmp_path):
    p = write(tmp_path, "d.tsv",
              "term1\tterm2\tscore\n"
              "cat\tdog\t7.5\n"
              "\n"
              "cat\tmouse\t3.0\n")
    pairs = load_dataset(p)
    assert pairs == [GoldenPair("cat", "dog", human_score=7.5),
                     GoldenPair("cat", "mouse", human_score=3.0)]


def test_load_dataset_ranks(tmp_path):
    p = write(tmp_path, "d.tsv",
              "term1\tterm2\tRank\n"
              "a\tb\t1\n"
              "c\td\t2\n")
    pairs = load_dataset(p)
    assert pairs[0].rank == 1 and pairs[0].human_score is None
    assert pairs[1].rank == 2


def test_load_dataset_failures(tmp_path):
    assert load_dataset(write(tmp_path, "empty.tsv", "\n\n")) == []
    with pytest.raises(DatasetError, match="3 columns"):
        load_dataset(write(tmp_path, "h2.tsv", "term1\tterm2\n"))
    with pytest.raises(DatasetError, match="score or rank"):
        load_dataset(write(tmp_path, "hk.tsv", "term1\tterm2\tpoints\n"))
    with pytest.raises(DatasetError, match="row 4"):
        load_dataset(write(tmp_path, "short.tsv",
                           "term1\tterm2\tscore\n"
                           "a\tb\t1.0\n"
                           "\n"
                           "c\td\n"))
    with pytest.raises(DatasetError, match="empty term"):
        load_dataset(write(tmp_path, "blank.tsv",
                           "term1\tterm2\tscore\n\t b\t1.0\n"))
    with pytest.raises(DatasetError, match="bad score"):
        load_dataset(write(tmp_path, "badf.tsv",
                           "term1\tterm2\tscore\na\tb\thigh\n"))
    with pytest.raises(DatasetError, match="bad rank"):
        load_dataset(write(tmp_path, "badr.tsv",
                           "term1\tterm2\trank\na\tb\t1.5\n"))


def test_golden_pair_requires_gold():
    with pytest.raises(ValueError):
        GoldenPair("a", "b")


def test_load_mapping(tmp_path):
    p = write(tmp_path, "m.tsv",
              "# comment\n"
              "cat\thttp://x/cat\n"
              "\n"
              "dog\thttp://x/dog\n")
    assert load_mapping(p) == {"cat": "http://x/cat", "dog": "http://x/dog"}
    with pytest.raises(DatasetError, match="row 1"):
        load_mapping(write(tmp_path, "bad.tsv", "cat http://x/cat\n"))


def test_gold_vector():
    scored = [GoldenPair("a", "b", human_score=2.0),
              GoldenPair("c", "d", human_score=5.0)]
    v, has_scores = gold_vector(scored)
    assert has_scores and v.tolist() == [2.0, 5.0]
    ranked = [GoldenPair("a", "b", rank=3),
              GoldenPair("c", "d", rank=1),
              GoldenPair("e", "f", rank=2)]
    v, has_scores = gold_vector(ranked)
    assert not has_scores and v.tolist() == [0.0, 2.0, 1.0]
    v, _ = gold_vector(ranked[:2], total=10)
    assert v.tolist() == [7.0, 9.0]
    v, has_scores = gold_vector([])
    assert has_scores and len(v) == 0


# ----------------------------------------------------------------------
# resolution and filtering

def test_resolve_reasons(fx):
    mapping = {"alpha": iri("ra"), "beta": iri("rb"), "ghost": iri("nope")}
    pairs = [
        GoldenPair("alpha", "beta", human_score=1.0),          # both mapped
        GoldenPair("alpha", iri("r3"), human_score=1.0),       # raw IRI
        GoldenPair("alpha", "unknown", human_score=1.0),       # no entry
        GoldenPair("ghost", "beta", human_score=1.0),          # dead entry
    ]
    resolved, unresolved = resolve(fx, pairs, mapping)
    assert [(rp.a, rp.b) for rp in resolved] == \
        [(fx.handle(iri("ra")), fx.handle(iri("rb"))),
         (fx.handle(iri("ra")), fx.handle(iri("r3")))]
    assert [(u.term, u.reason) for u in unresolved] == \
        [("unknown", "no-mapping"), ("ghost", "not-in-graph")]
    assert len(resolved) + len(unresolved) == len(pairs)


def test_resolve_without_mapping(fx):
    pairs = [GoldenPair(iri("ra"), iri("rb"), human_score=1.0)]
    resolved, unresolved = resolve(fx, pairs)
    assert len(resolved) == 1 and not unresolved


def test_clean_fixture(fx, h):
    def rp(a, b):
        return ResolvedPair(GoldenPair(iri(a), iri(b), human_score=0.0),
                            h[a], h[b])
    rows = [rp("ra", "rb"), rp("r2", "r5"), rp("ra", "ra")]
    kept = clean(fx, rows)
    assert kept == [rows[0], rows[2]]
    assert clean(fx, kept) == kept


def test_clean_agrees_with_path_search():
    rng = random.Random(101)
    for _ in range(10):
        store = random_store(rng)
        flat = store_triples(store)
        rows = []
        for _ in range(6):
            a, b = sample_pair(rng, store)
            rows.append(ResolvedPair(
                GoldenPair(store.iri(a), store.iri(b), human_score=0.0), a, b))
        want = [rp for rp in rows
                if rp.a == rp.b or naive_paths(flat, rp.a, rp.b,
                                               "undirected", "at_most", 2)]
        assert clean(store, rows) == want


# ----------------------------------------------------------------------
# correlation

def test_correlation_pins():
    assert pearson([1, 2, 3], [10, 20, 30]) == pytest.approx(1.0, abs=1e-15)
    assert pearson([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0, abs=1e-15)
    assert spearman([1, 2, 3], [1, 4, 9]) == pytest.approx(1.0, abs=1e-15)
    assert spearman([1, 2, 3], [9, 4, 1]) == pytest.approx(-1.0, abs=1e-15)
    # ties: ranks of x are [1, 2.5, 2.5, 4], of y [1, 3, 2, 4]
    assert spearman([1, 2, 2, 4], [1, 3, 2, 4]) == pytest.approx(
        3 / math.sqrt(10), abs=1e-12)


def test_correlation_matches_scipy():
    rng = np.random.default_rng(7)
    for trial in range(50):
        n = int(rng.integers(3, 30))
        x = rng.normal(size=n)
        y = rng.normal(size=n)
        if trial % 2:  # force heavy ties half the time
            x = np.round(x)
            y = np.round(y)
            if len(set(x)) < 2 or len(set(y)) < 2:
                continue
        assert pearson(x, y) == pytest.approx(
            scipy.stats.pearsonr(x, y)[0], abs=1e-12)
        assert spearman(x, y) == pytest.approx(
            scipy.stats.spearmanr(x, y)[0], abs=1e-12)


def test_correlation_undefined():
    with pytest.raises(UndefinedCorrelationError, match="equal-length"):
        pearson([1, 2], [1, 2, 3])
    with pytest.raises(UndefinedCorrelationError, match="at least 2"):
        spearman([1], [2])
    with pytest.raises(UndefinedCorrelationError, match="zero variance"):
        pearson([1, 1, 1], [1, 2, 3])
    with pytest.raises(UndefinedCorrelationError):
        spearman([5, 5, 5], [1, 2, 3])


def test_correlation_invariances():
    rng = np.random.default_rng(11)
    for _ in range(25):
        n = int(rng.integers(4, 20))
        x = rng.normal(size=n)
        y = rng.normal(size=n)
        assert pearson(3.5 * x + 2.0, y) == pytest.approx(
            pearson(x, y), abs=1e-9)
        assert spearman(np.exp(x / 4), y) == pytest.approx(
            spearman(x, y), abs=1e-12)


# ----------------------------------------------------------------------
# the run

def planted_pairs(fx, h, method):
    out = []
    for a, b in (("ra", "rb"), ("ra", "r3"), ("rb", "r4"),
                 ("ra", "r9"), ("rb", "r7")):
        v = relatedness(fx, method, h[a], h[b])
        out.append(GoldenPair(iri(a), iri(b), human_score=v))
    return out


def test_run_benchmark_planted_gold(fx, h):
    pairs = planted_pairs(fx, h, "exclm")
    (report,) = run_benchmark(fx, ["exclm"], pairs, dataset_name="planted")
    assert report.dataset == "planted"
    assert report.method == "exclm"
    assert report.n == 5
    assert report.excluded == 0
    assert report.unresolved == 0
    assert report.filtered == 0
    assert report.spearman == pytest.approx(1.0, abs=1e-12)
    assert report.pearson == pytest.approx(1.0, abs=1e-12)
    assert report.seconds >= 0.0
    assert report.scores == tuple(p.human_score for p in pairs)


def test_run_benchmark_excludes_failing_pairs(fx):
    params = Params(weights="user_table", weight_table={RDF_TYPE: 1.0})
    # r2's only link is its typing triple, so both (ra, r2) orders see just
    # that one path; (ra, rb) hits the untabled p2 and must be dropped
    pairs = [
        GoldenPair(iri("ra"), iri("r2"), human_score=3.0),
        GoldenPair(iri("ra"), iri("rb"), human_score=2.0),
        GoldenPair(iri("r2"), iri("ra"), human_score=1.0),
    ]
    (report,) = run_benchmark(fx, ["proxm"], pairs, params=params)
    assert report.excluded == 1
    assert report.scores[1] is None
    assert report.scores[0] is not None and report.scores[2] is not None
    assert report.n == 2
    # both surviving scores are equal, so ranks are constant
    assert report.spearman is None and report.pearson is None


def test_run_benchmark_rank_gold(fx, h):
    order = sorted(
        (relatedness(fx, "exclm", h[a], h[b]), a, b)
        for a, b in (("ra", "rb"), ("ra", "r3"), ("rb", "r4")))
    pairs = [GoldenPair(iri(a), iri(b), rank=len(order) - i)
             for i, (_, a, b) in enumerate(order)]
    (report,) = run_benchmark(fx, ["exclm"], pairs)
    assert report.pearson is None          # rank gold has no score scale
    assert report.spearman == pytest.approx(1.0, abs=1e-12)


def test_run_benchmark_small_and_unresolved(fx):
    (report,) = run_benchmark(fx, ["wlm"],
                              [GoldenPair(iri("ra"), iri("rb"),
                                          human_score=1.0),
                               GoldenPair("missing", iri("rb"),
                                          human_score=2.0)])
    assert report.unresolved == 1
    assert report.n == 1
    assert report.spearman is None and report.pearson is None
    empty = run_benchmark(fx, ["wlm"], [])
    assert empty[0].n == 0 and empty[0].spearman is None


def test_run_benchmark_clean_filter(fx):
    pairs = [GoldenPair(iri("ra"), iri("rb"), human_score=2.0),
             GoldenPair(iri("r2"), iri("r5"), human_score=1.0)]
    (report,) = run_benchmark(fx, ["lod-overlap"], pairs, clean_pairs=True)
    assert report.filtered == 1
    assert report.n == 1
    (raw,) = run_benchmark(fx, ["lod-overlap"], pairs, clean_pairs=False)
    assert raw.filtered == 0 and raw.n == 2


def test_run_benchmark_emits_one_report_per_method(fx):
    pairs = [GoldenPair(iri("ra"), iri("rb"), human_score=1.0),
             GoldenPair(iri("ra"), iri("r3"), human_score=2.0)]
    reports = run_benchmark(fx, ["wlm", "lod-jaccard", "exclm"], pairs)
    assert [r.method for r in reports] == ["wlm", "lod-jaccard", "exclm"]
    assert all(r.n == 2 for r in reports)


# ----------------------------------------------------------------------
# rendering

def test_report_tsv_layout():
    rows = [
        BenchmarkReport("ds", "wlm", (0.5, None), 1, 1 / 3, None, 1, 2, 0, 0.1),
        BenchmarkReport("ds", "exclm", (0.5, 0.25), 2, -1.0, 0.654321987, 0,
                        2, 0, 0.2),
    ]
    text = report_tsv(rows)
    lines = text.splitlines()
    assert lines[0] == "\t".join(REPORT_COLUMNS)
    assert lines[1] == "ds\twlm\t1\t0.333333\t-\t1"
    assert lines[2] == "ds\texclm\t2\t-1.000000\t0.654322\t0"
    assert text.endswith("\n")


def test_report_json_round_trip():
    rows = [BenchmarkReport("ds", "wlm", (0.5, None), 1, None, None, 1, 0, 0,
                            0.25)]
    data = json.loads(report_json(rows))
    assert data == [{
        "dataset": "ds", "method": "wlm", "n": 1,
        "spearman": None, "pearson": None, "excluded": 1,
        "unresolved": 0, "filtered": 0, "seconds": 0.25,
        "scores": [0.5, None],
    }]


def test_reports_are_deterministic(fx, h):
    pairs = planted_pairs(fx, h, "wlm")
    first = report_tsv(run_benchmark(fx, ["wlm", "exclm"], pairs))
    second = report_tsv(run_benchmark(fx, ["wlm", "exclm"], pairs))
    assert first == second
