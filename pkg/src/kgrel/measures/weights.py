"""Triple-weight measures: information-content paths, informativeness
spaces, exclusivity paths, fuzzy-aggregated direct-link chains, and the
outdegree-damped proximity sum.

Probabilities are triple-count ratios over the sealed store; wherever a
probability feeds a logarithm the base defaults to 10 and is a knob.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Optional

from ..paths import Path, enumerate_paths, top_k_paths
from ..store import Triple, TripleStore

EPS = 1e-9


class IsolatedResourceError(ValueError):
    def __init__(self, r: int):
        super().__init__(f"isolated-resource: handle {r} appears in no triple")


class UnweightedPredicateError(ValueError):
    def __init__(self, iri: str):
        super().__init__(f"unweighted-predicate: no weight for {iri}")


def _log(x: float, base: float) -> float:
    return math.log(x) / math.log(base)


def information_content(prob: float, base: float = 10.0) -> float:
    """Negative log-probability; rarer events carry more information."""
    if not 0.0 < prob <= 1.0:
        raise ValueError(f"probability out of (0, 1]: {prob}")
    return -_log(prob, base)


# ----------------------------------------------------------------------
# information-content triple weights

IC_KINDS = ("joint_ic", "comb_ic", "ic_pmi")


def ic_triple_weight(store: TripleStore, kind: str, t: Triple,
                     base: float = 10.0) -> float:
    """Weight of a stored triple under one of the three IC strategies."""
    if kind not in IC_KINDS:
        raise ValueError(f"unknown weighting {kind!r}")
    if not store.has_triple(*t):
        raise ValueError(f"triple {t} not in store, probabilities undefined")
    g = store.triple_count
    n_p = store.predicate_count(t.p)
    ic_p = information_content(n_p / g, base)
    if kind == "joint_ic":
        n_po = store.count_po(t.p, t.o)
        return ic_p + information_content(n_po / n_p, base)
    n_o = store.count_o(t.o)
    if kind == "comb_ic":
        return ic_p + information_content(n_o / g, base)
    # ic_pmi; the joint count is >= 1 because t is a stored triple
    n_po = store.count_po(t.p, t.o)
    pmi = _log((n_po / g) / ((n_p / g) * (n_o / g)), base)
    return ic_p + pmi


def max_triple_weight(store: TripleStore, kind: str, base: float = 10.0) -> float:
    """Largest triple weight in the graph under the chosen strategy."""
    best = None
    for t in store.iter_triples():
        w = ic_triple_weight(store, kind, t, base)
        if best is None or w > best:
            best = w
    if best is None:
        raise ValueError("empty store has no triple weights")
    return best


def icm(store: TripleStore, a: int, b: int, h: int = 2,
        kind: str = "comb_ic", base: float = 10.0,
        w_max: Optional[float] = None) -> float:
    """Inverse of the cheapest undirected path cost, where each triple
    costs its weight deficit against the graph maximum.

    Identity is 1 by convention; an unreachable pair is 0; a zero-cost
    path (all triples at maximum weight) saturates at 1/EPS.
    """
    if a == b:
        return 1.0
    paths = enumerate_paths(store, a, b, "undirected", "at_most", h)
    if not paths:
        return 0.0
    if w_max is None:
        w_max = max_triple_weight(store, kind, base)
    best = None
    for path in paths:
        cost = sum(w_max - ic_triple_weight(store, kind, t, base)
                   for t in path.triples())
        if best is None or cost < best:
            best = cost
    return 1.0 / max(best, EPS)


# ----------------------------------------------------------------------
# informativeness (predicate frequency against triple frequency)

def pf_itf(store: TripleStore, r: int, p: int, direction: str,
           base: float = 10.0) -> float:
    """Informativeness of predicate p at resource r, incoming or outgoing."""
    if direction not in ("in", "out"):
        raise ValueError(f"unknown direction {direction!r}")
    total = store.degree(r, "both")
    if total == 0:
        raise IsolatedResourceError(r)
    n = store.count_po(p, r) if direction == "in" else store.count_sp(r, p)
    if n == 0:
        return 0.0
    itf = _log(store.triple_count / store.predicate_count(p), base)
    return (n / total) * itf


def triple_informativeness(store: TripleStore, t: Triple,
                           base: float = 10.0) -> float:
    """Mean of the subject-side outgoing and object-side incoming
    informativeness of the triple's predicate."""
    return (pf_itf(store, t.s, t.p, "out", base)
            + pf_itf(store, t.o, t.p, "in", base)) / 2.0


def path_informativeness(store: TripleStore, path: Path,
                         base: float = 10.0) -> float:
    """Mean informativeness of the path's triples (stored orientation)."""
    if path.length == 0:
        raise ValueError("empty path has no informativeness")
    return sum(triple_informativeness(store, t, base)
               for t in path.triples()) / path.length


def relatedness_space(store: TripleStore, r: int, direction: str,
                      base: float = 10.0) -> dict[int, float]:
    """Predicate -> informativeness vector for one side of a resource."""
    if store.degree(r, "both") == 0:
        raise IsolatedResourceError(r)
    edges = store.in_edges(r) if direction == "in" else store.out_edges(r)
    return {p: pf_itf(store, r, p, direction, base)
            for p in sorted({t.p for t in edges})}


def _cosine(u: dict[int, float], v: dict[int, float]) -> float:
    dot = sum(w * v.get(p, 0.0) for p, w in u.items())
    nu = math.sqrt(sum(w * w for w in u.values()))
    nv = math.sqrt(sum(w * w for w in v.values()))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return dot / (nu * nv)


REWORD_STRATEGIES = ("incoming", "outgoing", "average", "mip", "full")


def _mip(store: TripleStore, a: int, b: int, h: int,
         base: float) -> Optional[Path]:
    """Most informative undirected path within h.

    Ties are broken by the smaller of a path's forward and reversed
    triple-id sequences, so both endpoint orders settle on one path.
    """
    best = None
    best_i = -1.0
    best_key = None
    for path in enumerate_paths(store, a, b, "undirected", "at_most", h):
        v = path_informativeness(store, path, base)
        tids = tuple(st.tid for st in path.steps)
        key = min(tids, tids[::-1])
        if v > best_i or (v == best_i and key < best_key):
            best, best_i, best_key = path, v, key
    return best


def reword(store: TripleStore, strategy: str, a: int, b: int, h: int = 2,
           base: float = 10.0) -> float:
    """Cosine of two informativeness spaces (or, for 'mip', the best
    path's informativeness itself).

    'incoming'/'outgoing' use one side's predicates, 'average' the
    per-predicate mean of both sides, 'full' enriches the incoming spaces
    with each predicate of the most informative path, creating missing
    coordinates.  Either endpoint appearing in no triple is an error.
    """
    if strategy not in REWORD_STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    for r in (a, b):
        if store.degree(r, "both") == 0:
            raise IsolatedResourceError(r)

    if strategy == "mip":
        if a == b:
            return 0.0  # no acyclic path from a resource to itself
        best = _mip(store, a, b, h, base)
        return path_informativeness(store, best, base) if best else 0.0

    if strategy in ("incoming", "outgoing"):
        side = "in" if strategy == "incoming" else "out"
        sa = relatedness_space(store, a, side, base)
        sb = relatedness_space(store, b, side, base)
        return _cosine(sa, sb)

    if strategy == "average":
        def avg(r: int) -> dict[int, float]:
            inc = relatedness_space(store, r, "in", base)
            out = relatedness_space(store, r, "out", base)
            return {p: (inc.get(p, 0.0) + out.get(p, 0.0)) / 2.0
                    for p in set(inc) | set(out)}
        return _cosine(avg(a), avg(b))

    # full: incoming spaces enriched along the most informative path
    sa = relatedness_space(store, a, "in", base)
    sb = relatedness_space(store, b, "in", base)
    if a != b:
        best = _mip(store, a, b, h, base)
        if best is not None:
            for t in best.triples():
                w = triple_informativeness(store, t, base)
                sa[t.p] = sa.get(t.p, 0.0) + w
                sb[t.p] = sb.get(t.p, 0.0) + w
    return _cosine(sa, sb)


# ----------------------------------------------------------------------
# exclusivity

def exclusivity(store: TripleStore, t: Triple) -> float:
    """1 over the count of same-predicate triples sharing t's subject or
    object, t itself counted once."""
    if not store.has_triple(*t):
        raise ValueError(f"triple {t} not in store")
    return 1.0 / (store.count_sp(t.s, t.p) + store.count_po(t.p, t.o) - 1)


def excl_path_weight(store: TripleStore, path: Path) -> float:
    """Harmonic-style combination of the path triples' exclusivity."""
    return 1.0 / sum(1.0 / exclusivity(store, t) for t in path.triples())


def excl_relatedness(store: TripleStore, a: int, b: int, h: int = 2,
                     k: int = 5, alpha: float = 0.25) -> float:
    """Sum of length-damped weights over the k best undirected paths."""
    if not 0.0 < alpha <= 1.0:
        raise ValueError("alpha must be in (0, 1]")
    if a == b:
        return 0.0
    best = top_k_paths(store, a, b, k, lambda p: excl_path_weight(store, p),
                       "undirected", "at_most", h)
    return sum(alpha ** p.length * excl_path_weight(store, p) for p in best)


# ----------------------------------------------------------------------
# direct-link chains under fuzzy aggregation

def wsrm(store: TripleStore, a: int, b: int) -> float:
    """Direct links from a to b over a's total outgoing links."""
    out = store.degree(a, "out")
    if out == 0:
        return 0.0
    return len(store.triples_matching(s=a, o=b)) / out


def hamacher_tnorm(x: float, y: float) -> float:
    if x == 0.0 or y == 0.0:
        return 0.0
    return (x * y) / (x + y - x * y)


def hamacher_snorm(x: float, y: float) -> float:
    if x == 1.0 or y == 1.0:
        return 1.0
    return (x + y - 2.0 * x * y) / (1.0 - x * y)


def tnorm_fold(values) -> float:
    return reduce(hamacher_tnorm, values, 1.0)


def snorm_fold(values) -> float:
    return reduce(hamacher_snorm, values, 0.0)


def _resource_sequences(store: TripleStore, a: int, b: int, m: int,
                        length_mode: str) -> list[tuple[int, ...]]:
    """Directed paths as node sequences, parallel predicates collapsed.

    The per-edge strength already counts every predicate between two
    nodes, so two triple-level paths over the same nodes are one path
    here.
    """
    seqs = dict.fromkeys(
        tuple(p.nodes())
        for p in enumerate_paths(store, a, b, "directed", length_mode, m))
    return list(seqs)


def _chain_strength(store: TripleStore, seq: tuple[int, ...]) -> float:
    return tnorm_fold(wsrm(store, seq[i], seq[i + 1])
                      for i in range(len(seq) - 1))


def asrmp(store: TripleStore, variant: str, m: int, a: int, b: int) -> float:
    """Aggregate chained direct-link strengths over directed paths.

    'a' uses paths of length exactly m, 'b' all lengths up to m, both
    s-norm folded; 'c' sums per-length contributions scaled by the share
    of paths having that length.  No path at all gives 0.
    """
    if variant not in ("a", "b", "c"):
        raise ValueError(f"unknown variant {variant!r}")
    if m < 1:
        raise ValueError("m must be >= 1")
    if a == b:
        return 0.0
    if variant == "a":
        seqs = _resource_sequences(store, a, b, m, "exactly")
        return snorm_fold(_chain_strength(store, s) for s in seqs)
    seqs = _resource_sequences(store, a, b, m, "at_most")
    if variant == "b":
        return snorm_fold(_chain_strength(store, s) for s in seqs)
    # variant c: arithmetic mixture weighted by path-length share
    if not seqs:
        return 0.0
    by_len: dict[int, list[tuple[int, ...]]] = {}
    for seq in seqs:
        by_len.setdefault(len(seq) - 1, []).append(seq)
    total = len(seqs)
    return sum(
        (len(group) / total) * sum(_chain_strength(store, s) for s in group)
        for _, group in sorted(by_len.items()))


def psi(store: TripleStore, variant: str, m: int, a: int, b: int) -> float:
    """Order-free version: mean of both directions."""
    return 0.5 * (asrmp(store, variant, m, a, b)
                  + asrmp(store, variant, m, b, a))


# ----------------------------------------------------------------------
# proximity

PROX_KINDS = ("predicate_ic", "user_table")


def predicate_ic_weights(store: TripleStore, base: float = 10.0) -> dict[int, float]:
    """Predicate -> information content of drawing that predicate."""
    g = store.triple_count
    return {p: information_content(c / g, base)
            for p, c in store.predicate_counts().items()}


def proximity(store: TripleStore, a: int, b: int, h: int = 2,
              kind: str = "predicate_ic",
              table: Optional[dict[str, float]] = None,
              base: float = 10.0) -> float:
    """Outdegree- and length-damped sum of predicate weights over all
    undirected paths up to h, scaled by the largest weight the weight
    function can assign.  Identity is 1 by convention."""
    if kind not in PROX_KINDS:
        raise ValueError(f"unknown weighting {kind!r}")
    if a == b:
        return 1.0
    if kind == "user_table":
        if not table:
            raise ValueError("user_table weighting needs a table")
        weights = None
        omega = max(table.values())
    else:
        weights = predicate_ic_weights(store, base)
        omega = max(weights.values(), default=0.0)
    if omega <= 0.0:
        raise ValueError("maximum predicate weight must be positive")
    delta = store.max_out_degree()

    def weight(p: int) -> float:
        if weights is not None:
            return weights[p]
        iri = store.iri(p)
        if iri not in table:
            raise UnweightedPredicateError(iri)
        return table[iri]

    by_length: dict[int, float] = {}
    for path in enumerate_paths(store, a, b, "undirected", "at_most", h):
        contrib = sum(weight(t.p) for t in path.triples())
        by_length[path.length] = by_length.get(path.length, 0.0) + contrib
    total = sum(contrib / ((2.0 * delta) ** n)
                for n, contrib in sorted(by_length.items()))
    return total / omega
