"""Triple-pattern distances: the LDSD family, its globally normalized
variants, and the path-propagated version.

All of them map a resource pair to a distance in (0, 1], where 1 means no
contributing pattern at all.  The 1/(1+log C) normalizers take a count
that is >= 1 wherever a term contributes, so every term lies in (0, 1].
The log base is a knob (natural log by default); it changes sums, not the
presence of terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..paths import enumerate_paths
from ..store import TripleStore


@dataclass(frozen=True)
class PatternCounts:
    """Per-predicate link patterns for an ordered pair (a, b).

    Totals are a-sided: cd_total counts a's targets via p, cio_total and
    cii_total count resources sharing an out-target or in-linker with a
    (a itself included, so a nonzero entry is always >= 1).
    """
    cd: int
    cd_total: int
    cio: int
    cii: int
    cio_total: int
    cii_total: int
    cprime_io: int
    cprime_ii: int


@dataclass(frozen=True)
class GlobalPatternCounts:
    cdp: int
    ciop: int
    ciip: int


def _out_by_pred(store: TripleStore, r: int) -> dict[int, set[int]]:
    out: dict[int, set[int]] = {}
    for t in store.out_edges(r):
        out.setdefault(t.p, set()).add(t.o)
    return out


def _in_by_pred(store: TripleStore, r: int) -> dict[int, set[int]]:
    out: dict[int, set[int]] = {}
    for t in store.in_edges(r):
        out.setdefault(t.p, set()).add(t.s)
    return out


def _indirect_out_total(store: TripleStore, targets: set[int], p: int) -> int:
    """How many resources share at least one of these p-targets."""
    linked: set[int] = set()
    for n in targets:
        for t in store.in_edges(n):
            if t.p == p:
                linked.add(t.s)
    return len(linked)


def _indirect_in_total(store: TripleStore, sources: set[int], p: int) -> int:
    """How many resources share at least one of these p-sources."""
    linked: set[int] = set()
    for n in sources:
        for t in store.out_edges(n):
            if t.p == p:
                linked.add(t.o)
    return len(linked)


def pattern_counts(store: TripleStore, a: int, b: int) -> dict[int, PatternCounts]:
    """Counts per predicate, omitting predicates with all-zero entries."""
    out_a = _out_by_pred(store, a)
    out_b = _out_by_pred(store, b)
    in_a = _in_by_pred(store, a)
    in_b = _in_by_pred(store, b)
    result: dict[int, PatternCounts] = {}
    for p in set(out_a) | set(out_b) | set(in_a) | set(in_b):
        ta = out_a.get(p, set())
        sa = in_a.get(p, set())
        shared_out = ta & out_b.get(p, set())
        shared_in = sa & in_b.get(p, set())
        pc = PatternCounts(
            cd=1 if b in ta else 0,
            cd_total=len(ta),
            cio=1 if shared_out else 0,
            cii=1 if shared_in else 0,
            cio_total=_indirect_out_total(store, ta, p) if ta else 0,
            cii_total=_indirect_in_total(store, sa, p) if sa else 0,
            cprime_io=len(shared_out),
            cprime_ii=len(shared_in),
        )
        if any((pc.cd, pc.cd_total, pc.cio, pc.cii, pc.cio_total,
                pc.cii_total, pc.cprime_io, pc.cprime_ii)):
            result[p] = pc
    return result


def global_pattern_counts(store: TripleStore, p: int, r: int) -> GlobalPatternCounts:
    """Global pattern occurrences: predicate total plus the unordered pair
    counts of r's in-linkers and out-targets via p."""
    n_in = store.count_po(p, r)
    n_out = store.count_sp(r, p)
    return GlobalPatternCounts(
        cdp=store.predicate_count(p),
        ciop=n_in * (n_in - 1) // 2,
        ciip=n_out * (n_out - 1) // 2,
    )


def _norm(count: float, base: float) -> float:
    # contributing terms always come with count >= 1
    return 1.0 / (1.0 + math.log(count) / math.log(base))


def ldsd(store: TripleStore, variant: str, a: int, b: int,
         base: float = math.e) -> float:
    """Direct (dw), indirect (iw), or combined (cw) weighted distance.

    Indirect terms are normalized by a's totals only, which is what makes
    iw and cw order dependent.
    """
    if variant not in ("dw", "iw", "cw"):
        raise ValueError(f"unknown ldsd variant {variant!r}")
    out_a = _out_by_pred(store, a)
    out_b = _out_by_pred(store, b)
    f_direct = 0.0
    if variant in ("dw", "cw"):
        for p, targets in out_a.items():
            if b in targets:
                f_direct += _norm(len(targets), base)
        for p, targets in out_b.items():
            if a in targets:
                f_direct += _norm(len(targets), base)
    f_indirect = 0.0
    if variant in ("iw", "cw"):
        in_a = _in_by_pred(store, a)
        in_b = _in_by_pred(store, b)
        for p, ta in out_a.items():
            if ta & out_b.get(p, set()):
                f_indirect += _norm(_indirect_out_total(store, ta, p), base)
        for p, sa in in_a.items():
            if sa & in_b.get(p, set()):
                f_indirect += _norm(_indirect_in_total(store, sa, p), base)
    return 1.0 / (1.0 + f_direct + f_indirect)


def ldsdgn(store: TripleStore, variant: str, a: int, b: int,
           base: float = math.e) -> float:
    """Globally normalized variants alpha, beta, gamma.

    alpha normalizes shared-pattern counts by a's totals, beta by the
    average of both sides, gamma by per-intermediate global pair counts.
    """
    if variant not in ("alpha", "beta", "gamma"):
        raise ValueError(f"unknown ldsdgn variant {variant!r}")
    out_a = _out_by_pred(store, a)
    out_b = _out_by_pred(store, b)
    in_a = _in_by_pred(store, a)
    in_b = _in_by_pred(store, b)

    f1 = 0.0
    if variant == "gamma":
        for p, targets in out_a.items():
            if b in targets:
                f1 += _norm(store.predicate_count(p), base)
        for p, targets in out_b.items():
            if a in targets:
                f1 += _norm(store.predicate_count(p), base)
    else:
        for p, targets in out_a.items():
            if b in targets:
                f1 += _norm(len(targets), base)
        for p, targets in out_b.items():
            if a in targets:
                f1 += _norm(len(targets), base)

    f2 = 0.0
    if variant == "gamma":
        for p, ta in out_a.items():
            for n in ta & out_b.get(p, set()):
                pairs = global_pattern_counts(store, p, n).ciop
                f2 += _norm(max(pairs, 1), base)  # self pairs can hit 0
        for p, sa in in_a.items():
            for n in sa & in_b.get(p, set()):
                pairs = global_pattern_counts(store, p, n).ciip
                f2 += _norm(max(pairs, 1), base)
    else:
        for p, ta in out_a.items():
            shared = ta & out_b.get(p, set())
            if shared:
                na = _indirect_out_total(store, ta, p)
                if variant == "alpha":
                    denom = na
                else:
                    nb = _indirect_out_total(store, out_b.get(p, set()), p)
                    denom = (na + nb) / 2.0
                f2 += len(shared) * _norm(denom, base)
        for p, sa in in_a.items():
            shared = sa & in_b.get(p, set())
            if shared:
                na = _indirect_in_total(store, sa, p)
                if variant == "alpha":
                    denom = na
                else:
                    nb = _indirect_in_total(store, in_b.get(p, set()), p)
                    denom = (na + nb) / 2.0
                f2 += len(shared) * _norm(denom, base)
    return 1.0 / (1.0 + f1 + f2)


def pldsd(store: TripleStore, a: int, b: int, h: int = 2,
          base: float = math.e) -> float:
    """Best path product of (1 - cw) factors over undirected paths <= h.

    Each traversed triple contributes with its stored orientation.  The
    result is already a relatedness value; 0 means no path at all, and a
    resource paired with itself has no acyclic path, hence 0.
    """
    if a == b:
        return 0.0
    cache: dict[tuple[int, int], float] = {}

    def cw(s: int, o: int) -> float:
        v = cache.get((s, o))
        if v is None:
            v = ldsd(store, "cw", s, o, base)
            cache[(s, o)] = v
        return v

    best = 0.0
    for path in enumerate_paths(store, a, b, "undirected", "at_most", h):
        prod = 1.0
        for t in path.triples():
            prod *= 1.0 - cw(t.s, t.o)
        if prod > best:
            best = prod
    return best
