"""Relatedness from 1-hop neighborhoods.

wlm_distance compares the incoming-subject sets of the two resources
against the resource population; the two lod_* strategies compare full
descriptions (non-typing neighbors plus the resource itself).
"""

from __future__ import annotations

import math

from ..store import TripleStore


def in_link_sets(store: TripleStore, a: int, b: int) -> tuple[set[int], set[int]]:
    """Subjects linking into a and into b, any predicate."""
    return store.subjects_with_object(a), store.subjects_with_object(b)


def wlm_distance(store: TripleStore, a: int, b: int) -> float:
    """Normalized in-link set distance, 0 (identical) to +inf (disjoint).

    Identical in-link sets give 0; disjoint ones +inf; two resources with
    no in-links at all give 1 by convention.  The log-ratio is base
    invariant.
    """
    A, B = in_link_sets(store, a, b)
    if A == B:
        return 0.0 if A else 1.0
    common = len(A & B)
    if common == 0:
        return math.inf
    big = max(len(A), len(B))
    small = min(len(A), len(B))
    n = store.resource_count
    return (math.log(big) - math.log(common)) / (math.log(n) - math.log(small))


def lod_overlap(store: TripleStore, a: int, b: int) -> float:
    """Description overlap against the smaller description, in [0, 1]."""
    da = store.description(a)
    db = store.description(b)
    return len(da & db) / min(len(da), len(db))


def lod_jaccard(store: TripleStore, a: int, b: int) -> float:
    """Description overlap against the union, in [0, 1]."""
    da = store.description(a)
    db = store.description(b)
    common = len(da & db)
    return common / (len(da) + len(db) - common)
