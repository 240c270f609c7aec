"""Shared test utilities: the 22-triple fixture graph and a random
graph generator."""

from __future__ import annotations

import random

from kgrel import RDF_TYPE, TripleStore, from_triples

NS = "http://example.org/"

# A small two-hub graph: ra and rb share in-linkers (r4, r11), share the
# out-neighbor r3, and are directly linked in both directions.
FIXTURE = [
    ("ra", "p2", "rb"),
    ("rb", "p3", "ra"),
    ("r4", "p2", "ra"),
    ("r9", "p3", "ra"),
    ("r9", "p1", "ra"),
    ("r11", "p2", "ra"),
    ("r4", "p2", "rb"),
    ("r11", "p2", "rb"),
    ("r7", "p2", "rb"),
    ("r8", "p3", "rb"),
    ("ra", "p1", "r3"),
    ("rb", "p1", "r3"),
    ("r5", "p1", "r3"),
    ("r6", "p1", "r3"),
    ("r3", "p1", "r8"),
    ("rb", "p3", "r4"),
    ("ra", "type", "r2"),
    ("rb", "type", "r1"),
    ("ra", "p2", "r10"),
    ("r4", "p2", "r7"),
    ("r7", "p2", "r1"),
    ("r10", "p1", "r5"),
]

FIXTURE_NAMES = sorted({n for t in FIXTURE for n in (t[0], t[2])}
                       | {t[1] for t in FIXTURE})


def iri(name: str) -> str:
    return RDF_TYPE if name == "type" else NS + name


def fixture_triples() -> list[tuple[str, str, str]]:
    return [(iri(s), iri(p), iri(o)) for s, p, o in FIXTURE]


def fixture_store() -> TripleStore:
    return from_triples(fixture_triples())


def handle_map(store: TripleStore) -> dict[str, int]:
    return {n: store.handle(iri(n)) for n in FIXTURE_NAMES}


def random_store(rng: random.Random, max_nodes: int = 8,
                 max_triples: int = 20) -> TripleStore:
    """Connected-ish random graph with no self loops and at least two
    distinct predicates (single-predicate graphs give every predicate
    zero information content, which several measures reject)."""
    while True:
        n_nodes = rng.randint(3, max_nodes)
        n_preds = rng.randint(2, 4)
        target = rng.randint(4, max_triples)
        triples = set()
        for _ in range(target):
            s, o = rng.sample(range(n_nodes), 2)
            triples.add((s, rng.randrange(n_preds), o))
        if len({p for _, p, _ in triples}) < 2:
            continue
        names = [(f"http://t/r{s}", f"http://t/q{p}", f"http://t/r{o}")
                 for s, p, o in sorted(triples)]
        if rng.random() < 0.25:
            a, b = rng.sample(range(n_nodes), 2)
            names.append((f"http://t/r{a}", RDF_TYPE, f"http://t/r{b}"))
        return from_triples(names)


def sample_pair(rng: random.Random, store: TripleStore) -> tuple[int, int]:
    rs = list(store.resources())
    a, b = rng.sample(rs, 2)
    return int(a), int(b)
