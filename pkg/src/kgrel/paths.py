"""Acyclic bounded path enumeration between two resources.

Paths never repeat a node (endpoints included), so a triple can appear at
most once per path in either orientation.  Enumeration is a depth-first
search that visits candidate steps in ascending triple-id order, which
makes the output deterministic: paths come out in lexicographic order of
their triple-id sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .store import Triple, TripleStore


class DegeneratePairError(ValueError):
    """Raised for start == end; identity is a measure-level convention."""

    def __init__(self, r: int):
        super().__init__(f"degenerate-pair: start and end are both handle {r}")


class Step(NamedTuple):
    triple: Triple
    forward: bool
    tid: int


@dataclass(frozen=True)
class Path:
    steps: tuple[Step, ...]
    start: int
    end: int

    @property
    def length(self) -> int:
        return len(self.steps)

    def nodes(self) -> list[int]:
        """Visited resources in order, start first."""
        out = [self.start]
        for st in self.steps:
            out.append(st.triple.o if st.forward else st.triple.s)
        return out

    def triples(self) -> list[Triple]:
        return [st.triple for st in self.steps]

    def reversed(self) -> "Path":
        steps = tuple(Step(st.triple, not st.forward, st.tid)
                      for st in reversed(self.steps))
        return Path(steps, self.end, self.start)


def enumerate_paths(store: TripleStore, start: int, end: int,
                    direction: str = "undirected",
                    length_mode: str = "at_most",
                    bound: int = 2) -> list[Path]:
    """All acyclic paths from start to end satisfying the query.

    direction 'directed' walks triples subject to object only; 'undirected'
    may traverse each triple either way.  length_mode 'exactly' keeps paths
    of length == bound, 'at_most' keeps lengths 1..bound.
    """
    if direction not in ("directed", "undirected"):
        raise ValueError(f"unknown direction {direction!r}")
    if length_mode not in ("exactly", "at_most"):
        raise ValueError(f"unknown length mode {length_mode!r}")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if start == end:
        raise DegeneratePairError(start)

    undirected = direction == "undirected"
    at_most = length_mode == "at_most"
    results: list[Path] = []
    steps: list[Step] = []
    visited = {start}

    def candidates(v: int) -> list[tuple[int, Triple, bool, int]]:
        cand = [(i, t, True, t.o)
                for i in store.out_ids(v) for t in (store.triple(i),)]
        if undirected:
            cand.extend((i, t, False, t.s)
                        for i in store.in_ids(v) for t in (store.triple(i),))
            cand.sort(key=lambda c: c[0])
        return cand

    def dfs(v: int, depth: int) -> None:
        for tid, t, fwd, nxt in candidates(v):
            if nxt in visited:
                continue
            steps.append(Step(t, fwd, tid))
            if nxt == end:
                # the end node may not be passed through, so never extend
                if at_most or depth + 1 == bound:
                    results.append(Path(tuple(steps), start, end))
            elif depth + 1 < bound:
                visited.add(nxt)
                dfs(nxt, depth + 1)
                visited.remove(nxt)
            steps.pop()

    dfs(start, 0)
    return results


def top_k_paths(store: TripleStore, start: int, end: int, k: int,
                path_weight: Callable[[Path], float],
                direction: str = "undirected",
                length_mode: str = "at_most",
                bound: int = 2) -> list[Path]:
    """The k highest-weight paths, weight ties broken by shorter length,
    then enumeration order.

    Preferring the shorter path on equal weight keeps any k-boundary cut
    independent of the endpoint order: candidates left tied on both keys
    are interchangeable for every length-damped aggregate.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    paths = enumerate_paths(store, start, end, direction, length_mode, bound)
    scored = sorted(((path_weight(p), p.length, i)
                     for i, p in enumerate(paths)),
                    key=lambda wli: (-wli[0], wli[1], wli[2]))
    return [paths[i] for _, _, i in scored[:k]]
