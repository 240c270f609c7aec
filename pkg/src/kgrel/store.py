"""Indexed in-memory RDF triple store.

Triples are ingested from N-Triples text (a restricted dialect: IRI terms
only, literal objects dropped), interned into dense integer handles, and
held as three parallel uint32 columns sorted lexicographically by
(subject, predicate, object).  Lookups run as binary searches over the
sorted columns and over two packed (subject,predicate) / (object,predicate)
key arrays, which keeps memory linear in the number of triples and distinct
terms even for dumps with tens of millions of statements.

A store is mutable while triples are being added and becomes immutable
after seal().  All query methods require a sealed store.
"""

from __future__ import annotations

import gzip
import time
from array import array
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

import numpy as np

RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"


class IngestError(Exception):
    """Unreadable input; carries the source name and 1-based line number."""

    def __init__(self, source, line_no, cause):
        super().__init__(f"cannot read {source} at line {line_no}: {cause}")
        self.source = source
        self.line_no = line_no


class Triple(NamedTuple):
    s: int
    p: int
    o: int


@dataclass
class IngestOptions:
    drop_literals: bool = True
    exclude_predicates: Sequence[str] = ()
    max_triples: Optional[int] = None


@dataclass
class IngestStats:
    lines: int = 0
    triples: int = 0          # statements kept, before deduplication
    duplicates: int = 0       # removed at seal
    literals_dropped: int = 0
    excluded: int = 0
    malformed: int = 0
    seconds: float = 0.0


class NotSealedError(RuntimeError):
    pass


class TripleStore:
    """Deduplicated triple set over interned terms, immutable once sealed."""

    def __init__(self):
        self._handles: dict[str, int] = {}
        self._iris: list[str] = []
        self._buf_s = array("I")
        self._buf_p = array("I")
        self._buf_o = array("I")
        self._sealed = False
        self.ingest_stats = IngestStats()
        # set at seal
        self._S = self._P = self._O = None
        self._key_sp = self._key_po = None
        self._order_o = self._O_sorted = None
        self._pred_counts: dict[int, int] = {}
        self._resources = None
        self._max_out = 0
        self._type_handle = -1

    # ------------------------------------------------------------------
    # construction

    def intern(self, iri: str) -> int:
        h = self._handles.get(iri)
        if h is None:
            h = len(self._iris)
            self._handles[iri] = h
            self._iris.append(iri)
        return h

    def add(self, s: str, p: str, o: str) -> None:
        """Add one triple by term strings; only valid before seal()."""
        if self._sealed:
            raise RuntimeError("store is sealed, no further writes")
        self._buf_s.append(self.intern(s))
        self._buf_p.append(self.intern(p))
        self._buf_o.append(self.intern(o))
        self.ingest_stats.triples += 1

    def ingest_lines(self, lines: Iterable[str], options: IngestOptions,
                     source_name: str = "<stream>") -> None:
        """Parse N-Triples lines into the store, skipping what the dialect
        excludes.  Malformed lines are counted, never fatal; an I/O or
        decode fault raises IngestError with the offending line number."""
        if self._sealed:
            raise RuntimeError("store is sealed, no further writes")
        st = self.ingest_stats
        handles = self._handles
        iris = self._iris
        buf_s, buf_p, buf_o = self._buf_s, self._buf_p, self._buf_o
        exclude = set(options.exclude_predicates or ())
        cap = options.max_triples
        drop_lit = options.drop_literals
        line_no = 0
        it = iter(lines)
        while True:
            try:
                raw = next(it)
            except StopIteration:
                break
            except (OSError, UnicodeDecodeError, EOFError) as exc:
                raise IngestError(source_name, line_no + 1, exc) from exc
            line_no += 1
            st.lines += 1
            line = raw.strip()
            if not line or line[0] == "#":
                continue
            parts = line.split(None, 2)
            if len(parts) != 3:
                st.malformed += 1
                continue
            s_tok, p_tok, rest = parts
            rest = rest.rstrip()
            if not rest.endswith("."):
                st.malformed += 1
                continue
            o_tok = rest[:-1].rstrip()
            if (len(s_tok) < 3 or s_tok[0] != "<" or s_tok[-1] != ">"
                    or len(p_tok) < 3 or p_tok[0] != "<" or p_tok[-1] != ">"
                    or not o_tok):
                st.malformed += 1
                continue
            if o_tok[0] == '"':
                if drop_lit:
                    st.literals_dropped += 1
                    continue
                o_term = o_tok  # kept as an opaque term
            elif o_tok[0] == "<" and o_tok[-1] == ">" and len(o_tok) >= 3:
                o_term = o_tok[1:-1]
            else:
                st.malformed += 1
                continue
            p_term = p_tok[1:-1]
            if p_term in exclude:
                st.excluded += 1
                continue
            s_term = s_tok[1:-1]
            # inlined intern(), this loop dominates large ingests
            h = handles.get(s_term)
            if h is None:
                h = len(iris)
                handles[s_term] = h
                iris.append(s_term)
            buf_s.append(h)
            h = handles.get(p_term)
            if h is None:
                h = len(iris)
                handles[p_term] = h
                iris.append(p_term)
            buf_p.append(h)
            h = handles.get(o_term)
            if h is None:
                h = len(iris)
                handles[o_term] = h
                iris.append(o_term)
            buf_o.append(h)
            st.triples += 1
            if cap is not None and st.triples >= cap:
                break

    def seal(self) -> "TripleStore":
        """Deduplicate, build the sorted indexes, and freeze the store."""
        if self._sealed:
            return self
        n = len(self._buf_s)
        if n:
            S = np.frombuffer(self._buf_s, dtype=np.uint32).copy()
            P = np.frombuffer(self._buf_p, dtype=np.uint32).copy()
            O = np.frombuffer(self._buf_o, dtype=np.uint32).copy()
        else:
            S = P = O = np.empty(0, dtype=np.uint32)
        self._buf_s = self._buf_p = self._buf_o = None
        if n:
            order = np.lexsort((O, P, S))
            S, P, O = S[order], P[order], O[order]
            keep = np.empty(n, dtype=bool)
            keep[0] = True
            np.logical_or(
                S[1:] != S[:-1],
                np.logical_or(P[1:] != P[:-1], O[1:] != O[:-1]),
                out=keep[1:],
            )
            if not keep.all():
                S, P, O = S[keep], P[keep], O[keep]
        self.ingest_stats.duplicates = n - len(S)
        self._S, self._P, self._O = S, P, O
        self._key_sp = (S.astype(np.uint64) << np.uint64(32)) | P
        order_o = np.lexsort((S, P, O))
        self._order_o = order_o.astype(np.uint32)
        self._O_sorted = O[order_o]
        self._key_po = (self._O_sorted.astype(np.uint64) << np.uint64(32)) | P[order_o]
        if len(P):
            uniq, cnt = np.unique(P, return_counts=True)
            self._pred_counts = {int(u): int(c) for u, c in zip(uniq, cnt)}
            _, scnt = np.unique(S, return_counts=True)
            self._max_out = int(scnt.max())
        else:
            self._pred_counts = {}
            self._max_out = 0
        self._resources = np.union1d(S, O)
        self._type_handle = self._handles.get(RDF_TYPE, -1)
        self._sealed = True
        return self

    # ------------------------------------------------------------------
    # term access

    def iri(self, handle: int) -> str:
        return self._iris[handle]

    def handle(self, iri: str) -> Optional[int]:
        return self._handles.get(iri)

    def is_type_predicate(self, p: int) -> bool:
        return p == self._type_handle

    # ------------------------------------------------------------------
    # queries (sealed store only)

    def _check(self):
        if not self._sealed:
            raise NotSealedError("store must be sealed before queries")

    @property
    def sealed(self) -> bool:
        return self._sealed

    @property
    def triple_count(self) -> int:
        self._check()
        return len(self._S)

    @property
    def resource_count(self) -> int:
        self._check()
        return len(self._resources)

    def resources(self) -> np.ndarray:
        """Handles appearing in at least one triple as subject or object."""
        self._check()
        return self._resources

    def is_resource(self, r: int) -> bool:
        self._check()
        i = np.searchsorted(self._resources, r)
        return i < len(self._resources) and self._resources[i] == r

    def _range_s(self, s: int) -> tuple[int, int]:
        lo = int(np.searchsorted(self._S, s, "left"))
        hi = int(np.searchsorted(self._S, s, "right"))
        return lo, hi

    def _range_o(self, o: int) -> tuple[int, int]:
        lo = int(np.searchsorted(self._O_sorted, o, "left"))
        hi = int(np.searchsorted(self._O_sorted, o, "right"))
        return lo, hi

    def _range_sp(self, s: int, p: int) -> tuple[int, int]:
        key = np.uint64((s << 32) | p)
        lo = int(np.searchsorted(self._key_sp, key, "left"))
        hi = int(np.searchsorted(self._key_sp, key, "right"))
        return lo, hi

    def _range_po(self, p: int, o: int) -> tuple[int, int]:
        key = np.uint64((o << 32) | p)
        lo = int(np.searchsorted(self._key_po, key, "left"))
        hi = int(np.searchsorted(self._key_po, key, "right"))
        return lo, hi

    def count_s(self, s: int) -> int:
        self._check()
        lo, hi = self._range_s(s)
        return hi - lo

    def count_o(self, o: int) -> int:
        self._check()
        lo, hi = self._range_o(o)
        return hi - lo

    def count_sp(self, s: int, p: int) -> int:
        self._check()
        lo, hi = self._range_sp(s, p)
        return hi - lo

    def count_po(self, p: int, o: int) -> int:
        self._check()
        lo, hi = self._range_po(p, o)
        return hi - lo

    def has_triple(self, s: int, p: int, o: int) -> bool:
        self._check()
        lo, hi = self._range_sp(s, p)
        if lo == hi:
            return False
        i = lo + int(np.searchsorted(self._O[lo:hi], o))
        return i < hi and self._O[i] == o

    def degree(self, r: int, direction: str = "both") -> int:
        self._check()
        if direction == "out":
            return self.count_s(r)
        if direction == "in":
            return self.count_o(r)
        if direction == "both":
            return self.count_s(r) + self.count_o(r)
        raise ValueError(f"unknown direction {direction!r}")

    def predicate_count(self, p: int) -> int:
        self._check()
        return self._pred_counts.get(p, 0)

    def predicate_counts(self) -> dict[int, int]:
        self._check()
        return dict(self._pred_counts)

    def max_out_degree(self) -> int:
        self._check()
        return self._max_out

    def triple(self, i: int) -> Triple:
        """Triple by id; ids are positions in (s,p,o) lexicographic order."""
        return Triple(int(self._S[i]), int(self._P[i]), int(self._O[i]))

    def out_ids(self, r: int) -> range:
        """Ids of triples with subject r, ascending."""
        self._check()
        lo, hi = self._range_s(r)
        return range(lo, hi)

    def in_ids(self, r: int) -> list[int]:
        """Ids of triples with object r, ascending."""
        self._check()
        lo, hi = self._range_o(r)
        ids = self._order_o[lo:hi].tolist()
        ids.sort()
        return ids

    def out_edges(self, r: int) -> list[Triple]:
        return [self.triple(i) for i in self.out_ids(r)]

    def in_edges(self, r: int) -> list[Triple]:
        return [self.triple(i) for i in self.in_ids(r)]

    def triples_matching(self, s: Optional[int] = None, p: Optional[int] = None,
                         o: Optional[int] = None) -> list[Triple]:
        """Triples matching every bound position; unknown handles match nothing."""
        self._check()
        if s is not None and (s < 0 or s >= len(self._iris)):
            return []
        if o is not None and (o < 0 or o >= len(self._iris)):
            return []
        if p is not None and (p < 0 or p >= len(self._iris)):
            return []
        if s is not None:
            if p is not None:
                lo, hi = self._range_sp(s, p)
            else:
                lo, hi = self._range_s(s)
            rows = range(lo, hi)
            if o is not None:
                return [self.triple(i) for i in rows if self._O[i] == o]
            return [self.triple(i) for i in rows]
        if o is not None:
            lo, hi = self._range_o(o)
            ids = self._order_o[lo:hi]
            if p is not None:
                ids = ids[self._P[ids] == p]
            ids = ids.tolist()
            ids.sort()
            return [self.triple(i) for i in ids]
        if p is not None:
            ids = np.nonzero(self._P == p)[0]
            return [self.triple(i) for i in ids]
        return [self.triple(i) for i in range(len(self._S))]

    def iter_triples(self) -> Iterator[Triple]:
        self._check()
        for i in range(len(self._S)):
            yield self.triple(i)

    def subjects_with_object(self, r: int) -> set[int]:
        """Distinct subjects of triples whose object is r (any predicate)."""
        self._check()
        lo, hi = self._range_o(r)
        ids = self._order_o[lo:hi]
        return set(self._S[ids].tolist())

    def description(self, r: int) -> set[int]:
        """r plus every resource adjacent through a non rdf:type predicate."""
        self._check()
        out = {r}
        lo, hi = self._range_s(r)
        for i in range(lo, hi):
            if self._P[i] != self._type_handle:
                out.add(int(self._O[i]))
        lo, hi = self._range_o(r)
        for i in self._order_o[lo:hi]:
            if self._P[i] != self._type_handle:
                out.add(int(self._S[i]))
        return out

    def summary(self) -> dict:
        """Small serializable digest: totals and per-predicate counts."""
        self._check()
        preds = sorted(self._pred_counts.items(), key=lambda kv: (-kv[1], self.iri(kv[0])))
        return {
            "triples": self.triple_count,
            "resources": self.resource_count,
            "predicates": {self.iri(p): c for p, c in preds},
        }


def _open_text(path) -> Iterable[str]:
    name = str(path)
    if name.endswith(".gz"):
        return gzip.open(name, "rt", encoding="utf-8")
    return open(name, "r", encoding="utf-8")


def ingest(source, options: Optional[IngestOptions] = None) -> TripleStore:
    """Build a sealed TripleStore from N-Triples input.

    source may be a file path, a sequence of file paths, or an iterable of
    lines (an open file works).  Paths ending in .gz are decompressed on
    the fly.
    """
    options = options or IngestOptions()
    store = TripleStore()
    t0 = time.perf_counter()
    if isinstance(source, (str,)) or hasattr(source, "__fspath__"):
        sources = [source]
    elif isinstance(source, (list, tuple)):
        sources = list(source)
    else:
        sources = None
    if sources is None:
        store.ingest_lines(source, options)
    else:
        for path in sources:
            try:
                fh = _open_text(path)
            except OSError as exc:
                raise IngestError(path, 0, exc) from exc
            with fh:
                store.ingest_lines(fh, options, source_name=str(path))
            if options.max_triples is not None and \
                    store.ingest_stats.triples >= options.max_triples:
                break
    store.seal()
    store.ingest_stats.seconds = time.perf_counter() - t0
    return store


def from_triples(triples: Iterable[tuple[str, str, str]]) -> TripleStore:
    """Sealed store from (subject, predicate, object) term strings."""
    store = TripleStore()
    for s, p, o in triples:
        store.add(s, p, o)
    return store.seal()
