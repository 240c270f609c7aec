"""Name-addressable registry over all relatedness method variants.

Every method exposes a raw score plus a conversion tag saying how that
score maps onto a higher-is-more-related scale: distances bounded by
[0, 1] flip with ``1 - v``, unbounded distances with ``1 / (1 + v)``,
and native relatedness scores pass through unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional
from weakref import WeakKeyDictionary

from .measures.adjacent import lod_jaccard, lod_overlap, wlm_distance
from .measures.patterns import ldsd, ldsdgn, pldsd
from .measures.weights import (
    excl_relatedness,
    icm,
    max_triple_weight,
    proximity,
    psi,
    reword,
)
from .store import TripleStore


@dataclass(frozen=True)
class Params:
    """Shared knobs; each method reads only the ones it defines."""
    h: int = 2                      # path length bound
    m: int = 2                      # chain length bound
    k: int = 5                      # paths kept by the exclusivity method
    alpha: float = 0.25             # per-step damping, exclusivity method
    log_base: float = 10.0          # information-content logarithms
    pattern_log_base: float = math.e  # pattern-count normalizer logarithms
    weights: str = "predicate_ic"   # proximity weighting scheme
    weight_table: Optional[dict[str, float]] = field(default=None, hash=False)


class MethodSpec(NamedTuple):
    score: Callable[[TripleStore, int, int, Params], float]
    conversion: str


_WMAX_CACHE: "WeakKeyDictionary[TripleStore, dict]" = WeakKeyDictionary()


def _cached_w_max(store: TripleStore, kind: str, base: float) -> float:
    per_store = _WMAX_CACHE.setdefault(store, {})
    key = (kind, base)
    if key not in per_store:
        per_store[key] = max_triple_weight(store, kind, base)
    return per_store[key]


def _icm(kind: str):
    def run(store: TripleStore, a: int, b: int, p: Params) -> float:
        return icm(store, a, b, p.h, kind, p.log_base,
                   w_max=_cached_w_max(store, kind, p.log_base))
    return run


def _reword(strategy: str):
    def run(store: TripleStore, a: int, b: int, p: Params) -> float:
        return reword(store, strategy, a, b, p.h, p.log_base)
    return run


def _ldsd(variant: str):
    def run(store: TripleStore, a: int, b: int, p: Params) -> float:
        return ldsd(store, variant, a, b, p.pattern_log_base)
    return run


def _ldsdgn(variant: str):
    def run(store: TripleStore, a: int, b: int, p: Params) -> float:
        return ldsdgn(store, variant, a, b, p.pattern_log_base)
    return run


def _asrmp(variant: str):
    def run(store: TripleStore, a: int, b: int, p: Params) -> float:
        return psi(store, variant, p.m, a, b)
    return run


_REGISTRY: dict[str, MethodSpec] = {
    "wlm": MethodSpec(
        lambda st, a, b, p: wlm_distance(st, a, b), "inverse"),
    "lod-overlap": MethodSpec(
        lambda st, a, b, p: lod_overlap(st, a, b), "identity"),
    "lod-jaccard": MethodSpec(
        lambda st, a, b, p: lod_jaccard(st, a, b), "identity"),
    "ldsd-dw": MethodSpec(_ldsd("dw"), "one_minus"),
    "ldsd-iw": MethodSpec(_ldsd("iw"), "one_minus"),
    "ldsd-cw": MethodSpec(_ldsd("cw"), "one_minus"),
    "ldsdgn-alpha": MethodSpec(_ldsdgn("alpha"), "one_minus"),
    "ldsdgn-beta": MethodSpec(_ldsdgn("beta"), "one_minus"),
    "ldsdgn-gamma": MethodSpec(_ldsdgn("gamma"), "one_minus"),
    "pldsd": MethodSpec(
        lambda st, a, b, p: pldsd(st, a, b, p.h, p.pattern_log_base),
        "identity"),
    "icm-joint": MethodSpec(_icm("joint_ic"), "identity"),
    "icm-comb": MethodSpec(_icm("comb_ic"), "identity"),
    "icm-pmi": MethodSpec(_icm("ic_pmi"), "identity"),
    "reword-incoming": MethodSpec(_reword("incoming"), "identity"),
    "reword-outgoing": MethodSpec(_reword("outgoing"), "identity"),
    "reword-average": MethodSpec(_reword("average"), "identity"),
    "reword-full": MethodSpec(_reword("full"), "identity"),
    "reword-mip": MethodSpec(_reword("mip"), "identity"),
    "exclm": MethodSpec(
        lambda st, a, b, p: excl_relatedness(st, a, b, p.h, p.k, p.alpha),
        "identity"),
    "asrmp-a": MethodSpec(_asrmp("a"), "identity"),
    "asrmp-b": MethodSpec(_asrmp("b"), "identity"),
    "asrmp-c": MethodSpec(_asrmp("c"), "identity"),
    "proxm": MethodSpec(
        lambda st, a, b, p: proximity(st, a, b, p.h, p.weights,
                                      p.weight_table, p.log_base),
        "identity"),
}

# reword-mip is a building block of reword-full and scores single pairs
# fine, but it is not part of the batch lineup.
ALL_METHODS: tuple[str, ...] = (
    "wlm",
    "lod-overlap",
    "lod-jaccard",
    "ldsd-dw",
    "ldsd-iw",
    "ldsd-cw",
    "ldsdgn-alpha",
    "ldsdgn-beta",
    "ldsdgn-gamma",
    "pldsd",
    "icm-joint",
    "icm-comb",
    "icm-pmi",
    "reword-incoming",
    "reword-outgoing",
    "reword-average",
    "reword-full",
    "exclm",
    "asrmp-a",
    "asrmp-b",
    "asrmp-c",
    "proxm",
)

assert set(ALL_METHODS) | {"reword-mip"} == set(_REGISTRY)


def method_names() -> tuple[str, ...]:
    return ALL_METHODS


def is_method(name: str) -> bool:
    return name in _REGISTRY


def conversion(method: str) -> str:
    return _spec(method).conversion


def _spec(method: str) -> MethodSpec:
    try:
        return _REGISTRY[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose one of "
                         f"{', '.join(ALL_METHODS)}") from None


def to_relatedness(value: float, kind: str) -> float:
    """Map a raw score onto the higher-is-more-related scale."""
    if kind == "identity":
        return value
    if kind == "inverse":
        if math.isinf(value):
            return 0.0
        return 1.0 / (1.0 + value)
    if kind == "one_minus":
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"distance out of [0, 1]: {value}")
        return 1.0 - value
    raise ValueError(f"unknown conversion {kind!r}")


def score(store: TripleStore, method: str, a: int, b: int,
          params: Optional[Params] = None) -> float:
    """Raw value of the named method on a handle pair."""
    spec = _spec(method)
    return spec.score(store, a, b, params or Params())


def relatedness(store: TripleStore, method: str, a: int, b: int,
                params: Optional[Params] = None) -> float:
    """Converted, higher-is-more-related value of the named method."""
    spec = _spec(method)
    return to_relatedness(spec.score(store, a, b, params or Params()),
                          spec.conversion)
