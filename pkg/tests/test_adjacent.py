import math
import random

import pytest

from helpers import random_store, sample_pair
from kgrel import from_triples
from kgrel.measures.adjacent import (
    in_link_sets,
    lod_jaccard,
    lod_overlap,
    wlm_distance,
)


def test_in_link_sets_fixture_pins(fx, h):
    a, b = in_link_sets(fx, h["ra"], h["rb"])
    assert a == {h[n] for n in ("rb", "r4", "r9", "r11")}
    assert b == {h[n] for n in ("ra", "r4", "r7", "r8", "r11")}


def test_wlm_fixture_value(fx, h):
    want = (math.log(5) - math.log(2)) / (math.log(13) - math.log(4))
    assert wlm_distance(fx, h["ra"], h["rb"]) == pytest.approx(want, abs=1e-12)


def test_wlm_identical_sets_is_zero(fx, h):
    assert wlm_distance(fx, h["ra"], h["ra"]) == 0.0
    # two resources with the same single in-linker
    st = from_triples([
        ("http://t/s", "http://t/p", "http://t/x"),
        ("http://t/s", "http://t/p", "http://t/y"),
        ("http://t/x", "http://t/q", "http://t/s"),
    ])
    x, y = st.handle("http://t/x"), st.handle("http://t/y")
    assert wlm_distance(st, x, y) == 0.0


def test_wlm_disjoint_sets_is_infinite(fx, h):
    # r5 is linked only from r10, ra is not
    assert wlm_distance(fx, h["r5"], h["ra"]) == math.inf


def test_wlm_no_in_links_at_all():
    st = from_triples([
        ("http://t/x", "http://t/p", "http://t/m"),
        ("http://t/y", "http://t/q", "http://t/m"),
    ])
    x, y = st.handle("http://t/x"), st.handle("http://t/y")
    assert wlm_distance(st, x, y) == 1.0


def test_wlm_symmetry():
    rng = random.Random(43)
    for _ in range(30):
        st = random_store(rng)
        a, b = sample_pair(rng, st)
        assert wlm_distance(st, a, b) == wlm_distance(st, b, a)


def test_lod_fixture_pins(fx, h):
    assert lod_overlap(fx, h["ra"], h["rb"]) == pytest.approx(5 / 7, abs=1e-15)
    assert lod_jaccard(fx, h["ra"], h["rb"]) == pytest.approx(5 / 9, abs=1e-15)


def test_lod_identity_is_one(fx, h):
    for n in ("ra", "rb", "r3", "r5"):
        assert lod_overlap(fx, h[n], h[n]) == 1.0
        assert lod_jaccard(fx, h[n], h[n]) == 1.0


def test_lod_symmetry_and_bounds():
    rng = random.Random(47)
    for _ in range(30):
        st = random_store(rng)
        a, b = sample_pair(rng, st)
        ov, ja = lod_overlap(st, a, b), lod_jaccard(st, a, b)
        assert ov == lod_overlap(st, b, a)
        assert ja == lod_jaccard(st, b, a)
        assert 0.0 <= ja <= ov <= 1.0


def test_lod_type_only_neighbors_do_not_count(fx, h):
    # r2 is reachable from ra only through a type link, so its
    # description is just itself and the overlap with ra is empty
    assert lod_overlap(fx, h["r2"], h["r1"]) == 0.0
