import json
import random

import pytest
from hypothesis import given, strategies as st

from wheelcensus import (
    HUB,
    CountOverflowError,
    RimSignature,
    SignedWheel,
    count_switching_classes,
    is_balanced,
    is_switching_equivalent,
    normalize_to_rim,
    switch_vertex,
)

from oracles import all_words


@st.composite
def wheels(draw, min_n=3, max_n=12):
    n = draw(st.integers(min_n, max_n))
    word = st.text(alphabet="01", min_size=n, max_size=n)
    return SignedWheel(n, draw(word), draw(word))


def vertices(n):
    return [HUB, *range(1, n + 1)]


def test_switch_hub_flips_all_spokes():
    w = switch_vertex(SignedWheel.positive(4), HUB)
    assert w == SignedWheel(4, "0000", "1111")


def test_switch_rim_vertex_flips_incident_edges():
    w = switch_vertex(SignedWheel.positive(8), 1)
    # spoke 1, rim edges v8v1 (index 7) and v1v2 (index 0)
    assert w.spokes == "10000000"
    assert w.rim == "10000001"


@pytest.mark.parametrize("u", ["x", 0, 9, -1, True, 2.0])
def test_switch_rejects_bad_vertex(u):
    with pytest.raises(ValueError):
        switch_vertex(SignedWheel.positive(8), u)


@given(wheels(), st.data())
def test_switch_is_involution(w, data):
    u = data.draw(st.sampled_from(vertices(w.n)))
    assert switch_vertex(switch_vertex(w, u), u) == w


@given(wheels(), st.data())
def test_balance_is_switching_invariant(w, data):
    u = data.draw(st.sampled_from(vertices(w.n)))
    assert is_balanced(switch_vertex(w, u)) == is_balanced(w)


def test_normalize_examples():
    assert normalize_to_rim(SignedWheel.positive(7)).word == "0000000"
    w = SignedWheel(8, "00000000", "00100000")
    assert normalize_to_rim(w).word == "01100000"


def test_normalize_drawn_w8():
    # negative edges v1v2, v2v3, v4v5, v7v8
    w = SignedWheel(8, "11010010", "00000000")
    assert normalize_to_rim(w) == RimSignature.from_edges(8, {0, 1, 3, 6})
    assert normalize_to_rim(w).word == "11010010"


def test_balance_examples():
    assert is_balanced(SignedWheel.positive(6))
    assert not is_balanced(SignedWheel(6, "000100", "000000"))
    rng = random.Random(3)
    w = SignedWheel.positive(9)
    for _ in range(50):
        w = switch_vertex(w, rng.choice(vertices(9)))
        assert is_balanced(w)


@given(wheels())
def test_normal_form_has_positive_spokes_and_is_equivalent(w):
    sig = normalize_to_rim(w)
    assert is_switching_equivalent(w, sig.to_wheel())
    assert is_switching_equivalent(w, w)


@given(wheels(), st.data())
def test_switched_wheels_are_equivalent(w, data):
    u = data.draw(st.sampled_from(vertices(w.n)))
    assert is_switching_equivalent(w, switch_vertex(w, u))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_distinct_rim_words_never_equivalent(n):
    words = all_words(n)
    for a in words:
        for b in words:
            wa, wb = RimSignature(n, a).to_wheel(), RimSignature(n, b).to_wheel()
            assert is_switching_equivalent(wa, wb) == (a == b)


def test_equivalence_needs_same_n():
    with pytest.raises(ValueError):
        is_switching_equivalent(SignedWheel.positive(4), SignedWheel.positive(5))


@pytest.mark.parametrize("n", range(3, 9))
def test_normal_form_count_is_two_to_n(n):
    words = all_words(n)
    images = {normalize_to_rim(SignedWheel(n, r, s)).word for r in words for s in words}
    assert len(images) == 2**n == count_switching_classes(n)


def test_count_switching_classes():
    assert count_switching_classes(4) == 16
    assert count_switching_classes(10) == 1024
    assert count_switching_classes(127) == 2**127
    with pytest.raises(CountOverflowError):
        count_switching_classes(128)
    with pytest.raises(ValueError):
        count_switching_classes(2)


@pytest.mark.parametrize(
    "kwargs",
    [dict(n=2, rim="00", spokes="00"), dict(n=4, rim="000", spokes="0000"), dict(n=4, rim="0020", spokes="0000")],
)
def test_wheel_validation(kwargs):
    with pytest.raises(ValueError):
        SignedWheel(**kwargs)


@given(wheels())
def test_json_round_trip(w):
    assert SignedWheel.from_dict(json.loads(json.dumps(w.to_dict()))) == w


def test_dot_export_styles():
    dot = SignedWheel(4, "1000", "0001").to_dot()
    assert dot.startswith("graph W4 {")
    assert 'v1 -- v2 [sign="-1", style=dashed];' in dot
    assert 'v2 -- v3 [sign="+1", style=solid];' in dot
    assert 'v4 -- v1 [sign="+1", style=solid];' in dot
    assert 'v -- v4 [sign="-1", style=dashed];' in dot
    assert dot.count("--") == 8
