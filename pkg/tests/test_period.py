import random

import pytest
from hypothesis import given, settings, strategies as st

from oracle import eventual_period, sink_values, wall_values
from sinksub.nimcore import grundy_sequence
from sinksub.period import (
    HorizonExhausted, canonical_rotation, detect_period, minimal_rotation_equivalent,
)


def test_two_five_sink():
    info = detect_period([2, 5], "sink")
    assert (info.preperiod, info.period, info.word) == (3, 7, "2100110")
    assert info.start_index == 1


def test_two_five_wall():
    info = detect_period([2, 5], "wall")
    assert (info.preperiod, info.period, info.word) == (0, 7, "0011021")
    assert info.start_index == 0


def test_initial_segment():
    info = detect_period([1, 2, 3], "sink")
    assert (info.preperiod, info.period, info.word) == (0, 4, "1230")


def test_horizon_exhausted_reports_bound():
    with pytest.raises(HorizonExhausted) as exc:
        detect_period([3, 7, 10], "sink", horizon=22)
    assert exc.value.bound == 4 ** 10
    assert "22" in str(exc.value)


def test_horizon_too_small_rejected():
    with pytest.raises(ValueError):
        detect_period([2, 5], "sink", horizon=5)


def _check_period(moves, conv, info):
    S = sorted(moves)
    n = info.preperiod + 2 * info.period + max(S) + 5
    vals = grundy_sequence(S, conv, n).tolist()
    pre, per = info.preperiod, info.period
    # soundness
    assert all(vals[x] == vals[x + per] for x in range(pre, n - per))
    assert list(info.period_word) == vals[pre:pre + per]
    # minimal period: no prime-quotient period on the tail
    for q in range(2, per + 1):
        if per % q == 0:
            d = per // q
            assert not all(vals[x] == vals[x + d] for x in range(pre, pre + per))
    # minimal pre-period
    if pre > 0:
        assert vals[pre - 1] != vals[pre - 1 + per]


@settings(max_examples=80, deadline=None)
@given(st.sets(st.integers(1, 10), min_size=1, max_size=4), st.sampled_from(["sink", "wall"]))
def test_detection_sound_and_minimal(moves, conv):
    info = detect_period(moves, conv)
    _check_period(moves, conv, info)
    assert detect_period(moves, conv) == info


@settings(max_examples=40, deadline=None)
@given(st.sets(st.integers(1, 8), min_size=1, max_size=3))
def test_detection_matches_naive_search(moves):
    S = sorted(moves)
    info = detect_period(S, "sink")
    n = 3 * (info.preperiod + info.period) + 4 * max(S)
    assert eventual_period(sink_values(S, n)) == (info.preperiod, info.period)
    info = detect_period(S, "wall")
    n = 3 * (info.preperiod + info.period) + 4 * max(S)
    assert eventual_period(wall_values(S, n)) == (info.preperiod, info.period)


def test_random_sets_settle_within_horizon():
    rng = random.Random(1966)
    for _ in range(200):
        top = rng.randint(1, 14)
        size = rng.randint(1, top)
        S = sorted(set(rng.sample(range(1, top + 1), size)) | {top})
        for conv in ("sink", "wall"):
            info = detect_period(S, conv, horizon=10**6)
            assert info.period >= 1


@pytest.mark.parametrize("a, b, expected", [
    ("0011021", "2100110", True),
    ("01", "01", True),
    ("01", "00", False),
    ("012", "01", False),
    ((1, 2, 3, 0), (0, 1, 2, 3), True),
    ("0011", "0101", False),
])
def test_rotation_equivalence(a, b, expected):
    assert minimal_rotation_equivalent(a, b) is expected


@given(st.lists(st.integers(0, 3), min_size=1, max_size=12), st.integers(0, 20))
def test_canonical_rotation_is_least_rotation(w, r):
    rots = [tuple(w[i:] + w[:i]) for i in range(len(w))]
    assert canonical_rotation(w) == min(rots)
    r %= len(w)
    assert minimal_rotation_equivalent(w, w[r:] + w[:r])
