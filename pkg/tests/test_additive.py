from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from oracle import eventual_period, sink_values
from sinksub.additive import (
    Case, UnsupportedDelta, WrongCase, additive_params_of, block_indices, blocks,
    build_block, build_period_word_case2, candidate_word, candidate_word_case1,
    oracle_prefix_word, period_formula, period_length, product_structure, product_word,
    reduce_params,
)
from sinksub.period import detect_period
from sinksub.verifier import verify_mex_consistency


def test_reduce_worked_case():
    p = reduce_params(5, 9)
    assert (p.d, p.case, p.k, p.g, p.M, p.K) == (9, Case.II, 4, 1, 5, 4)
    assert p.moves == (5, 14, 19)


def test_reduce_m1():
    p = reduce_params(1, 1)
    assert (p.d, p.case, p.a) == (1, Case.I, 1)
    assert all(reduce_params(1, dl).case is Case.I for dl in range(1, 30))


def test_reduce_higher_layer():
    p = reduce_params(6, 20)
    assert (p.d, p.case, p.k, p.g, p.M, p.K, p.layer) == (8, Case.II, 2, 2, 3, 1, 1)
    assert period_formula(p) == 162
    vals = sink_values(p.moves, 3 * 162 + 60)
    assert eventual_period(vals) == (0, 162)


def test_boundary_d_equals_m_is_case1():
    for m in range(1, 9):
        for dl in (m, 3 * m, 5 * m):
            p = reduce_params(m, dl)
            assert p.case is Case.I and p.d == m
            other = m * (m + 2 * dl + p.d) // gcd(m, p.d)
            assert period_formula(p) == other


@given(st.integers(1, 40), st.integers(1, 200))
def test_param_invariants(m, dl):
    p = reduce_params(m, dl)
    s1, s2, s3 = p.moves
    assert s1 < s2 < s3 and s3 == s1 + s2
    assert 0 <= p.d < 2 * m
    assert (p.case is Case.I) == (p.d <= m)
    if p.case is Case.II:
        assert 1 <= p.k <= m - 1 and p.g == gcd(m, p.k)
        assert gcd(p.M, p.K) == 1 and p.M * p.g == m and p.K * p.g == p.k
    else:
        assert p.a == (dl - p.d) // (2 * m) + 1
    assert additive_params_of(p.moves) == p


@pytest.mark.parametrize("m, delta, expected", [
    (5, 6, 115), (5, 9, 160), (6, 8, 90), (6, 10, 108),
])
def test_paper_period_lengths(m, delta, expected):
    assert period_length(m, delta) == expected


def test_small_case1_period_against_oracle():
    p = reduce_params(2, 5)
    assert (p.d, p.case) == (1, Case.I)
    assert period_formula(p) == 15
    assert eventual_period(sink_values((2, 7, 9), 200)) == (0, 15)


@pytest.mark.parametrize("m, delta, word", [
    (1, 1, "1230"),
    (2, 2, "11223300"),
    (2, 4, "11221122003300"),
])
def test_case1_words(m, delta, word):
    p = reduce_params(m, delta)
    w = candidate_word_case1(p)
    assert w.digits() == word
    assert w.total_length == 3 * m + 2 * delta - p.d
    assert "".join(map(str, sink_values(p.moves, len(word)))) == word


def test_case1_d_zero_drops_threes():
    w = candidate_word_case1(reduce_params(3, 6))
    assert w.runlength() == "1^3 2^3 1^3 2^3 0^3 3^3 0^3"


def test_case1_rejects_case2():
    with pytest.raises(WrongCase):
        candidate_word_case1(reduce_params(5, 9))


@pytest.mark.parametrize("i, m, k, expected", [
    (0, 5, 4, (0, 4, 4)),
    (1, 5, 4, (4, 3, 3)),
    (2, 6, 2, (4, 0, 6)),
])
def test_block_indices(i, m, k, expected):
    ix = block_indices(i, m, k)
    assert (ix.alpha, ix.beta, ix.gamma) == expected


@given(st.integers(2, 30).flatmap(lambda m: st.tuples(st.just(m), st.integers(1, m - 1))))
def test_block_index_invariants(mk):
    m, k = mk
    prev = None
    for i in range(m):
        ix = block_indices(i, m, k)
        assert 0 <= ix.alpha < m and 0 <= ix.beta < m and 1 <= ix.gamma <= m
        assert ix.gamma == (ix.beta if ix.beta else m)
        assert ix.alpha == (prev.beta if prev else 0)
        prev = ix


def _runs(block):
    return [(f.symbol, f.length) for f in block.factors if f.length]


def test_build_block_b():
    b = build_block(block_indices(0, 5, 4), 5, 4)
    assert b.tag == "B" and not b.zeta
    assert _runs(b) == [(1, 5), (2, 5), (1, 4), (3, 1), (2, 4), (0, 5), (3, 4)]
    assert b.length == 28


def test_build_block_c():
    b = build_block(block_indices(1, 5, 4), 5, 4)
    assert b.tag == "C" and b.length == 33
    assert [f.label for f in b.factors] == ["A1", "A2", "A3"] + [f"C{j}" for j in range(1, 10)]


@pytest.mark.parametrize("m", [2, 3, 5, 7, 9])
def test_lower_case_blocks(m):
    # k = 1: 1^(m-i) 0^i 2^(m-i) 1^(1+i) 3^(m-1-i) 2^(1+i) 0^(m-i) 3^(1+i)
    for i, b in enumerate(blocks(m, 1)):
        expect = [(1, m - i), (0, i), (2, m - i), (1, 1 + i), (3, m - 1 - i),
                  (2, 1 + i), (0, m - i), (3, 1 + i)]
        assert b.tag == "B"
        assert _runs(b) == [e for e in expect if e[1]]
        assert b.zeta == (i == m - 1)


@pytest.mark.parametrize("m, k, cycle, product, length", [
    (5, 1, "BBBBBZ", "BBBBBZ", 115),
    (5, 4, "BCCCBZ", "BCCCBZ", 160),
    (6, 2, "BBBZ", "BBBZBBBZ", 90),
    (6, 4, "BCBZ", "BCBZBCBZ", 108),
])
def test_case2_structures(m, k, cycle, product, length):
    w = build_period_word_case2(reduce_params(m, m + k))
    assert w.structure() == cycle
    assert product_structure(m, k) == product
    assert w.total_length == length == m * (4 * m + 3 * k) // gcd(m, k)
    assert w.factors[-1].symbol == 0 and w.factors[-1].length == m
    assert product_word(m, k).total_length == m * (4 * m + 3 * k)


def test_case2_beyond_first_layer_unsupported():
    with pytest.raises(UnsupportedDelta):
        build_period_word_case2(reduce_params(3, 10))
    with pytest.raises(UnsupportedDelta):
        build_period_word_case2(reduce_params(5, 16))


def test_case2_rejects_case1():
    with pytest.raises(WrongCase):
        build_period_word_case2(reduce_params(5, 3))


def test_oracle_prefix_word():
    assert oracle_prefix_word(reduce_params(1, 1)).digits() == "1230"
    p = reduce_params(5, 9)
    assert oracle_prefix_word(p).digits() == build_period_word_case2(p).digits()


def test_oracle_word_higher_layer():
    p = reduce_params(3, 10)
    assert (p.d, p.case, p.k) == (4, Case.II, 1)
    w = oracle_prefix_word(p)
    assert w.total_length == 81
    assert verify_mex_consistency(w, p) == []
    assert candidate_word(p).digits() == w.digits()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10).flatmap(lambda m: st.tuples(st.just(m), st.integers(1, 6 * m))))
def test_constructions_match_brute_force(md):
    m, dl = md
    p = reduce_params(m, dl)
    if p.case is Case.II and dl >= 2 * m:
        return
    w = candidate_word(p)
    assert w.total_length == period_formula(p)
    assert w.digits() == "".join(map(str, sink_values(p.moves, w.total_length)))


@given(st.integers(2, 10).flatmap(lambda m: st.tuples(st.just(m), st.integers(m + 1, 2 * m - 1))))
def test_layer_increment(md):
    m, d = md
    g = gcd(m, d)
    for n in range(4):
        assert period_length(m, d + 2 * m * (n + 1)) - period_length(m, d + 2 * m * n) == 4 * m * m // g


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_layer_increment_detected(m):
    for d in range(m + 1, 2 * m):
        periods = [detect_period((m, m + d + 2 * m * n, 2 * m + d + 2 * m * n)).period
                   for n in range(3)]
        step = 4 * m * m // gcd(m, d)
        assert periods[1] - periods[0] == step and periods[2] - periods[1] == step
