from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wordsums import (
    GuardError,
    block_slope,
    chi,
    chi_factorization,
    chi_sequence,
    constant_complexity_word,
    deviation_constant,
    factors_with_slope,
    from_finite,
    greedy_slope_cuts,
    periodic,
    slope_estimate,
    unbounded_gap_word,
)


def test_slope_estimate_periodic():
    est = slope_estimate(periodic([0, 1]), 64)
    assert est[0] == (1, Fraction(0))
    assert est[-1] == (64, Fraction(1, 2))
    ns = [n for n, _ in est]
    assert ns == [1, 2, 4, 8, 16, 32, 64]


def test_deviation_constant_alternating():
    dev = deviation_constant(periodic([0, 1]), Fraction(1, 2), 1000)
    assert dev.constant == Fraction(1, 2)
    # deviation against the wrong slope grows with L instead
    worse = deviation_constant(periodic([0, 1]), Fraction(1, 3), 999)
    assert worse.constant > 50


def test_chi_values():
    w = periodic([0, 1])
    assert [chi(w, Fraction(1, 2), m) for m in range(5)] == [0, 0, 0, 0, 0]
    assert chi(w, Fraction(1, 2), 0) == 0
    ug = unbounded_gap_word()
    assert chi_sequence(ug, 1, 8).tolist() == [-1, -1, 0, -1, -1, 0, -1, -1]
    w2 = periodic([1, 0])
    assert [chi(w2, Fraction(1, 2), m) for m in range(1, 5)] == [0, 0, 0, 0]
    assert chi(periodic([1, 1, 0]), Fraction(2, 3), 2) == 0


def test_chi_rejects_bad_args():
    with pytest.raises(ValueError):
        chi(periodic([0, 1]), Fraction(1, 2), -1)
    with pytest.raises(ValueError):
        chi_sequence(periodic([0, 1]), Fraction(1, 2), 0)


@settings(max_examples=80, deadline=None)
@given(
    st.lists(st.integers(-2, 3), min_size=8, max_size=60),
    st.integers(-2, 3),
    st.integers(1, 3),
    st.data(),
)
def test_chi_equality_is_block_slope(xs, p, q, data):
    """chi(n) == chi(m) exactly when w(nq+1..mq) has slope p/q."""
    alpha = Fraction(p, q)
    w = from_finite(xs)
    m_max = len(xs) // alpha.denominator
    if m_max < 2:
        return
    n = data.draw(st.integers(1, m_max - 1))
    m = data.draw(st.integers(n + 1, m_max))
    q_ = alpha.denominator
    same = chi(w, alpha, n) == chi(w, alpha, m)
    assert same == (block_slope(w, n * q_ + 1, m * q_) == alpha)


def test_chi_factorization_blocks_have_the_slope():
    w = constant_complexity_word(1)
    fact = chi_factorization(w, 1, 5000)
    assert fact.color == 0
    assert fact.prefix_end == fact.cuts[0]
    for a, b in zip(fact.cuts[:50], fact.cuts[1:51]):
        assert block_slope(w, a + 1, b) == 1


def test_chi_factorization_tie_goes_to_smallest_color():
    # (1 1 0 0)^inf at slope 1/2: chi(m) alternates 1, 0, 1, 0, ...
    w = periodic([1, 1, 0, 0])
    fact = chi_factorization(w, Fraction(1, 2), 16)
    # m_max = 8 gives four 1s and four 0s; the tie resolves to color 0
    assert fact.color == 0
    assert fact.cuts == (4, 8, 12, 16)


def test_chi_factorization_needs_one_block():
    with pytest.raises(ValueError):
        chi_factorization(periodic([0, 1]), Fraction(1, 2), 1)


def test_greedy_cuts_alternating():
    g = greedy_slope_cuts(periodic([0, 1]), Fraction(1, 2), 1, 20)
    assert g.cuts == (2, 4, 6, 8, 10, 12, 14, 16, 18, 20)
    assert g.gaps == (2,) * 10
    assert g.max_gap() == 2
    assert not g.truncated


def test_greedy_cuts_from_inner_start():
    g = greedy_slope_cuts(periodic([0, 1]), Fraction(1, 2), 2, 21)
    # blocks starting at position 2 ("1 0" blocks): cuts at odd positions
    assert g.cuts == (3, 5, 7, 9, 11, 13, 15, 17, 19, 21)
    assert g.gaps[0] == 3 - 2 + 1


def test_greedy_cuts_truncated_flag():
    g = greedy_slope_cuts(periodic([0, 1]), Fraction(5, 1), 1, 50)
    assert g.truncated
    assert g.cuts == ()
    with pytest.raises(ValueError):
        g.max_gap()


def test_greedy_cut_blocks_have_the_slope():
    ug = unbounded_gap_word()
    g = greedy_slope_cuts(ug, 1, 1, 2000)
    assert not g.truncated
    prev = 0
    for c in g.cuts[:40]:
        assert block_slope(ug, prev + 1, c) == 1
        prev = c


def _bruteforce_slope_factors(xs, alpha, n_max):
    found = set()
    for n in range(1, n_max + 1):
        for i in range(len(xs) - n + 1):
            blk = tuple(xs[i : i + n])
            if Fraction(sum(blk), n) == alpha:
                found.add(blk)
    return len(found)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(-2, 2), min_size=4, max_size=50),
    st.integers(-2, 2),
    st.integers(1, 3),
    st.integers(1, 8),
)
def test_factors_with_slope_matches_bruteforce(xs, p, q, n_max):
    alpha = Fraction(p, q)
    n_max = min(n_max, len(xs))
    w = from_finite(xs)
    assert factors_with_slope(w, alpha, len(xs), n_max) == _bruteforce_slope_factors(
        xs, alpha, n_max
    )


def test_scaled_prefix_guard():
    w = periodic([10**9])
    with pytest.raises(GuardError):
        deviation_constant(w, Fraction(1, 10**9), 100_000)
