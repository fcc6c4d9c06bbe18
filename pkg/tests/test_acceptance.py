"""Acceptance gate: every headline capability at its stated tolerance.

Each test prints one pass/fail line (visible with pytest -s or in
captured output on failure).  Run with:

    pytest tests/test_acceptance.py -v -s
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np

from wordsums import (
    Alphabet,
    LatticeMap,
    Morphism,
    SeparatedIntervalSet,
    SpliceSchedule,
    abelian_complexity,
    additive_complexity,
    anchor_matrix,
    apply_morphism,
    block_slope,
    chi_factorization,
    chi_sequence,
    constant_complexity_word,
    constant_tail_word,
    contract,
    find_additive_kpower,
    find_anchored_power,
    find_kpower_mod_mu,
    from_finite,
    greedy_slope_cuts,
    is_anchor,
    lattice_complexity,
    mechanical,
    mirror_anchor,
    morphic_fixed_point,
    naive_complexity_oracle,
    periodic,
    slope_estimate,
    splice,
    sum_spread,
    unbounded_gap_word,
    unbounding_stream,
    verify_power,
)


@contextmanager
def _criterion(num, label):
    try:
        yield
    except BaseException:
        print(f"[criterion {num:02d}] FAIL: {label}", flush=True)
        raise
    print(f"[criterion {num:02d}] PASS: {label}", flush=True)


def _fibonacci():
    return morphic_fixed_point(Morphism({0: (0, 1), 1: (0,)}), 0)


def _thue_morse():
    return morphic_fixed_point(Morphism({0: (0, 1), 1: (1, 0)}), 0)


def test_criterion_01_constant_additive_complexity():
    with _criterion(1, "paired enumeration words have 2k+1 sums at every length"):
        t0 = time.time()
        for k in (1, 2, 3):
            w = constant_complexity_word(k)
            P = w.prefix_sums(200_000)
            for n in range(1, 201):
                s = P[n:] - P[:-n]
                assert np.unique(s).size == 2 * k + 1, (k, n)
        assert time.time() - t0 < 60.0


def test_criterion_02_staircase_exact_complexity():
    with _criterion(2, "staircase words hit additive = abelian = n at every length"):
        for n in range(1, 7):
            w = constant_tail_word(n)
            for i in range(1, 101):
                assert additive_complexity(w, i, 1000) == n, (n, i)
                assert abelian_complexity(w, i, 1000) == n, (n, i)


def _random_non_anchor(rng):
    while True:
        letters = rng.sample(range(-3, 4), rng.randint(2, 4))
        images = {
            s: tuple(rng.randint(-3, 3) for _ in range(rng.randint(1, 3)))
            for s in letters
        }
        phi = Morphism(images)
        if len(set(phi.image_slopes().values())) >= 2:
            return phi


def test_criterion_03_anchor_test_and_witnesses():
    with _criterion(3, "mirror morphisms are weight-k anchors; non-anchors yield witnesses"):
        for k in range(1, 11):
            phi = mirror_anchor(k)
            rep = is_anchor(phi)
            assert rep.is_anchor and rep.weight == Fraction(k)
            M, t_alpha = anchor_matrix(phi)
            ta = t_alpha(k)
            for i in range(M.shape[0]):
                assert sum(int(M[i, j]) * ta[j] for j in range(M.shape[1])) == 0
        rng = random.Random(20260814)
        for _ in range(1000):
            phi = _random_non_anchor(rng)
            rep = is_anchor(phi)
            assert not rep.is_anchor
            b1, b2 = rep.witness
            i1, i2 = phi(b1), phi(b2)
            assert len(i1) == len(i2)
            assert sum(i1.symbols) != sum(i2.symbols)


def _max_spread_over_doubling_n(w, L):
    best = 0
    n = 1
    while n <= L:
        best = max(best, sum_spread(w, n, L))
        n *= 2
    return best


def test_criterion_04_non_anchor_images_unbounded():
    with _criterion(4, "non-anchor images of witness streams grow their spread"):
        rng = random.Random(97)
        for _ in range(20):
            phi = _random_non_anchor(rng)
            img = apply_morphism(phi, unbounding_stream(phi))
            s1 = _max_spread_over_doubling_n(img, 1_000)
            s2 = _max_spread_over_doubling_n(img, 10_000)
            s3 = _max_spread_over_doubling_n(img, 100_000)
            assert s1 < s2 < s3, (repr(phi), s1, s2, s3)


def test_criterion_05_bounded_spread_with_unbounded_gaps():
    with _criterion(5, "block word keeps spread <= 4 while equal-slope gaps grow"):
        w = unbounded_gap_word()
        P = w.prefix_sums(100_000)
        for n in range(1, 501):
            s = P[n:] - P[:-n]
            assert int(s.max() - s.min()) <= 4, n
        colors = chi_sequence(w, 1, 100_000)
        assert int(colors.min()) >= -2 and int(colors.max()) <= 2
        small = greedy_slope_cuts(w, 1, 1, 1_000)
        large = greedy_slope_cuts(w, 1, 1, 100_000)
        assert not small.truncated and not large.truncated
        assert large.max_gap() > small.max_gap()


def test_criterion_06_chi_equality_matches_block_slope():
    with _criterion(6, "chi equality coincides with exact block slope everywhere"):
        cases = [
            (periodic([0, 1]), Fraction(1, 2)),
            (constant_complexity_word(1), Fraction(1)),
            (unbounded_gap_word(), Fraction(1)),
        ]
        rng = random.Random(5)
        for w, alpha in cases:
            p, q = alpha.numerator, alpha.denominator
            M = 500
            colors = chi_sequence(w, alpha, M)
            # independent route: fresh cumulative sums of the raw symbols
            raw = np.cumsum(np.asarray(w.prefix(M * q)))
            ends = raw[np.arange(1, M + 1) * q - 1]
            same_chi = colors[:, None] == colors[None, :]
            sums = ends[None, :] - ends[:, None]        # sum over w(nq+1..mq)
            span = (np.arange(M)[None, :] - np.arange(M)[:, None]) * q
            slope_hits = sums * q == span * p
            upper = np.triu(np.ones((M, M), dtype=bool), k=1)
            assert np.array_equal(same_chi & upper, slope_hits & upper)
            for _ in range(50):
                n = rng.randint(1, M - 1)
                m = rng.randint(n + 1, M)
                lhs = colors[n - 1] == colors[m - 1]
                rhs = block_slope(w, n * q + 1, m * q) == alpha
                assert lhs == rhs, (w.label, n, m)


def test_criterion_07_fast_paths_match_naive_oracle():
    with _criterion(7, "window counting agrees with the per-window oracle"):
        rng = random.Random(777)
        for _ in range(100):
            letters = rng.sample(range(-3, 4), rng.randint(1, 4))
            L = rng.randint(2, 200)
            xs = [rng.choice(letters) for _ in range(L)]
            w = from_finite(xs)
            ab = Alphabet(xs)
            mus = [
                None,
                LatticeMap.parikh_map(ab),
                LatticeMap({s: (rng.randint(-2, 2), rng.randint(-2, 2)) for s in ab}),
            ]
            for mu in mus:
                for n in range(1, L + 1):
                    fast = (
                        additive_complexity(w, n, L)
                        if mu is None
                        else lattice_complexity(w, mu, n, L)
                    )
                    assert fast == naive_complexity_oracle(w, mu, n, L), (xs, n)


def test_criterion_08_sturmian_words():
    with _criterion(8, "mechanical words are balanced and match the floor formula"):
        fib = _fibonacci()
        P = fib.prefix_sums(100_000)
        for n in range(1, 501):
            s = P[n:] - P[:-n]
            assert int(s.max() - s.min()) <= 1, n
            assert np.unique(s).size <= 2, n
        for cf in ([2], [2, 2], [2, 1, 1, 2]):
            x = Fraction(0)
            for a in reversed(cf):
                x = Fraction(1, a + x)
            w = mechanical(cf)
            L = 10_000
            i = np.arange(L + 1, dtype=np.int64)
            floors = (x.numerator * i) // x.denominator
            assert np.array_equal(np.asarray(w.prefix(L)), np.diff(floors))


def test_criterion_09_contraction_keeps_spread():
    with _criterion(9, "removing alternating equal-color blocks preserves the spread bound"):
        w = constant_complexity_word(1)
        fact = chi_factorization(w, 1, 250_000)
        assert fact.color == 0
        cuts = fact.cuts
        ivals = [(cuts[i] + 1, cuts[i + 1]) for i in range(0, len(cuts) - 1, 2)]
        cw = contract(w, SeparatedIntervalSet(ivals))
        L = 100_000
        P_orig = w.prefix_sums(L)
        P_new = cw.prefix_sums(L)
        pre = post = 0
        for n in range(1, 301):
            s = P_orig[n:] - P_orig[:-n]
            pre = max(pre, int(s.max() - s.min()))
            s = P_new[n:] - P_new[:-n]
            post = max(post, int(s.max() - s.min()))
        assert post <= pre + 2, (pre, post)
        # block boundaries in the contracted word keep slope exactly 1
        boundary = cuts[0]
        checked = 0
        assert Fraction(int(P_new[boundary]), boundary) == 1
        for i in range(1, len(cuts) - 1, 2):
            boundary += cuts[i + 1] - cuts[i]
            if boundary > L:
                break
            assert Fraction(int(P_new[boundary]), boundary) == 1, boundary
            checked += 1
        assert checked > 1000


def test_criterion_10_splice_preserves_spread_and_slope():
    with _criterion(10, "splicing slope-1 words keeps spread <= 4 and slope 1"):
        sp = splice(
            [periodic([1]), periodic([0, 2]), periodic([2, 0])],
            SpliceSchedule(((1, 2, 2),)),
        )
        P = sp.prefix_sums(100_000)
        for n in range(1, 301):
            s = P[n:] - P[:-n]
            assert int(s.max() - s.min()) <= 4, n
        est = slope_estimate(sp, 100_000)
        assert est[-1][1] == 1
        assert all(abs(v - 1) <= Fraction(3, n) for n, v in est)


def test_criterion_11_power_witnesses():
    with _criterion(11, "additive and abelian powers are found and re-verified"):
        t0 = time.time()
        t1 = constant_complexity_word(1)
        wit = find_additive_kpower(t1, 4, 100_000)
        assert wit is not None and wit.count == 4
        assert verify_power(t1, wit)
        fib = _fibonacci()
        wit = find_additive_kpower(fib, 4, 100_000)
        assert wit is not None and wit.count == 4
        assert verify_power(fib, wit)
        tm = _thue_morse()
        mu = LatticeMap.parikh_map(Alphabet([0, 1]))
        wit = find_kpower_mod_mu(tm, mu, 3, 10_000)
        assert wit is not None and wit.count == 3
        assert verify_power(tm, wit, mu)
        wit = find_anchored_power(t1, 1, 4, 3, 100_000)
        assert wit is not None and wit.count == 3
        assert wit.block_length % 4 == 0
        assert block_slope(t1, wit.start, wit.start + wit.block_length - 1) == 1
        assert verify_power(t1, wit)
        assert time.time() - t0 < 120.0


def test_criterion_12_thue_morse_abelian_profile():
    with _criterion(12, "doubling word has 2 Parikh classes at odd, 3 at even lengths"):
        tm = _thue_morse()
        mu = LatticeMap.parikh_map(Alphabet([0, 1]))
        for n in range(2, 101):
            expect = 3 if n % 2 == 0 else 2
            assert lattice_complexity(tm, mu, n, 10_000) == expect, n
        for n in (2, 3, 10, 51):
            expect = 3 if n % 2 == 0 else 2
            assert naive_complexity_oracle(tm, mu, n, 10_000) == expect, n
