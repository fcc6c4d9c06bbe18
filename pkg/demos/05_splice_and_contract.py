"""Editing infinite words while keeping sums under control.

Splice interleaves blocks from several sources on a fixed schedule; contract
deletes a separated family of intervals.  Cutting at positions where the
coloring repeats removes whole blocks of the target slope, so spreads survive.

Run:  python demos/05_splice_and_contract.py
"""

from fractions import Fraction

from wordsums import (
    chi_factorization,
    constant_complexity_word,
    contract,
    mechanical,
    periodic,
    SeparatedIntervalSet,
    slope_estimate,
    splice,
    SpliceSchedule,
    sum_spread,
    word_slope,
)

L = 50_000


def worst_spread(w, n_max, L):
    return max(sum_spread(w, n, L) for n in range(1, n_max + 1))


def main():
    sources = [periodic([1, 0]), mechanical([2, 2]), periodic([0, 1, 1])]
    sched = SpliceSchedule([(3, 0, 2), (1, 4, 0)])
    mix = splice(sources, sched)
    print("splice of three slope-~1/2 words, schedule rows (3,0,2) / (1,4,0):")
    print("  prefix:", " ".join(str(s) for s in mix.prefix(20)))
    print(f"  worst spread for n <= 100: {worst_spread(mix, 100, L)}")
    print("  slope estimates:", [(n, str(e)) for n, e in slope_estimate(mix, 64)][-3:])

    w = constant_complexity_word(1)
    alpha = Fraction(1)
    fac = chi_factorization(w, alpha, L)
    print(f"\ncoloring cuts on the paired enumeration word: color {fac.color},"
          f" {len(fac.cuts)} cuts below {L}")

    # drop every other inter-cut block; what is left still rides slope 1
    holes = [(fac.cuts[i] + 1, fac.cuts[i + 1]) for i in range(0, len(fac.cuts) - 1, 2)]
    ivals = SeparatedIntervalSet(holes)
    out = contract(w, ivals)
    kept = L - sum(hi - lo + 1 for lo, hi in holes)
    print(f"  removed {L - kept} of the first {L} symbols")
    print(f"  spread before: {worst_spread(w, 50, L)}  after: {worst_spread(out, 50, kept)}")
    print(f"  slope of surviving prefix: {word_slope(out.factor(1, kept))}")

    print("\narithmetic deletions (width 2, period 7) from a periodic word:")
    out = contract(periodic([0, 1]), SeparatedIntervalSet.arithmetic(3, 7, 2))
    print("  prefix:", " ".join(str(s) for s in out.prefix(20)))


if __name__ == "__main__":
    main()
