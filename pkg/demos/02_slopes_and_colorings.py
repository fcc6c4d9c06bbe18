"""Slopes, deviation constants, the chi coloring, and slope-preserving cuts.

Run:  python demos/02_slopes_and_colorings.py
"""

from fractions import Fraction

from wordsums import (
    chi_factorization,
    chi_sequence,
    deviation_constant,
    greedy_slope_cuts,
    mechanical,
    slope_estimate,
    unbounded_gap_word,
)

L = 100_000


def main():
    w = unbounded_gap_word()
    print("prefix:", " ".join(str(s) for s in w.prefix(24)))

    print("\nslope estimates at doubling lengths:")
    for n, est in slope_estimate(w, 64):
        print(f"  n={n:3d}  sum/n = {est} ~ {float(est):.4f}")

    alpha = Fraction(1)
    dev = deviation_constant(w, alpha, L)
    print(f"\nevery factor of the length-{L} prefix has sum within"
          f" {dev.constant} of {alpha} times its length")

    print("\nchi coloring at slope 1 (block sums minus expected):")
    chis = chi_sequence(w, alpha, 40)
    print(" ", " ".join(f"{c:+d}" for c in chis[1:]))

    fac = chi_factorization(w, alpha, L // 1)
    print(f"\nmost frequent color: {fac.color}; first cuts: {fac.cuts[:8]}")
    print("every block between consecutive cuts has sum/length exactly", alpha)

    greedy = greedy_slope_cuts(w, alpha, 1, L)
    print(f"\ngreedy cuts from position 1: {len(greedy.cuts)} blocks, max gap {greedy.max_gap()}")
    print("gap growth at increasing prefix lengths:")
    for prefix_len in (1_000, 10_000, 100_000):
        g = greedy_slope_cuts(w, alpha, 1, prefix_len)
        print(f"  L={prefix_len:6d}  max gap {g.max_gap()}")

    print("\nsame machinery on a mechanical word with slope 5/13:")
    m = mechanical([2, 1, 1, 2])
    print("  estimates:", [(n, str(e)) for n, e in slope_estimate(m, 32)][-3:])
    print("  deviation at 5/13:", deviation_constant(m, Fraction(5, 13), 10_000).constant)


if __name__ == "__main__":
    main()
