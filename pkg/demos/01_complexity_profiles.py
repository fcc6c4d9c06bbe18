"""Tour of the word families and their sum-based complexity profiles.

Run:  python demos/01_complexity_profiles.py
"""

from wordsums import (
    constant_complexity_word,
    constant_tail_word,
    mechanical,
    morphic_fixed_point,
    Morphism,
    periodic,
    profile,
    unbounded_gap_word,
)

L = 20_000


def show(name, w, n_max=8, kind="additive"):
    prof = profile(w, n_max, L, kind=kind)
    head = " ".join(f"{r.count}" for r in prof.rows)
    spread = " ".join(f"{r.spread}" for r in prof.rows)
    print(f"{name:28s} counts: {head:24s} spreads: {spread}")


def main():
    print(f"additive profiles over the first {L} symbols, n = 1..8\n")
    show("(0 1)^inf", periodic([0, 1]))
    show("Thue-Morse", morphic_fixed_point(Morphism({0: (0, 1), 1: (1, 0)}), 0))
    show("Fibonacci", morphic_fixed_point(Morphism({0: (0, 1), 1: (0,)}), 0))
    show("mechanical 2/5", mechanical([2, 2]))
    for k in (1, 2, 3):
        # paired enumeration: every length sees exactly 2k+1 distinct sums
        show(f"paired enumeration k={k}", constant_complexity_word(k))
    for n in (2, 4):
        # staircase: additive and abelian complexity are constantly n
        show(f"staircase n={n}", constant_tail_word(n))
    show("bounded-spread block word", unbounded_gap_word())

    print("\nabelian view of Thue-Morse (2 classes at odd n, 3 at even n):")
    show("Thue-Morse / Parikh", morphic_fixed_point(Morphism({0: (0, 1), 1: (1, 0)}), 0), kind="abelian")


if __name__ == "__main__":
    main()
