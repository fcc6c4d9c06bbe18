"""Finding additive k-powers: k adjacent blocks of equal length and sum.

Run:  python demos/04_power_witnesses.py
"""

from fractions import Fraction

from wordsums import (
    constant_complexity_word,
    find_additive_kpower,
    find_anchored_power,
    find_kpower_mod_mu,
    LatticeMap,
    morphic_fixed_point,
    Morphism,
    verify_power,
)


def main():
    tm = morphic_fixed_point(Morphism({0: (0, 1), 1: (1, 0)}), 0)
    fib = morphic_fixed_point(Morphism({0: (0, 1), 1: (0,)}), 0)
    w1 = constant_complexity_word(1)

    for name, w, k in (("Thue-Morse", tm, 2), ("Fibonacci", fib, 4), ("paired enum k=1", w1, 4)):
        wit = find_additive_kpower(w, k, 100_000)
        ok = verify_power(w, wit)
        print(f"{name:16s} additive {k}-power: start={wit.start} block={wit.block_length}"
              f" sum={wit.value}  verified={ok}")

    mu = LatticeMap.parikh_map([0, 1])
    wit = find_kpower_mod_mu(tm, mu, 3, 10_000)
    ok = verify_power(tm, wit, mu=mu)
    print(f"\nThue-Morse abelian cube: start={wit.start} block={wit.block_length}"
          f" vector={wit.value}  verified={ok}")

    # long powers via the coloring: a repeated chi value at arithmetic spacing
    # yields blocks whose length is a multiple of k and whose sum matches the slope
    wit = find_anchored_power(w1, Fraction(1), k=4, count=3, L=100_000)
    ok = verify_power(w1, wit)
    print(f"\npaired enum k=1, blocks divisible by 4: start={wit.start}"
          f" block={wit.block_length} sum={wit.value}  verified={ok}")
    print(f"block slope: {Fraction(wit.value, wit.block_length)}")


if __name__ == "__main__":
    main()
