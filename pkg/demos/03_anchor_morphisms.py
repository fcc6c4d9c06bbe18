"""Anchor morphisms: detection, witnesses, and the spread dichotomy.

A morphism is an anchor when all its letter images share one slope.  Images
of anchors have block sums pinned down by length alone, so spreads stay
bounded; any non-anchor admits a source word whose image spread is unbounded.

Run:  python demos/03_anchor_morphisms.py
"""

from wordsums import (
    abelian_unbounding_morphism,
    anchor_spread_bound,
    apply_morphism,
    enumeration_word,
    is_anchor,
    mirror_anchor,
    Morphism,
    periodic,
    sum_spread,
    unbounding_stream,
    word_sum,
)


def main():
    for k in (1, 2, 3):
        phi = mirror_anchor(k)
        rep = is_anchor(phi)
        print(f"mirror k={k}: anchor={rep.is_anchor} weight={rep.weight}  ({phi})")

    phi = Morphism({0: (0, 0), 1: (1,)})
    rep = is_anchor(phi)
    print(f"\n{phi}: anchor={rep.is_anchor}, image slopes {rep.image_slopes}")
    b1, b2 = rep.witness
    print(f"witness blocks: {b1.symbols} and {b2.symbols}")
    print(f"image lengths {len(phi(b1))} == {len(phi(b2))},",
          f"image sums {word_sum(phi(b1))} != {word_sum(phi(b2))}")

    print("\nfeeding the witness blocks in growing runs drives the spread up:")
    img = apply_morphism(phi, unbounding_stream(phi))
    for L in (1_000, 10_000, 100_000):
        worst = max(sum_spread(img, n, L) for n in (1, 2, 4, 8, 16, 32, 64))
        print(f"  L={L:6d}  max spread over small n: {worst}")

    print("\nanchors keep every image spread under an explicit bound:")
    anchor = mirror_anchor(2)
    bound = anchor_spread_bound(anchor)
    img = apply_morphism(anchor, enumeration_word(2))
    worst = max(sum_spread(img, n, 50_000) for n in (1, 5, 25, 125))
    print(f"  observed {worst} <= bound {bound}")

    print("\npicking a letter-count map that unbounds a given word:")
    w = periodic([0, 0, 1] * 3 + [1] * 5)
    mu = abelian_unbounding_morphism(w, 50_000)
    print(f"  suggested per-letter increments: {mu}")


if __name__ == "__main__":
    main()
