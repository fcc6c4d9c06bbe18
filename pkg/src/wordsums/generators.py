"""Constructors for the infinite words the analyses run on.

Each constructor returns a WordStream; nothing is materialized until a
prefix is requested.  Families: periodic words, morphic fixed points,
mechanical (Sturmian) words from continued fractions, enumeration words,
the paired-enumeration family with constant additive complexity 2k+1,
the bounded-spread word whose equal-slope cuts have unbounded gaps, the
staircase word with constant complexity n, plus the splice and contract
combinators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Union

from .core import Alphabet, FiniteWord, Interval, WordStream
from .morphisms import Morphism, apply_morphism

__all__ = [
    "periodic",
    "morphic_fixed_point",
    "mechanical",
    "cf_value",
    "enumeration_word",
    "mirror_anchor",
    "constant_complexity_word",
    "nested_enum_word",
    "unbounded_gap_word",
    "constant_tail_word",
    "SpliceSchedule",
    "splice",
    "SeparatedIntervalSet",
    "contract",
]


def periodic(pattern: Sequence[int], label: str = "") -> WordStream:
    """The word pattern pattern pattern ..."""
    pat = tuple(int(s) for s in pattern)
    if not pat:
        raise ValueError("empty period")
    name = label or f"periodic({','.join(map(str, pat))})"
    return WordStream(lambda: itertools.cycle(pat), alphabet=Alphabet(pat), label=name)


def morphic_fixed_point(phi: Morphism, seed: int) -> WordStream:
    """The fixed point phi^inf(seed); phi must be prolongable at seed."""
    if not phi.is_endomorphism():
        raise ValueError("fixed points need target symbols inside the source")
    head = phi.image(seed)
    if head.symbols[0] != seed or len(head) < 2:
        raise ValueError(f"phi is not prolongable at {seed}: phi({seed}) = {head}")

    def gen() -> Iterator[int]:
        # out is the word itself; expanding out[j] appends phi(out[j]),
        # and len(out) - j never shrinks, so out[j] always exists.
        out = list(head.symbols)
        yield from out
        j = 1
        while True:
            img = phi.image(out[j]).symbols
            out.extend(img)
            yield from img
            j += 1

    return WordStream(gen, alphabet=phi.source, label=f"fixpoint({phi!r}@{seed})")


def cf_value(cf: Sequence[int]) -> Fraction:
    """Value of the continued fraction [0; a1, a2, ...] for a finite list."""
    x = Fraction(0)
    for a in reversed(cf):
        x = Fraction(1, a + x)
    return x


def _directive(cf: Sequence[int], repeat: Optional[int]) -> Iterator[int]:
    # standard-word directive: d1 = a1 - 1, dn = an afterwards
    if repeat is None:
        coeffs: Iterable[int] = cf
    else:
        coeffs = itertools.chain(cf, itertools.cycle(cf[len(cf) - repeat :]))
    for i, a in enumerate(coeffs):
        yield a - 1 if i == 0 else a


def mechanical(cf: Sequence[int], repeat: Optional[int] = None) -> WordStream:
    """Lower mechanical word of slope alpha = [0; a1, a2, ...].

    Built through the standard-word recursion s_n = s_{n-1}^{d_n} s_{n-2}
    with s_{-1} = 1, s_0 = 0.  Without a repeat marker alpha = p/q is
    rational and the emitted period is 0 c 1 where s_last = c 10 or c 01;
    with repeat=r the last r coefficients cycle forever and the word is
    0 followed by the characteristic word.  Either way the output matches
    w(i) = floor(alpha*i) - floor(alpha*(i-1)).
    """
    cf = [int(a) for a in cf]
    if not cf or any(a < 1 for a in cf):
        raise ValueError(f"continued fraction coefficients must be >= 1: {cf}")
    if repeat is not None and not (1 <= repeat <= len(cf)):
        raise ValueError(f"repeat marker {repeat} out of range for {cf}")
    if repeat is None:
        prev, cur = (1,), (0,)
        for d in _directive(cf, None):
            prev, cur = cur, cur * d + prev
        if len(cur) == 1:
            # slope is 0/1 or 1/1; the rotation below needs q >= 2
            period = cur
        else:
            period = (0,) + cur[:-2] + (1,)
        alpha = cf_value(cf)
        return periodic(period, label=f"mechanical({alpha.numerator}/{alpha.denominator})")

    def gen() -> Iterator[int]:
        yield 0
        emitted = 0
        prev, cur = (1,), (0,)
        for d in _directive(cf, repeat):
            prev, cur = cur, cur * d + prev
            yield from cur[emitted:]
            emitted = len(cur)

    return WordStream(gen, alphabet=Alphabet((0, 1)), label=f"mechanical(cf={cf};repeat={repeat})")


def enumeration_word(k: int) -> WordStream:
    """All words over {0..k} concatenated in length-then-lexicographic order."""
    if k < 0:
        raise ValueError("alphabet bound k must be >= 0")

    def gen() -> Iterator[int]:
        syms = tuple(range(k + 1))
        for ell in itertools.count(1):
            for tup in itertools.product(syms, repeat=ell):
                yield from tup

    return WordStream(gen, alphabet=Alphabet(range(k + 1)), label=f"enum(k={k})")


def mirror_anchor(k: int) -> Morphism:
    """i -> i (2k-i) on {0..k}: every image has slope k."""
    if k < 0:
        raise ValueError("weight k must be >= 0")
    return Morphism({i: (i, 2 * k - i) for i in range(k + 1)}, target=Alphabet(range(2 * k + 1)))


def constant_complexity_word(k: int) -> WordStream:
    """Recurrent word over {0..2k} with exactly 2k+1 window sums at every length.

    Image of the enumeration word under i -> i (2k-i); each image pair
    sums to 2k, so length-n sums land on the 2k+1 values kn - k .. kn + k
    and all of them occur once every block pattern has been enumerated.
    """
    w = apply_morphism(mirror_anchor(k), enumeration_word(k))
    w.label = f"const-complexity(k={k})"
    return w


def nested_enum_word() -> WordStream:
    """Concatenation of all words over {1..n} of length n, for n = 1, 2, ..."""

    def gen() -> Iterator[int]:
        for n in itertools.count(1):
            for tup in itertools.product(range(1, n + 1), repeat=n):
                yield from tup

    return WordStream(gen, label="nested-enum")


def unbounded_gap_word() -> WordStream:
    """Bounded sum spread, but gaps between equal-slope cuts grow without bound.

    Each value v of the nested enumeration word becomes the block
    0 1^v 2 (v odd) or 2 1^v 0 (v even); block sums are all v + 2 while
    the runs of 1s inside grow, which pushes the slope-1 cut positions
    arbitrarily far apart.
    """
    feed = nested_enum_word()

    def gen() -> Iterator[int]:
        i = 1
        while True:
            v = feed.symbol(i)
            if v % 2:
                yield 0
                yield from itertools.repeat(1, v)
                yield 2
            else:
                yield 2
                yield from itertools.repeat(1, v)
                yield 0
            i += 1

    return WordStream(gen, alphabet=Alphabet((0, 1, 2)), label="unbounded-gaps")


def constant_tail_word(n: int) -> WordStream:
    """The staircase 0 1 ... n-1 (n-1)^inf, with exactly n sums at every length.

    Length-1 windows give the n distinct letters; longer windows give
    n-1 strictly increasing sums along the ramp plus the constant tail
    value, so additive and abelian complexity both equal n everywhere.
    """
    if n < 1:
        raise ValueError("need at least one letter")
    ramp = tuple(range(n))

    def gen() -> Iterator[int]:
        yield from ramp
        yield from itertools.repeat(n - 1)

    return WordStream(gen, alphabet=Alphabet(ramp), label=f"staircase(n={n})")


@dataclass(frozen=True)
class SpliceSchedule:
    """Cyclic table of block lengths: rounds[r][i] symbols come from source i."""

    rounds: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rounds = tuple(tuple(int(x) for x in row) for row in self.rounds)
        object.__setattr__(self, "rounds", rounds)
        if not rounds:
            raise ValueError("schedule needs at least one round")
        width = len(rounds[0])
        if width == 0 or any(len(row) != width for row in rounds):
            raise ValueError("all schedule rounds must list every source")
        if any(x < 0 for row in rounds for x in row):
            raise ValueError("block lengths must be >= 0")
        if all(x == 0 for row in rounds for x in row):
            raise ValueError("schedule never emits a symbol")

    @property
    def width(self) -> int:
        return len(self.rounds[0])


def splice(sources: Sequence[WordStream], schedule: SpliceSchedule) -> WordStream:
    """Interleave blocks of the sources, each consumed left to right.

    Round r takes the next rounds[r][i] unread symbols from source i, in
    source order; the schedule table repeats forever.  Splicing words of
    equal slope and bounded spread keeps the spread bounded.
    """
    if schedule.width != len(sources):
        raise ValueError(
            f"schedule width {schedule.width} != number of sources {len(sources)}"
        )

    def gen() -> Iterator[int]:
        pos = [0] * len(sources)
        for row in itertools.cycle(schedule.rounds):
            for i, ln in enumerate(row):
                if ln:
                    yield from sources[i].factor(pos[i] + 1, pos[i] + ln).symbols
                    pos[i] += ln

    merged: Optional[Alphabet] = None
    if all(s.alphabet is not None for s in sources):
        merged = Alphabet(t for s in sources for t in s.alphabet)
    return WordStream(gen, alphabet=merged, label="splice")


class SeparatedIntervalSet:
    """Ascending 1-based intervals with at least one position between them."""

    def __init__(self, intervals: Iterable[Union[Interval, tuple[int, int]]]):
        ivals = [Interval(int(a), int(b)).validate() for a, b in intervals]
        for prev, nxt in zip(ivals, ivals[1:]):
            if prev.hi + 1 >= nxt.lo:
                raise ValueError(
                    f"intervals [{prev.lo},{prev.hi}] and [{nxt.lo},{nxt.hi}] "
                    "are not separated"
                )
        self._ivals = ivals
        self._arith: Optional[tuple[int, int, int]] = None

    @classmethod
    def arithmetic(cls, start: int, period: int, width: int) -> "SeparatedIntervalSet":
        """[start + j*period, start + j*period + width - 1] for all j >= 0."""
        if start < 1 or width < 1 or period < width + 1:
            raise ValueError(
                f"need start >= 1, width >= 1, period > width; got {start},{period},{width}"
            )
        obj = cls([])
        obj._arith = (int(start), int(period), int(width))
        return obj

    def __iter__(self) -> Iterator[Interval]:
        if self._arith is not None:
            start, period, width = self._arith
            for j in itertools.count():
                lo = start + j * period
                yield Interval(lo, lo + width - 1)
        else:
            yield from self._ivals

    @property
    def finite(self) -> bool:
        return self._arith is None

    def __repr__(self) -> str:
        if self._arith is not None:
            return f"SeparatedIntervalSet.arithmetic{self._arith}"
        return f"SeparatedIntervalSet({[(i.lo, i.hi) for i in self._ivals]})"


def contract(w: WordStream, intervals: SeparatedIntervalSet) -> WordStream:
    """Delete the given separated intervals from w and close the gaps.

    Deleting blocks whose boundary cuts share one chi color leaves the
    spread within the original bound plus twice the per-block sum error.
    """

    def gen() -> Iterator[int]:
        i = 1
        for iv in intervals:
            if iv.lo > i:
                yield from w.factor(i, iv.lo - 1).symbols
            i = iv.hi + 1
        for j in itertools.count(i):
            yield w.symbol(j)

    return WordStream(gen, alphabet=w.alphabet, label=f"contract({w.label})")
