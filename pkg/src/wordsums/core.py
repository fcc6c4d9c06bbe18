"""Finite and infinite words over integer alphabets, with exact prefix sums.

Positions in infinite words are 1-based: w(1) is the first symbol and
factor(w, m, n) is the inclusive block w(m)...w(n).  Finite words are
ordinary 0-based Python sequences.  All sums are exact: int64 arrays back
the long scans, with a guard that refuses lengths where max|s| * L could
approach 2**63, and everything crossing the API boundary is a Python int
or Fraction.
"""

from __future__ import annotations

import itertools
import threading
from fractions import Fraction
from typing import Callable, Iterable, Iterator, NamedTuple, Optional, Sequence

import numpy as np

# int64 stays exact while |prefix sum| < 2**62; leave a factor-2 margin.
_SUM_LIMIT = 2**62

_CHUNK = 1 << 13


class GuardError(RuntimeError):
    """A computation would exceed a configured safety guard."""


class NotFoundError(LookupError):
    """The requested structure does not occur within the scanned range."""


class Interval(NamedTuple):
    """Closed 1-based position interval [lo, hi]."""

    lo: int
    hi: int

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def validate(self) -> "Interval":
        if not (1 <= self.lo <= self.hi):
            raise ValueError(f"bad interval [{self.lo}, {self.hi}]")
        return self


class Alphabet:
    """A finite set of integer symbols, kept sorted ascending."""

    __slots__ = ("symbols", "_index")

    def __init__(self, symbols: Iterable[int]):
        syms = sorted(set(int(s) for s in symbols))
        if not syms:
            raise ValueError("alphabet must be nonempty")
        self.symbols: tuple[int, ...] = tuple(syms)
        self._index = {s: i for i, s in enumerate(self.symbols)}

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __contains__(self, s: object) -> bool:
        return s in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def index(self, s: int) -> int:
        """Rank of s within the sorted alphabet (used for Parikh coordinates)."""
        try:
            return self._index[s]
        except KeyError:
            raise ValueError(f"symbol {s} not in alphabet {self.symbols}") from None

    def max_abs(self) -> int:
        return max(abs(self.symbols[0]), abs(self.symbols[-1]))

    def __repr__(self) -> str:
        return f"Alphabet({list(self.symbols)})"


class FiniteWord:
    """Immutable finite word; prefix sums are computed lazily and exactly."""

    __slots__ = ("symbols", "_psums")

    def __init__(self, symbols: Iterable[int]):
        self.symbols: tuple[int, ...] = tuple(int(s) for s in symbols)
        self._psums: Optional[tuple[int, ...]] = None

    @property
    def prefix_sums(self) -> tuple[int, ...]:
        """P[0..n] with P[0] = 0 and P[i] = s_1 + ... + s_i, exact ints."""
        if self._psums is None:
            self._psums = tuple(itertools.accumulate(self.symbols, initial=0))
        return self._psums

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, i):
        got = self.symbols[i]
        return FiniteWord(got) if isinstance(i, slice) else got

    def __add__(self, other: "FiniteWord") -> "FiniteWord":
        return FiniteWord(self.symbols + other.symbols)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteWord) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        if len(self.symbols) > 24:
            head = ",".join(map(str, self.symbols[:24]))
            return f"FiniteWord([{head},...] len={len(self.symbols)})"
        return f"FiniteWord([{','.join(map(str, self.symbols))}])"


class WordStream:
    """An infinite word, materialized lazily into a shared int64 prefix.

    `factory` must return a fresh symbol iterator each call and always
    produce the same sequence; the cache only ever grows, so every
    reported value is stable across calls.  Extension is serialized with
    a lock so streams can be shared between threads.
    """

    def __init__(
        self,
        factory: Callable[[], Iterator[int]],
        alphabet: Optional[Alphabet] = None,
        label: str = "",
    ):
        self._factory = factory
        self._it: Optional[Iterator[int]] = None
        self._sym = np.empty(0, dtype=np.int64)
        self._ps = np.zeros(1, dtype=np.int64)
        self._n = 0
        self._exhausted = False
        self._max_abs = 0
        self._lock = threading.Lock()
        self.alphabet = alphabet
        self.label = label or "word"

    # -- materialization ------------------------------------------------

    def _ensure(self, n: int) -> None:
        if n <= self._n:
            return
        with self._lock:
            if self._it is None:
                self._it = iter(self._factory())
            while self._n < n and not self._exhausted:
                chunk = list(itertools.islice(self._it, max(_CHUNK, n - self._n)))
                if not chunk:
                    self._exhausted = True
                    break
                arr = np.asarray(chunk, dtype=np.int64)
                m = int(np.max(np.abs(arr))) if arr.size else 0
                self._max_abs = max(self._max_abs, m)
                total = self._n + arr.size
                if self._max_abs and self._max_abs * (total + _CHUNK) >= _SUM_LIMIT:
                    raise GuardError(
                        f"prefix sums of {self.label} may overflow int64 at "
                        f"length {total} with max|s| = {self._max_abs}"
                    )
                if total > self._sym.size:
                    grown = np.empty(max(2 * self._sym.size, total, _CHUNK), dtype=np.int64)
                    grown[: self._n] = self._sym[: self._n]
                    self._sym = grown
                    ps = np.empty(self._sym.size + 1, dtype=np.int64)
                    ps[: self._n + 1] = self._ps[: self._n + 1]
                    self._ps = ps
                self._sym[self._n : total] = arr
                np.cumsum(arr, out=self._ps[self._n + 1 : total + 1])
                self._ps[self._n + 1 : total + 1] += self._ps[self._n]
                self._n = total
        if n > self._n:
            raise ValueError(
                f"{self.label} ends at length {self._n}; cannot reach position {n}"
            )

    # -- access ---------------------------------------------------------

    def symbol(self, i: int) -> int:
        """w(i), 1-based."""
        if i < 1:
            raise ValueError(f"positions are 1-based, got {i}")
        self._ensure(i)
        return int(self._sym[i - 1])

    def prefix(self, L: int) -> np.ndarray:
        """Read-only int64 view of w(1..L)."""
        if L < 0:
            raise ValueError(f"negative prefix length {L}")
        self._ensure(L)
        view = self._sym[:L].view()
        view.setflags(write=False)
        return view

    def prefix_sums(self, L: int) -> np.ndarray:
        """Read-only int64 view of P[0..L]."""
        if L < 0:
            raise ValueError(f"negative prefix length {L}")
        self._ensure(L)
        view = self._ps[: L + 1].view()
        view.setflags(write=False)
        return view

    def factor(self, m: int, n: int) -> FiniteWord:
        """w(m)...w(n) inclusive, 1-based."""
        if m < 1 or m > n:
            raise ValueError(f"bad factor bounds [{m}, {n}]")
        self._ensure(n)
        return FiniteWord(int(x) for x in self._sym[m - 1 : n])

    def observed_alphabet(self, L: int) -> Alphabet:
        """Alphabet of the symbols actually seen in w(1..L)."""
        return Alphabet(np.unique(self.prefix(L)).tolist())

    def __repr__(self) -> str:
        return f"WordStream({self.label!r}, materialized={self._n})"


# -- word-level operations ----------------------------------------------


def word_sum(B: FiniteWord) -> int:
    """Sum of the symbols of B."""
    return B.prefix_sums[len(B)]


def word_slope(B: FiniteWord) -> Fraction:
    """slope(B) = sum(B) / |B|, exact."""
    if len(B) == 0:
        raise ValueError("slope of the empty word is undefined")
    return Fraction(word_sum(B), len(B))


def count_symbol(B: FiniteWord, s: int) -> int:
    """Number of occurrences of s in B."""
    return B.symbols.count(int(s))


def factor(w: WordStream, m: int, n: int) -> FiniteWord:
    """w(m)...w(n) inclusive, 1-based."""
    return w.factor(m, n)


def from_finite(symbols: Sequence[int], label: str = "finite") -> WordStream:
    """Wrap a finite symbol sequence as a (terminating) stream.

    Reads past the end raise ValueError; this backs file-fed words.
    """
    frozen = tuple(int(s) for s in symbols)
    return WordStream(lambda: iter(frozen), alphabet=Alphabet(frozen) if frozen else None, label=label)
