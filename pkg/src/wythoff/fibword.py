"""Fibonacci-word substitutions and exact golden-ratio floors.

Two substitutions over tagged alphabets generate the difference sequences of
the P-position pairs:

    sigma over {1, 2}:  1 -> 2        2 -> 2, 1
    rho   over {2, 3}:  2 -> 2        3 -> 2, 1

Iterating sigma from the seed word (1) gives unit blocks (1), (2), (2,1),
(2,1,2), ... whose lengths are the Fibonacci numbers.  Each word carries its
alphabet, so applying a substitution to a word over the wrong alphabet is an
error rather than a silent reinterpretation.

``floor_phi`` evaluates floor(n * phi) with integer arithmetic only.  Since
5*n*n is never a perfect square for n > 0,

    floor(n * phi) = (n + isqrt(5 * n * n)) // 2

is exact for every non-negative n, with no size limit beyond memory.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

SIGMA_ALPHABET = frozenset({1, 2})
RHO_ALPHABET = frozenset({2, 3})

_SIGMA_RULES = {1: (2,), 2: (2, 1)}
_RHO_RULES = {2: (2,), 3: (2, 1)}

# Unit blocks are materialized eagerly; lengths grow like Fibonacci numbers,
# so beyond this index use c1_element instead of building the word.
MAX_MATERIALIZED_INDEX = 30


class AlphabetError(ValueError):
    """A word was used with a substitution over a different alphabet."""


@dataclass(frozen=True)
class Word:
    """An immutable symbol sequence tagged with its alphabet."""

    symbols: tuple[int, ...]
    alphabet: frozenset[int]

    def __post_init__(self) -> None:
        bad = set(self.symbols) - self.alphabet
        if bad:
            raise AlphabetError(
                f"symbols {sorted(bad)} are outside alphabet {sorted(self.alphabet)}"
            )

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def concat(self, other: "Word") -> "Word":
        if self.alphabet != other.alphabet:
            raise AlphabetError("cannot concatenate words over different alphabets")
        return Word(self.symbols + other.symbols, self.alphabet)

    def symbol_sum(self) -> int:
        return sum(self.symbols)


class FibCache:
    """Monotonically growing Fibonacci table with F_1 = F_2 = 1.

    Extension is guarded by a lock so concurrent readers may share one cache.
    """

    def __init__(self) -> None:
        self._values = [0, 1, 1]
        self._lock = threading.Lock()

    def value(self, i: int) -> int:
        if i < 1:
            raise ValueError(f"Fibonacci index must be positive, got {i}")
        if i >= len(self._values):
            with self._lock:
                while len(self._values) <= i:
                    self._values.append(self._values[-1] + self._values[-2])
        return self._values[i]


_fib_cache = FibCache()


def fib(i: int) -> int:
    """The i-th Fibonacci number (F_1 = F_2 = 1)."""
    return _fib_cache.value(i)


def sigma(word: Word) -> Word:
    """Apply 1 -> (2), 2 -> (2, 1) to a word over {1, 2}."""
    if word.alphabet != SIGMA_ALPHABET:
        raise AlphabetError("sigma acts on words over {1, 2}")
    out: list[int] = []
    for s in word.symbols:
        out.extend(_SIGMA_RULES[s])
    return Word(tuple(out), SIGMA_ALPHABET)


def rho(word: Word) -> Word:
    """Apply 2 -> (2), 3 -> (2, 1) to a word over {2, 3}, yielding a {1, 2} word."""
    if word.alphabet != RHO_ALPHABET:
        raise AlphabetError("rho acts on words over {2, 3}")
    out: list[int] = []
    for s in word.symbols:
        out.extend(_RHO_RULES[s])
    return Word(tuple(out), SIGMA_ALPHABET)


_unit_blocks: list[Word] = [Word((1,), SIGMA_ALPHABET)]
_unit_lock = threading.Lock()


def block_c1(i: int) -> Word:
    """The i-th unit block: (1) for i = 1, then sigma applied repeatedly.

    Its length is fib(i).  Indices above MAX_MATERIALIZED_INDEX raise; use
    c1_element for closed-form access to single symbols.
    """
    if i < 1:
        raise ValueError(f"block index must be positive, got {i}")
    if i > MAX_MATERIALIZED_INDEX:
        raise ValueError(
            f"unit block {i} would hold fib({i}) symbols; "
            f"materialization is capped at {MAX_MATERIALIZED_INDEX}, "
            "use c1_element instead"
        )
    if i > len(_unit_blocks):
        with _unit_lock:
            while len(_unit_blocks) < i:
                _unit_blocks.append(sigma(_unit_blocks[-1]))
    return _unit_blocks[i - 1]


def block_c(i: int, k: int) -> Word:
    """The i-th lower-difference block: k copies of the unit block.

    Length k * fib(i), symbol sum k * fib(i + 1).
    """
    if k < 1:
        raise ValueError(f"copy count must be positive, got {k}")
    return Word(block_c1(i).symbols * k, SIGMA_ALPHABET)


def block_d(i: int, k: int) -> Word:
    """The i-th upper-difference block: block_c(i, k) with one added per symbol.

    A word over {2, 3} with symbol sum k * fib(i + 2).
    """
    return Word(tuple(s + 1 for s in block_c(i, k).symbols), RHO_ALPHABET)


def floor_phi(n: int) -> int:
    """floor(n * phi) for the golden ratio phi, exact for any n >= 0."""
    if n < 0:
        raise ValueError(f"floor_phi needs a non-negative argument, got {n}")
    return (n + math.isqrt(5 * n * n)) // 2


def c1_element(n: int, t: int) -> int:
    """The t-th symbol (1-based) of the n-th unit block, without building it.

    Equals floor_phi(fib(n+1) + t + 1) - floor_phi(fib(n+1) + t), which is
    always 1 or 2.
    """
    if n < 1:
        raise ValueError(f"block index must be positive, got {n}")
    if not 1 <= t <= fib(n):
        raise IndexError(f"unit block {n} has fib({n}) = {fib(n)} symbols, got t={t}")
    f = fib(n + 1)
    return floor_phi(f + t + 1) - floor_phi(f + t)
