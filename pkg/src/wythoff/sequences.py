"""P-position pair sequences for a terminal threshold k.

For k >= 1 the pair coordinates are two complementary integer sequences.
The lower one starts at k + 1 and advances by the symbols of the
concatenated substitution blocks (k copies of each unit block in turn); the
upper one exceeds it by n + k at index n.  Together with the terminal cells
these pairs, in both orientations, are exactly the losing positions of the
game.

Positions are classified either by extending the materialized prefix of the
stream (cached per k) or, for single indices, through a closed form driven
by an index decomposition (n, h, t) and exact golden-ratio floors.

k = 0 is the classical game; its pairs are the golden-ratio Beatty pairs
(floor(n*phi), floor(n*phi) + n), handled without a stream.
"""

from __future__ import annotations

import csv
import io
import json
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Callable, NamedTuple

import numpy as np

from .fibword import fib, floor_phi
from .game import Position


class PClass(str, Enum):
    TERMINAL = "terminal-P"
    PAIR = "pair-P"
    N = "N"


def _sigma_array(word: np.ndarray) -> np.ndarray:
    """Vectorized substitution 1 -> (2), 2 -> (2, 1) on an int8 symbol array.

    Each symbol expands to as many output symbols as its own value; the
    second copy of an expanded 2 becomes a 1.
    """
    counts = word.astype(np.int64)
    out = np.full(int(counts.sum()), 2, dtype=np.int8)
    starts = np.cumsum(counts) - counts
    out[starts[word == 2] + 1] = 1
    return out


class PPairStream:
    """Lazily extended prefix of the pair sequences for one k (k >= 1).

    The materialized prefix only ever grows.  Reads take no lock: the
    internal arrays are replaced atomically and marked read-only, so a
    reader sees either the old prefix or the new one, both consistent.
    Extension itself is serialized internally.
    """

    def __init__(self, k: int) -> None:
        if k < 1:
            raise ValueError(f"pair streams need k >= 1, got {k}")
        self.k = k
        self._lock = threading.RLock()
        self._unit = np.array([1], dtype=np.int8)  # next unit block to fold in
        self._c = np.zeros(0, dtype=np.int8)
        a0 = np.array([k + 1], dtype=np.int64)
        a0.flags.writeable = False
        self._a = a0

    def __len__(self) -> int:
        """Number of lower-sequence values materialized so far."""
        return len(self._a)

    def _extend_once(self) -> None:
        with self._lock:
            block = np.tile(self._unit, self.k)
            new_c = np.concatenate([self._c, block])
            grown = self._a[-1] + np.cumsum(block, dtype=np.int64)
            new_a = np.concatenate([self._a, grown])
            new_a.flags.writeable = False
            self._unit = _sigma_array(self._unit)
            self._c = new_c
            self._a = new_a

    def ensure_index(self, n: int) -> None:
        while len(self._a) < n:
            self._extend_once()

    def ensure_value(self, v: int) -> None:
        """Extend until the last materialized lower value is at least v."""
        while self._a[-1] < v:
            self._extend_once()

    def a(self, n: int) -> int:
        if n < 1:
            raise ValueError(f"sequence indices start at 1, got {n}")
        self.ensure_index(n)
        return int(self._a[n - 1])

    def b(self, n: int) -> int:
        return self.a(n) + n + self.k

    def c(self, n: int) -> int:
        """Difference a(n+1) - a(n); always 1 or 2."""
        self.ensure_index(n + 1)
        return int(self._a[n] - self._a[n - 1])

    def d(self, n: int) -> int:
        """Difference b(n+1) - b(n); always 2 or 3."""
        return self.c(n) + 1

    def a_prefix(self, n: int) -> np.ndarray:
        """Read-only view of the first n lower values."""
        self.ensure_index(n)
        return self._a[:n]

    def pair_index(self, x: int, y: int) -> int | None:
        """The index n with {x, y} == {a(n), b(n)}, or None.

        Materializes at most up to the smaller coordinate, then binary
        searches the prefix.
        """
        lo, hi = (x, y) if x <= y else (y, x)
        if lo < self.k + 1 or hi - lo - self.k < 1:
            return None
        self.ensure_value(lo)
        arr = self._a
        i = int(np.searchsorted(arr, lo))
        if i >= len(arr) or arr[i] != lo:
            return None
        n = i + 1
        return n if lo + n + self.k == hi else None


_streams: dict[int, PPairStream] = {}
_streams_lock = threading.Lock()


def stream_for(k: int) -> PPairStream:
    """Shared per-k stream cache."""
    with _streams_lock:
        st = _streams.get(k)
        if st is None:
            st = _streams[k] = PPairStream(k)
        return st


def a_seq(k: int, n: int) -> int:
    """n-th lower pair coordinate for threshold k (k >= 1)."""
    return stream_for(k).a(n)


def b_seq(k: int, n: int) -> int:
    """n-th upper pair coordinate; equals a_seq(k, n) + n + k."""
    return stream_for(k).b(n)


def pair_index(k: int, p: Position) -> int | None:
    """Index n such that p is the n-th pair in either orientation, or None."""
    x, y = p
    if k < 0 or x < 0 or y < 0:
        raise ValueError(f"need k >= 0 and non-negative coordinates, got k={k}, p={p!r}")
    if k == 0:
        lo, hi = (x, y) if x <= y else (y, x)
        n = hi - lo
        if n >= 1 and floor_phi(n) == lo:
            return n
        return None
    return stream_for(k).pair_index(x, y)


def classify(k: int, p: Position) -> PClass:
    """terminal-P, pair-P, or N for position p under threshold k."""
    x, y = p
    if k < 0 or x < 0 or y < 0:
        raise ValueError(f"need k >= 0 and non-negative coordinates, got k={k}, p={p!r}")
    if x + y <= k:
        return PClass.TERMINAL
    return PClass.PAIR if pair_index(k, p) is not None else PClass.N


def p_membership(k: int) -> Callable[[Position], bool]:
    """Predicate deciding P-position membership via the closed-form sets."""

    def is_p(q: Position) -> bool:
        return classify(k, q) is not PClass.N

    return is_p


def p_positions_below(k: int, bound: int) -> list[Position]:
    """All P-positions with both coordinates <= bound, sorted lexicographically.

    Terminal cells plus every pair in both orientations.  This is the
    closed-form route; the solver computes the same set by brute force.
    """
    if k < 0 or bound < 0:
        raise ValueError(f"need k >= 0 and bound >= 0, got k={k}, bound={bound}")
    out = [
        Position(x, y)
        for x in range(min(k, bound) + 1)
        for y in range(min(k - x, bound) + 1)
    ]
    if k == 0:
        n = 1
        while True:
            a = floor_phi(n)
            if a > bound:
                break
            b = a + n
            if b <= bound:
                out.append(Position(a, b))
                out.append(Position(b, a))
            n += 1
    else:
        st = stream_for(k)
        st.ensure_value(bound + 1)
        n = 1
        while True:
            a = st.a(n)
            if a > bound:
                break
            b = a + n + k
            if b <= bound:
                out.append(Position(a, b))
                out.append(Position(b, a))
            n += 1
    out.sort()
    return out


@dataclass(frozen=True)
class IndexDecomposition:
    """Unique writing of an index m >= 2 as k*(F(n+1) - 1) + h*F(n) + t + 1."""

    n: int
    h: int
    t: int


def decompose_index(k: int, m: int) -> IndexDecomposition:
    """Decompose m >= 2 into the (n, h, t) the closed forms consume.

    For each n the indices k*(F(n+1) - 1) + 2 .. k*(F(n+2) - 1) + 1 form a
    contiguous range; within it h counts whole unit blocks (0 <= h <= k - 1)
    and t the offset inside one (1 <= t <= F(n)).
    """
    if k < 1:
        raise ValueError(f"index decomposition needs k >= 1, got {k}")
    if m < 2:
        raise ValueError(f"indices below 2 have no decomposition, got {m}")
    fn, fn1 = 1, 1  # F(n), F(n+1) for n = 1
    n = 1
    while k * (fn + fn1 - 1) + 1 < m:
        fn, fn1 = fn1, fn + fn1
        n += 1
    r = m - k * (fn1 - 1) - 2
    h, t = divmod(r, fn)
    return IndexDecomposition(n, h, t + 1)


def _check_decomposition(k: int, dec: IndexDecomposition) -> None:
    if dec.n < 1:
        raise ValueError(f"decomposition needs n >= 1, got {dec}")
    if not 0 <= dec.h <= k - 1:
        raise ValueError(f"h must lie in 0..{k - 1} for k={k}, got {dec}")
    if not 1 <= dec.t <= fib(dec.n):
        raise ValueError(f"t must lie in 1..fib({dec.n})={fib(dec.n)}, got {dec}")


def index_of(k: int, dec: IndexDecomposition) -> int:
    """Inverse of decompose_index."""
    _check_decomposition(k, dec)
    return k * (fib(dec.n + 1) - 1) + dec.h * fib(dec.n) + dec.t + 1


def a_closed(k: int, dec: IndexDecomposition) -> int:
    """Lower pair coordinate at the index encoded by dec, in closed form."""
    _check_decomposition(k, dec)
    f1 = fib(dec.n + 1)
    delta = floor_phi(f1 + 1 + dec.t) - floor_phi(f1 + 1)
    return k * fib(dec.n + 2) - k + 1 + dec.h * f1 + delta


def b_closed(k: int, dec: IndexDecomposition) -> int:
    """Upper pair coordinate at the index encoded by dec, in closed form."""
    _check_decomposition(k, dec)
    f1 = fib(dec.n + 1)
    delta = floor_phi(f1 + 1 + dec.t) - floor_phi(f1 + 1)
    return k * fib(dec.n + 3) + dec.h * fib(dec.n + 2) - k + dec.t + 2 + delta


def closed_pair(k: int, m: int) -> tuple[int, int]:
    """(a, b) at index m via the closed forms, sharing the floor difference."""
    dec = decompose_index(k, m)
    f1 = fib(dec.n + 1)
    delta = floor_phi(f1 + 1 + dec.t) - floor_phi(f1 + 1)
    a = k * fib(dec.n + 2) - k + 1 + dec.h * f1 + delta
    b = k * fib(dec.n + 3) + dec.h * fib(dec.n + 2) - k + dec.t + 2 + delta
    return a, b


class AnchorPoints(NamedTuple):
    a_index: int
    a_value: int
    b_index: int
    b_value: int


def anchor_points(k: int, n: int) -> AnchorPoints:
    """Indices and values where the n-th Fibonacci landmarks pin the sequences.

    The lower sequence equals k*F(n+3) - k + 1 at index k*F(n+2) - k + 1; the
    upper one equals k*F(n+3) - k + 2 at index k*F(n+1) - k + 1.
    """
    if k < 1 or n < 1:
        raise ValueError(f"anchors need k >= 1 and n >= 1, got k={k}, n={n}")
    return AnchorPoints(
        a_index=k * fib(n + 2) - k + 1,
        a_value=k * fib(n + 3) - k + 1,
        b_index=k * fib(n + 1) - k + 1,
        b_value=k * fib(n + 3) - k + 2,
    )


class SequenceRow(NamedTuple):
    n: int
    a: int
    b: int
    c: int
    d: int


def sequence_rows(k: int, max_index: int) -> list[SequenceRow]:
    """Rows (n, a_n, b_n, c_n, d_n) for n = 1..max_index."""
    if max_index < 0:
        raise ValueError(f"max_index must be non-negative, got {max_index}")
    if max_index == 0:
        return []
    st = stream_for(k)
    st.ensure_index(max_index + 1)
    rows = []
    for n in range(1, max_index + 1):
        a = st.a(n)
        c = st.c(n)
        rows.append(SequenceRow(n, a, a + n + k, c, c + 1))
    return rows


def rows_to_csv(rows: list[SequenceRow]) -> str:
    """CSV with header, comma separators, and LF line endings."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "a_n", "b_n", "c_n", "d_n"])
    writer.writerows(rows)
    return buf.getvalue()


def rows_to_json(k: int, rows: list[SequenceRow]) -> str:
    """Deterministic JSON document for one k."""
    payload = {
        "k": k,
        "rows": [
            {"n": r.n, "a": r.a, "b": r.b, "c": r.c, "d": r.d} for r in rows
        ],
    }
    return json.dumps(payload, separators=(",", ":"), sort_keys=True)
