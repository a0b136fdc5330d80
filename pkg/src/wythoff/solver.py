"""Brute-force Sprague-Grundy solver; the ground truth the closed forms face.

The value of a position is the minimum excludant of the values of its move
targets, and the losing (P-) positions are exactly the zeros.  Tables are
filled by anti-diagonal (ascending coordinate sum), so every move target is
already known when a cell is reached; the per-cell mex reuses one boolean
scratch buffer sized x + y + min(x, y) + 1.  Identical inputs always produce
bit-identical tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .game import Position, TerminalSpec, is_terminal, moves

# Full tables allocate (bound+1)^2 cells; refuse anything past this budget.
MEMORY_BUDGET_BYTES = 1 << 28


class CapacityError(ValueError):
    """The requested table would exceed the memory budget."""


def mex(values: Iterable[int]) -> int:
    """Minimum excludant: the smallest non-negative integer not in values."""
    seen = set(values)
    g = 0
    while g in seen:
        g += 1
    return g


def _dtype_for(bound: int) -> np.dtype:
    # Grundy values never exceed the move count, which is at most 3 * bound.
    top = 3 * bound
    if top <= np.iinfo(np.uint8).max:
        return np.dtype(np.uint8)
    if top <= np.iinfo(np.uint16).max:
        return np.dtype(np.uint16)
    return np.dtype(np.uint32)


@dataclass(frozen=True)
class GrundyTable:
    """Grundy values for every cell of a (bound+1) x (bound+1) board."""

    spec: TerminalSpec
    bound: int
    values: np.ndarray

    def grundy(self, p: Position) -> int:
        x, y = p
        if not (0 <= x <= self.bound and 0 <= y <= self.bound):
            raise ValueError(f"{p!r} is outside the {self.bound}-board")
        return int(self.values[x, y])

    def is_p(self, p: Position) -> bool:
        return self.grundy(p) == 0

    def p_positions(self) -> list[Position]:
        zero = np.argwhere(self.values == 0)
        return sorted(Position(int(x), int(y)) for x, y in zero)

    def dump_text(self) -> str:
        """Header (k, bound, value width) then row-major values, LF-terminated."""
        lines = [f"k={self.spec.k} bound={self.bound} width={self.values.itemsize * 8}"]
        lines.extend(" ".join(str(int(v)) for v in row) for row in self.values)
        return "\n".join(lines) + "\n"

    def summary_json(self) -> str:
        """Compact deterministic JSON: parameters plus the P-position list."""
        payload = {
            "k": self.spec.k,
            "bound": self.bound,
            "p_positions": [[p.x, p.y] for p in self.p_positions()],
        }
        return json.dumps(payload, separators=(",", ":"), sort_keys=True)


def build_table(spec: TerminalSpec, bound: int) -> GrundyTable:
    """Solve every position with both coordinates <= bound.

    Cells are visited in non-decreasing coordinate sum.  For each cell the
    values already assigned in its row, column, and diagonal are marked in
    the scratch buffer and the first unmarked value is its Grundy number.
    Terminal cells keep value 0 and contribute to the scans like any other
    target.
    """
    if bound < spec.k:
        raise ValueError(f"bound {bound} is smaller than the terminal threshold {spec.k}")
    dtype = _dtype_for(bound)
    cells = (bound + 1) * (bound + 1)
    if cells * dtype.itemsize > MEMORY_BUDGET_BYTES:
        raise CapacityError(
            f"a {bound}-board needs {cells * dtype.itemsize} bytes of values, "
            f"over the {MEMORY_BUDGET_BYTES} budget"
        )
    k = spec.k
    values = np.zeros((bound + 1, bound + 1), dtype=dtype)
    scratch = np.zeros(3 * bound + 2, dtype=bool)
    for s in range(2 * bound + 1):
        for x in range(max(0, s - bound), min(bound, s) + 1):
            y = s - x
            if x + y <= k:
                continue
            m = min(x, y)
            sc = scratch[: x + y + m + 1]
            sc[values[x, :y]] = True
            sc[values[:x, y]] = True
            if m:
                sc[np.diagonal(values, offset=y - x)[:m]] = True
            values[x, y] = sc.argmin()
            sc[:] = False
    values.flags.writeable = False
    return GrundyTable(spec, bound, values)


def p_positions(table: GrundyTable) -> list[Position]:
    """Zero-Grundy cells of a solved table, sorted lexicographically."""
    return table.p_positions()


def p_grid(spec: TerminalSpec, bound: int) -> np.ndarray:
    """Boolean P-position board without Grundy values, in O(bound^2).

    A non-terminal cell is P exactly when no P-cell lies earlier in its row,
    column, or diagonal; running flags per line replace the mex entirely.
    """
    if bound < spec.k:
        raise ValueError(f"bound {bound} is smaller than the terminal threshold {spec.k}")
    k = spec.k
    size = bound + 1
    grid = np.zeros((size, size), dtype=bool)
    col_has = bytearray(size)
    diag_has = bytearray(2 * size)
    for x in range(size):
        row_has = False
        for y in range(size):
            d = y - x + bound
            if x + y <= k:
                p = True
            else:
                p = not (row_has or col_has[y] or diag_has[d])
            if p:
                grid[x, y] = True
                row_has = True
                col_has[y] = 1
                diag_has[d] = 1
    grid.flags.writeable = False
    return grid


def winning_moves(
    is_p: Callable[[Position], bool], p: Position, spec: TerminalSpec
) -> list[Position]:
    """Moves from p that land on a P-position, sorted lexicographically."""
    return sorted(q for q in moves(p, spec) if is_p(q))


def best_move(
    is_p: Callable[[Position], bool], p: Position, spec: TerminalSpec
) -> Position | None:
    """A winning move from p, or None when p is itself a P-position.

    Ties prefer terminal targets, then the lexicographically smallest one.
    """
    if is_terminal(p, spec):
        raise ValueError(f"{p!r} is terminal; the game is already over")
    wins = winning_moves(is_p, p, spec)
    if not wins:
        return None
    finishers = [q for q in wins if is_terminal(q, spec)]
    return min(finishers) if finishers else wins[0]


def fallback_move(
    is_p: Callable[[Position], bool], p: Position, spec: TerminalSpec
) -> Position:
    """The move that leaves the opponent the fewest winning replies.

    Used when no winning move exists.  Ties go to the lexicographically
    smallest target.
    """
    if is_terminal(p, spec):
        raise ValueError(f"{p!r} is terminal; the game is already over")
    best: Position | None = None
    best_count = -1
    for q in moves(p, spec):
        count = sum(1 for r in moves(q, spec) if is_p(r))
        if best is None or count < best_count or (count == best_count and q < best):
            best, best_count = q, count
    assert best is not None
    return best
