"""Positions and queen moves on the quarter-infinite board.

A position is a pair of non-negative coordinates.  A move shrinks the first
coordinate (horizontal), the second (vertical), or both by the same amount
(diagonal).  Positions whose coordinate sum is at most ``k`` are terminal:
whoever moves into that region wins, and no moves leave it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple


class Position(NamedTuple):
    x: int
    y: int

    def swapped(self) -> "Position":
        return Position(self.y, self.x)


@dataclass(frozen=True)
class TerminalSpec:
    """Game parameter: cells with x + y <= k are terminal.

    k = 0 gives the classical game whose only terminal cell is the origin.
    """

    k: int = 0

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError(f"terminal threshold must be non-negative, got {self.k}")


class MoveKind(Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    DIAGONAL = "diagonal"
    ILLEGAL = "illegal"


def is_terminal(p: Position, spec: TerminalSpec) -> bool:
    return p[0] + p[1] <= spec.k


def moves(p: Position, spec: TerminalSpec) -> list[Position]:
    """Every position reachable from ``p`` in one move.

    Terminal positions have no moves.  The order is deterministic:
    horizontal targets by ascending x, vertical targets by ascending y,
    then diagonal targets by ascending step.  The three families are
    pairwise disjoint, so a non-terminal position has exactly
    ``x + y + min(x, y)`` moves.
    """
    x, y = p
    if x < 0 or y < 0:
        raise ValueError(f"coordinates must be non-negative, got {p!r}")
    if x + y <= spec.k:
        return []
    out = [Position(u, y) for u in range(x)]
    out += [Position(x, v) for v in range(y)]
    out += [Position(x - t, y - t) for t in range(1, min(x, y) + 1)]
    return out


def move_kind(p: Position, q: Position) -> MoveKind:
    """Classify the step from ``p`` to ``q`` by geometry alone.

    Terminality plays no role here; callers decide separately whether a
    game continues from ``p``.
    """
    px, py = p
    qx, qy = q
    if qx < 0 or qy < 0:
        return MoveKind.ILLEGAL
    if qx == px and qy < py:
        return MoveKind.VERTICAL
    if qy == py and qx < px:
        return MoveKind.HORIZONTAL
    if px - qx == py - qy and px - qx > 0:
        return MoveKind.DIAGONAL
    return MoveKind.ILLEGAL
