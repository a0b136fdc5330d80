import numpy as np
import pytest

from wythoff import (
    CapacityError,
    Position,
    TerminalSpec,
    best_move,
    build_table,
    fallback_move,
    mex,
    moves,
    p_grid,
    p_membership,
    p_positions,
    winning_moves,
)
from wythoff.fibword import floor_phi


def reference_table(k, bound):
    """Memoized recursion straight from the definitions; the slow oracle."""
    memo = {}

    def g(x, y):
        if (x, y) in memo:
            return memo[(x, y)]
        seen = {g(*q) for q in moves(Position(x, y), TerminalSpec(k))}
        r = 0
        while r in seen:
            r += 1
        memo[(x, y)] = r
        return r

    return {(x, y): g(x, y) for x in range(bound + 1) for y in range(bound + 1)}


def test_mex():
    assert mex([]) == 0
    assert mex([0, 1, 3]) == 2
    assert mex([1, 2]) == 0
    assert mex([0, 0, 1]) == 2


@pytest.mark.parametrize("k", [0, 1, 2, 5])
def test_table_matches_reference_recursion(k):
    bound = 14
    table = build_table(TerminalSpec(k), bound)
    ref = reference_table(k, bound)
    for (x, y), g in ref.items():
        assert table.grundy(Position(x, y)) == g


def test_classical_zero_cells(table_k0_30):
    assert table_k0_30.grundy(Position(0, 0)) == 0
    assert table_k0_30.grundy(Position(1, 2)) == 0
    assert table_k0_30.grundy(Position(2, 1)) == 0
    assert table_k0_30.grundy(Position(1, 1)) != 0


def test_classical_p_positions_on_7_board():
    table = build_table(TerminalSpec(0), 7)
    expected = {(0, 0), (1, 2), (2, 1), (3, 5), (5, 3), (4, 7), (7, 4)}
    assert set(table.p_positions()) == expected


def test_k1_p_positions_on_4_board():
    table = build_table(TerminalSpec(1), 4)
    assert set(table.p_positions()) == {(0, 0), (0, 1), (1, 0), (4, 2), (2, 4)}


def test_k5_known_pairs(table_k5_30):
    assert table_k5_30.grundy(Position(12, 6)) == 0
    assert table_k5_30.grundy(Position(12, 7)) != 0
    for pair in [(12, 6), (14, 7), (16, 8), (18, 9), (20, 10), (22, 11)]:
        assert table_k5_30.grundy(Position(*pair)) == 0
    pos = build_table(TerminalSpec(5), 22).p_positions()
    for pair in [(12, 6), (14, 7), (16, 8), (18, 9), (20, 10), (22, 11)]:
        assert Position(*pair) in pos


def test_table_symmetry_and_determinism(table_k5_30):
    assert np.array_equal(table_k5_30.values, table_k5_30.values.T)
    again = build_table(TerminalSpec(5), 30)
    assert table_k5_30.dump_text() == again.dump_text()
    assert table_k5_30.summary_json() == again.summary_json()


def test_terminal_cells_are_zero(table_k5_30):
    for x in range(6):
        for y in range(6 - x):
            assert table_k5_30.grundy(Position(x, y)) == 0


def test_p_grid_matches_full_table():
    for k, bound in [(0, 40), (1, 40), (5, 40), (8, 50)]:
        table = build_table(TerminalSpec(k), bound)
        grid = p_grid(TerminalSpec(k), bound)
        assert np.array_equal(grid, table.values == 0)


def test_p_n_partition_exhaustively_small():
    """No P-to-P move; every N-position has a move to P.  Brute scale."""
    k, bound = 5, 40
    table = build_table(TerminalSpec(k), bound)
    spec = TerminalSpec(k)
    for x in range(bound + 1):
        for y in range(bound + 1):
            p = Position(x, y)
            targets = [q for q in moves(p, spec) if table.is_p(q)]
            if table.is_p(p):
                assert targets == []
            else:
                assert targets


def test_bound_must_cover_terminal_region():
    with pytest.raises(ValueError):
        build_table(TerminalSpec(5), 3)


def test_capacity_error():
    with pytest.raises(CapacityError):
        build_table(TerminalSpec(0), 50_000)


def test_dump_and_summary_formats():
    table = build_table(TerminalSpec(1), 4)
    dump = table.dump_text()
    lines = dump.split("\n")
    assert lines[0] == "k=1 bound=4 width=8"
    assert len(lines) == 7  # header + 5 rows + trailing newline
    assert lines[1] == "0 0 1 2 3"
    assert table.summary_json() == (
        '{"bound":4,"k":1,"p_positions":[[0,0],[0,1],[1,0],[2,4],[4,2]]}'
    )


def test_winning_moves_and_best_move(table_k5_30):
    spec = TerminalSpec(5)
    is_p = table_k5_30.is_p
    assert winning_moves(is_p, Position(12, 7), spec) == [(5, 0), (12, 6)]
    # a reachable terminal cell outranks the lexicographic order
    assert best_move(is_p, Position(12, 7), spec) == (5, 0)
    assert best_move(is_p, Position(9, 8), spec) == (1, 0)
    assert winning_moves(is_p, Position(9, 8), spec) == [(1, 0), (2, 1), (3, 2)]
    assert best_move(is_p, Position(12, 6), spec) is None
    with pytest.raises(ValueError):
        best_move(is_p, Position(2, 3), spec)


def test_best_move_agrees_with_closed_form_membership(table_k5_30):
    spec = TerminalSpec(5)
    closed = p_membership(5)
    for p in [Position(12, 7), Position(9, 8), Position(20, 11), Position(30, 30)]:
        assert winning_moves(table_k5_30.is_p, p, spec) == winning_moves(closed, p, spec)


def test_fallback_move_minimizes_winning_replies(table_k5_30):
    spec = TerminalSpec(5)
    is_p = table_k5_30.is_p
    p = Position(12, 6)
    got = fallback_move(is_p, p, spec)
    counts = {
        q: sum(1 for r in moves(q, spec) if is_p(r)) for q in moves(p, spec)
    }
    expected = min(counts, key=lambda q: (counts[q], q))
    assert got == expected
    assert counts[got] == min(counts.values())


def test_classical_pairs_match_beatty_rows():
    table = build_table(TerminalSpec(0), 60)
    expected = {(0, 0)}
    n = 1
    while True:
        a = floor_phi(n)
        if a > 60:
            break
        b = a + n
        if b <= 60:
            expected.add((a, b))
            expected.add((b, a))
        n += 1
    assert set(table.p_positions()) == expected
