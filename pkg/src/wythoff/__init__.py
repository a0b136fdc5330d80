"""Engine for Wythoff-style queen games with an additive terminal region.

Brute-force Sprague-Grundy solving, exact closed-form P-position sequences,
a cross-verification harness, a CLI, and an HTTP play service.
"""

from .fibword import (
    AlphabetError,
    FibCache,
    Word,
    block_c,
    block_c1,
    block_d,
    c1_element,
    fib,
    floor_phi,
    rho,
    sigma,
)
from .game import MoveKind, Position, TerminalSpec, is_terminal, move_kind, moves
from .sequences import (
    AnchorPoints,
    IndexDecomposition,
    PClass,
    PPairStream,
    a_closed,
    a_seq,
    anchor_points,
    b_closed,
    b_seq,
    classify,
    closed_pair,
    decompose_index,
    index_of,
    p_membership,
    p_positions_below,
    pair_index,
    sequence_rows,
    stream_for,
)
from .solver import (
    CapacityError,
    GrundyTable,
    best_move,
    build_table,
    fallback_move,
    mex,
    p_grid,
    p_positions,
    winning_moves,
)
from .verify import (
    CheckReport,
    FAULTS,
    VerifyConfig,
    check_anchors_and_offset,
    check_block_counts,
    check_closed_form,
    check_diagonal_unreachability,
    check_partition,
    check_pset_equivalence,
    run_all,
)

__version__ = "0.1.0"
