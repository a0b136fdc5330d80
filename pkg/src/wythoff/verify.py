"""Cross-verification harness: closed forms against brute force, identities
against direct enumeration.

Each check returns a CheckReport; a failing report always carries a concrete
counterexample.  Every check also owns one injected-fault fixture that
perturbs its inputs in a known-bad way, so the harness can demonstrate it
actually rejects wrong data (a check that cannot fail verifies nothing).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .fibword import block_c, block_d, fib
from .game import Position, TerminalSpec
from .sequences import (
    IndexDecomposition,
    closed_pair,
    decompose_index,
    a_closed,
    b_closed,
    anchor_points,
    p_positions_below,
    stream_for,
)
from .solver import build_table

# fault fixture name -> the check that must fail under it
FAULTS = {
    "pset-drop-pair": "pset_equivalence",
    "closed-form-h-overflow": "closed_form",
    "partition-lower-steps": "partition",
    "blocks-extra-copy": "block_counts",
    "offset-off-by-one": "anchors_and_offset",
    "diagonal-phantom-member": "diagonal_unreachability",
}

CHECK_NAMES = (
    "pset_equivalence",
    "closed_form",
    "partition",
    "block_counts",
    "anchors_and_offset",
    "diagonal_unreachability",
)


@dataclass(frozen=True)
class CheckReport:
    check: str
    params: dict[str, Any]
    passed: bool
    counterexample: dict[str, Any] | None = None

    def __post_init__(self) -> None:
        if not self.passed and not self.counterexample:
            raise ValueError("a failing report must carry a counterexample")

    def to_json(self) -> str:
        payload = {
            "check": self.check,
            "params": self.params,
            "status": "pass" if self.passed else "fail",
            "counterexample": self.counterexample,
        }
        return json.dumps(payload, separators=(",", ":"), sort_keys=True)


def reports_to_jsonl(reports: list[CheckReport]) -> str:
    return "".join(r.to_json() + "\n" for r in reports)


def _own_fault(check: str, fault: str | None) -> str | None:
    if fault is None:
        return None
    if fault not in FAULTS:
        raise ValueError(f"unknown fault fixture {fault!r}")
    return fault if FAULTS[fault] == check else None


def check_pset_equivalence(k: int, bound: int, fault: str | None = None) -> CheckReport:
    """Brute-force zero-Grundy set == closed-form P set on a full board."""
    if bound < 2 * k + 2:
        raise ValueError(f"bound {bound} cannot hold the first pair for k={k}")
    fault = _own_fault("pset_equivalence", fault)
    params = {"k": k, "bound": bound}
    brute = set(build_table(TerminalSpec(k), bound).p_positions())
    closed = set(p_positions_below(k, bound))
    if fault == "pset-drop-pair":
        first_pair = Position(2 * k + 2, k + 1) if k else Position(2, 1)
        closed.discard(first_pair)
    diff = brute.symmetric_difference(closed)
    if diff:
        p = min(diff)
        return CheckReport(
            "pset_equivalence",
            params,
            False,
            {
                "position": [p.x, p.y],
                "brute_force": p in brute,
                "closed_form": p in closed,
            },
        )
    return CheckReport("pset_equivalence", params, True)


def check_closed_form(k: int, max_index: int, fault: str | None = None) -> CheckReport:
    """Closed forms agree with the cumulative sums at every index 2..max_index."""
    fault = _own_fault("closed_form", fault)
    params = {"k": k, "max_index": max_index}
    st = stream_for(k)
    st.ensure_index(max_index)
    arr = st.a_prefix(max_index)
    for m in range(2, max_index + 1):
        if fault == "closed-form-h-overflow":
            # Deliberate misuse: widen the block offset range from 0..k-1 to
            # 0..k and push top-of-range indices over the edge.
            dec = decompose_index(k, m)
            if dec.h == k - 1:
                dec = IndexDecomposition(dec.n, dec.h + 1, dec.t)
            try:
                got = (a_closed(k, dec), b_closed(k, dec))
            except ValueError as err:
                return CheckReport(
                    "closed_form", params, False, {"index": m, "error": str(err)}
                )
        else:
            got = closed_pair(k, m)
        a = int(arr[m - 1])
        want = (a, a + m + k)
        if got != want:
            return CheckReport(
                "closed_form",
                params,
                False,
                {"index": m, "cumulative": list(want), "closed_form": list(got)},
            )
    return CheckReport("closed_form", params, True)


def check_partition(k: int, value_bound: int, fault: str | None = None) -> CheckReport:
    """Lower and upper values cover k+1 .. value_bound exactly once."""
    fault = _own_fault("partition", fault)
    params = {"k": k, "value_bound": value_bound}
    st = stream_for(k)
    st.ensure_value(value_bound + 1)
    a = np.asarray(st.a_prefix(len(st)))
    n_idx = np.arange(1, len(a) + 1, dtype=np.int64)
    if fault == "partition-lower-steps":
        # Build the upper sequence with the lower differences instead of its own.
        b = np.empty_like(a)
        b[0] = 2 * k + 2
        b[1:] = 2 * k + 2 + np.cumsum(np.diff(a))
    else:
        b = a + n_idx + k
    counts = np.zeros(value_bound + 1, dtype=np.int64)
    for vals in (a, b):
        inside = vals[vals <= value_bound]
        counts += np.bincount(inside, minlength=value_bound + 1)
    low = counts[: k + 1]
    if low.any():
        v = int(np.flatnonzero(low)[0])
        return CheckReport(
            "partition", params, False,
            {"value": v, "count": int(counts[v]), "expected_count": 0},
        )
    body = counts[k + 1 :]
    bad = np.flatnonzero(body != 1)
    if bad.size:
        v = int(bad[0]) + k + 1
        return CheckReport(
            "partition", params, False,
            {"value": v, "count": int(counts[v]), "expected_count": 1},
        )
    return CheckReport("partition", params, True)


def check_block_counts(k: int, max_block: int, fault: str | None = None) -> CheckReport:
    """Block lengths and symbol sums hit k*F(i), k*F(i+1), and k*F(i+2)."""
    fault = _own_fault("block_counts", fault)
    params = {"k": k, "max_block": max_block}
    copies = k + 1 if fault == "blocks-extra-copy" else k
    for i in range(1, max_block + 1):
        lower = block_c(i, copies)
        upper = block_d(i, copies)
        facts = [
            ("lower length", len(lower), k * fib(i)),
            ("lower sum", lower.symbol_sum(), k * fib(i + 1)),
            ("upper length", len(upper), k * fib(i)),
            ("upper sum", upper.symbol_sum(), k * fib(i + 2)),
        ]
        for quantity, actual, expected in facts:
            if actual != expected:
                return CheckReport(
                    "block_counts",
                    params,
                    False,
                    {
                        "block": i,
                        "quantity": quantity,
                        "expected": expected,
                        "actual": actual,
                    },
                )
    return CheckReport("block_counts", params, True)


def check_anchors_and_offset(
    k: int, max_index: int, fault: str | None = None
) -> CheckReport:
    """Upper-minus-lower offset and Fibonacci anchor values, both exact.

    The upper sequence is rebuilt here from its own difference symbols, so
    the offset identity b_n = a_n + n + k is compared across two independent
    constructions rather than restated.
    """
    fault = _own_fault("anchors_and_offset", fault)
    params = {"k": k, "max_index": max_index}
    st = stream_for(k)
    st.ensure_index(max_index)
    a = np.asarray(st.a_prefix(max_index))
    b_ind = np.empty_like(a)
    b_ind[0] = 2 * k + 2
    b_ind[1:] = 2 * k + 2 + np.cumsum(np.diff(a) + 1)
    if fault == "offset-off-by-one":
        b_ind = b_ind.copy()
        b_ind[-1] += 1
    offsets = a + np.arange(1, max_index + 1, dtype=np.int64) + k
    bad = np.flatnonzero(b_ind != offsets)
    if bad.size:
        m = int(bad[0]) + 1
        return CheckReport(
            "anchors_and_offset",
            params,
            False,
            {
                "index": m,
                "from_differences": int(b_ind[m - 1]),
                "from_offset": int(offsets[m - 1]),
            },
        )
    n = 1
    while True:
        anchor = anchor_points(k, n)
        if anchor.a_index > max_index and anchor.b_index > max_index:
            break
        if anchor.a_index <= max_index and int(a[anchor.a_index - 1]) != anchor.a_value:
            return CheckReport(
                "anchors_and_offset",
                params,
                False,
                {
                    "anchor_n": n,
                    "side": "lower",
                    "index": anchor.a_index,
                    "expected": anchor.a_value,
                    "actual": int(a[anchor.a_index - 1]),
                },
            )
        if anchor.b_index <= max_index and int(b_ind[anchor.b_index - 1]) != anchor.b_value:
            return CheckReport(
                "anchors_and_offset",
                params,
                False,
                {
                    "anchor_n": n,
                    "side": "upper",
                    "index": anchor.b_index,
                    "expected": anchor.b_value,
                    "actual": int(b_ind[anchor.b_index - 1]),
                },
            )
        n += 1
    return CheckReport("anchors_and_offset", params, True)


def check_diagonal_unreachability(
    k: int, bound: int, fault: str | None = None
) -> CheckReport:
    """No diagonal move from above a pair, in either orientation, lands in P.

    Sources are (b_n + h, a_n) and (a_n, b_n + h) for every h >= 0 that stays
    on the board; every diagonal target of every source is enumerated.
    """
    if k < 1:
        raise ValueError(f"diagonal check needs k >= 1, got {k}")
    fault = _own_fault("diagonal_unreachability", fault)
    params = {"k": k, "bound": bound}
    members = p_positions_below(k, bound)
    grid = np.zeros((bound + 1, bound + 1), dtype=bool)
    for p in members:
        grid[p.x, p.y] = True
    if fault == "diagonal-phantom-member":
        grid[2 * k + 2, k] = True
    st = stream_for(k)
    n = 1
    while True:
        a = st.a(n)
        b = a + n + k
        if b > bound:
            break
        hs = np.arange(0, bound - b + 1, dtype=np.int64)[:, None]
        ts = np.arange(1, a + 1, dtype=np.int64)[None, :]
        xs = b + hs - ts
        ys = np.broadcast_to(a - ts, xs.shape)
        for tag, hits in (("upper-first", grid[xs, ys]), ("lower-first", grid[ys, xs])):
            if hits.any():
                hi, ti = np.argwhere(hits)[0]
                src = [int(b + hs[hi, 0]), a] if tag == "upper-first" else [a, int(b + hs[hi, 0])]
                tgt = [int(xs[hi, ti]), int(ys[hi, ti])]
                if tag == "lower-first":
                    tgt.reverse()
                return CheckReport(
                    "diagonal_unreachability",
                    params,
                    False,
                    {"pair_index": n, "from": src, "target": tgt},
                )
        n += 1
    return CheckReport("diagonal_unreachability", params, True)


@dataclass(frozen=True)
class VerifyConfig:
    """Desk-scale default grid; completes in well under a minute."""

    pset_ks: tuple[int, ...] = (0, 1, 2, 3, 5, 8)
    pset_bound: int = 200
    seq_ks: tuple[int, ...] = (1, 2, 3, 5, 8)
    max_index: int = 100_000
    partition_ks: tuple[int, ...] = (1, 2, 5)
    partition_bound: int = 100_000
    block_ks: tuple[int, ...] = (1, 2, 5, 8)
    max_block: int = 25
    diagonal_ks: tuple[int, ...] = (1, 5)
    diagonal_bound: int = 500
    checks: tuple[str, ...] = CHECK_NAMES

    def __post_init__(self) -> None:
        unknown = set(self.checks) - set(CHECK_NAMES)
        if unknown:
            raise ValueError(f"unknown check names: {sorted(unknown)}")


def run_all(config: VerifyConfig | None = None, fault: str | None = None) -> list[CheckReport]:
    """Run the selected checks over the configured grid, in a fixed order."""
    cfg = config or VerifyConfig()
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault fixture {fault!r}")
    reports: list[CheckReport] = []
    if "pset_equivalence" in cfg.checks:
        for k in cfg.pset_ks:
            reports.append(check_pset_equivalence(k, cfg.pset_bound, fault))
    if "closed_form" in cfg.checks:
        for k in cfg.seq_ks:
            reports.append(check_closed_form(k, cfg.max_index, fault))
    if "partition" in cfg.checks:
        for k in cfg.partition_ks:
            reports.append(check_partition(k, cfg.partition_bound, fault))
    if "block_counts" in cfg.checks:
        for k in cfg.block_ks:
            reports.append(check_block_counts(k, cfg.max_block, fault))
    if "anchors_and_offset" in cfg.checks:
        for k in cfg.seq_ks:
            reports.append(check_anchors_and_offset(k, cfg.max_index, fault))
    if "diagonal_unreachability" in cfg.checks:
        for k in cfg.diagonal_ks:
            reports.append(check_diagonal_unreachability(k, cfg.diagonal_bound, fault))
    return reports
