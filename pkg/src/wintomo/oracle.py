"""Exhaustive depth-first solver; the ground truth at desk scale.

Cells are assigned row by row (bottom row first, left to right). The search
prunes on running row and column sums, on window sum bounds, and on whether
each partially filled window can still extend to an admissible pattern. The
pattern prune keeps, per window, a bitmask over the enumerated admissible
patterns that agree with every decided cell so far.

Everything is deterministic: identical inputs give identical results and
identical node counts. Work is metered in nodes (one per attempted cell
assignment) against a configurable budget.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InputError
from .grid import (
    BinaryImage,
    PatternClass,
    RecInstance,
    Rel,
    WRecInstance,
    corner_points,
    pattern_enumerate,
    window_cells,
)

Instance = RecInstance | WRecInstance


class Status(enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    LIMIT = "limit"


@dataclass(frozen=True)
class OracleLimits:
    """Guards keeping the exponential search at desk scale.

    max_cells bounds the grid area (override deliberately for bigger
    instances); max_nodes bounds attempted assignments.
    """

    max_cells: int = 36
    max_nodes: int = 10_000_000

    def __post_init__(self) -> None:
        if self.max_cells < 1 or self.max_nodes < 1:
            raise InputError("oracle limits must be positive")


@dataclass(frozen=True)
class OracleResult:
    status: Status
    image: BinaryImage | None
    nodes: int


@dataclass(frozen=True)
class EnumerationResult:
    """Solutions in search order. truncated: stopped at the cap;
    limit_hit: the node budget or cell guard cut the search short."""

    images: tuple[BinaryImage, ...]
    truncated: bool
    limit_hit: bool
    nodes: int

    @property
    def exact(self) -> bool:
        return not self.truncated and not self.limit_hit


class _Budget(Exception):
    pass


def _quick_infeasible(inst: Instance) -> bool:
    # Sound necessary conditions, checked before any search starts.
    if sum(inst.row_sums) != sum(inst.col_sums):
        return True
    if any(r > inst.m for r in inst.row_sums):
        return True
    if any(c > inst.n for c in inst.col_sums):
        return True
    if isinstance(inst, WRecInstance):
        area = inst.k * inst.k
        for rel, value in inst.windows.values():
            if rel is not Rel.LE and value > area:
                return True
    return False


class _Search:
    def __init__(self, inst: Instance, max_nodes: int):
        self.max_nodes = max_nodes
        self.nodes = 0
        self.m = inst.m
        self.n = inst.n
        self.row_target = inst.row_sums
        self.col_target = inst.col_sums

        if isinstance(inst, RecInstance):
            anchors = corner_points(inst.m, inst.n, inst.k)
            constraints = [
                (i, j, Rel.LE, inst.block_values[(i, j)]) for (i, j) in anchors
            ]
        elif isinstance(inst, WRecInstance):
            anchors = inst.anchors()
            constraints = [(i, j, *inst.windows[(i, j)]) for (i, j) in anchors]
        else:
            raise InputError(f"oracle expects a Rec or WRec instance, got {type(inst)!r}")

        area = inst.k * inst.k
        self.win_ub = [value if rel is not Rel.GE else area for _i, _j, rel, value in constraints]
        self.win_lb = [value if rel is not Rel.LE else 0 for _i, _j, rel, value in constraints]
        self.win_cur = [0] * len(constraints)
        self.win_left = [area] * len(constraints)

        num_cells = inst.m * inst.n
        self.win_of_cell: list[list[int]] = [[] for _ in range(num_cells)]
        for w, (i, j, _rel, _value) in enumerate(constraints):
            for p, q in window_cells(i, j, inst.k):
                self.win_of_cell[(q - 1) * inst.m + (p - 1)].append(w)

        # Pattern machinery; dormant when t=0 admits everything.
        self.anchor_of_cell: list[list[tuple[int, tuple[int, int]]]] = [
            [] for _ in range(num_cells)
        ]
        self.viable: list[int] = []
        self.off_one: dict[tuple[int, int], int] = {}
        self.off_zero: dict[tuple[int, int], int] = {}
        if inst.t != 0:
            members = pattern_enumerate(PatternClass(inst.k, inst.t))
            full = (1 << len(members)) - 1
            for a in range(inst.k):
                for b in range(inst.k):
                    mask = 0
                    for index, pattern in enumerate(members):
                        if (a, b) in pattern:
                            mask |= 1 << index
                    self.off_one[(a, b)] = mask
                    self.off_zero[(a, b)] = full ^ mask
            self.viable = [full] * len(anchors)
            for a_idx, (i, j) in enumerate(anchors):
                for p, q in window_cells(i, j, inst.k):
                    self.anchor_of_cell[(q - 1) * inst.m + (p - 1)].append(
                        (a_idx, (p - i, q - j))
                    )

        self.values = [0] * num_cells
        self.row_cur = [0] * (inst.n + 1)
        self.col_cur = [0] * (inst.m + 1)

    def run(self, sols: list[BinaryImage], want: int) -> bool:
        """Collect solutions into sols until want are found; True if cut short."""
        return self._assign(0, sols, want)

    def _assign(self, idx: int, sols: list[BinaryImage], want: int) -> bool:
        if idx == self.m * self.n:
            sols.append(self._snapshot())
            return len(sols) >= want
        q, p = divmod(idx, self.m)
        q += 1
        p += 1
        wins = self.win_of_cell[idx]
        anchors = self.anchor_of_cell[idx]
        rq = self.row_target[q - 1]
        cp = self.col_target[p - 1]
        for val in (0, 1):
            self.nodes += 1
            if self.nodes > self.max_nodes:
                raise _Budget
            r_new = self.row_cur[q] + val
            if r_new > rq or r_new + (self.m - p) < rq:
                continue
            c_new = self.col_cur[p] + val
            if c_new > cp or c_new + (self.n - q) < cp:
                continue
            ok = True
            for w in wins:
                s_new = self.win_cur[w] + val
                if s_new > self.win_ub[w] or s_new + self.win_left[w] - 1 < self.win_lb[w]:
                    ok = False
                    break
            if not ok:
                continue
            new_masks: list[tuple[int, int]] = []
            for a_idx, off in anchors:
                mask = self.viable[a_idx] & (
                    self.off_one[off] if val else self.off_zero[off]
                )
                if mask == 0:
                    ok = False
                    break
                new_masks.append((a_idx, mask))
            if not ok:
                continue

            self.row_cur[q] = r_new
            self.col_cur[p] = c_new
            for w in wins:
                self.win_cur[w] += val
                self.win_left[w] -= 1
            old_masks = [(a_idx, self.viable[a_idx]) for a_idx, _ in new_masks]
            for a_idx, mask in new_masks:
                self.viable[a_idx] = mask
            self.values[idx] = val

            if self._assign(idx + 1, sols, want):
                return True

            self.row_cur[q] -= val
            self.col_cur[p] -= val
            for w in wins:
                self.win_cur[w] -= val
                self.win_left[w] += 1
            for a_idx, mask in old_masks:
                self.viable[a_idx] = mask
        return False

    def _snapshot(self) -> BinaryImage:
        vals = self.values
        m = self.m
        return BinaryImage(
            m,
            self.n,
            tuple(
                tuple(vals[(q - 1) * m + (p - 1)] for p in range(1, m + 1))
                for q in range(1, self.n + 1)
            ),
        )


def oracle_solve(inst: Instance, limits: OracleLimits | None = None) -> OracleResult:
    """First solution in search order, or INFEASIBLE, or LIMIT."""
    limits = limits or OracleLimits()
    if inst.m * inst.n > limits.max_cells:
        return OracleResult(Status.LIMIT, None, 0)
    if _quick_infeasible(inst):
        return OracleResult(Status.INFEASIBLE, None, 0)
    search = _Search(inst, limits.max_nodes)
    sols: list[BinaryImage] = []
    try:
        search.run(sols, 1)
    except _Budget:
        return OracleResult(Status.LIMIT, None, search.nodes)
    if sols:
        return OracleResult(Status.FEASIBLE, sols[0], search.nodes)
    return OracleResult(Status.INFEASIBLE, None, search.nodes)


def oracle_enumerate(
    inst: Instance, limits: OracleLimits | None = None, cap: int = 1_000_000
) -> EnumerationResult:
    """All solutions in search order, truncated at cap.

    The solution count is exact exactly when the result reports neither
    truncation nor a tripped limit.
    """
    limits = limits or OracleLimits()
    if cap < 1:
        raise InputError(f"cap must be positive, got {cap}")
    if inst.m * inst.n > limits.max_cells:
        return EnumerationResult((), False, True, 0)
    if _quick_infeasible(inst):
        return EnumerationResult((), False, False, 0)
    search = _Search(inst, limits.max_nodes)
    sols: list[BinaryImage] = []
    truncated = False
    limit_hit = False
    try:
        truncated = search.run(sols, cap)
    except _Budget:
        limit_hit = True
    return EnumerationResult(tuple(sols), truncated, limit_hit, search.nodes)
