"""Constraint checking for candidate images.

The verifiers are exhaustive and deliberately naive: they re-derive every
sum and every window content directly from the image. Tests of the solvers
trust this module as the arbiter, so it trades speed for obviousness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import InputError
from .grid import (
    BinaryImage,
    Pattern,
    RecInstance,
    Rel,
    WRecInstance,
    pattern_member,
    pattern_of,
)


@dataclass(frozen=True)
class RowSumViolation:
    q: int
    expected: int
    actual: int


@dataclass(frozen=True)
class ColSumViolation:
    p: int
    expected: int
    actual: int


@dataclass(frozen=True)
class BlockCapViolation:
    i: int
    j: int
    cap: int
    actual: int


@dataclass(frozen=True)
class PatternViolation:
    i: int
    j: int
    pattern: Pattern


@dataclass(frozen=True)
class WindowRelViolation:
    i: int
    j: int
    rel: Rel
    value: int
    actual: int


Violation = Union[
    RowSumViolation,
    ColSumViolation,
    BlockCapViolation,
    PatternViolation,
    WindowRelViolation,
]


@dataclass(frozen=True)
class ViolationReport:
    """All constraint violations of one candidate, in a fixed order."""

    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __iter__(self):
        return iter(self.violations)

    def __len__(self) -> int:
        return len(self.violations)


def _check_shape(m: int, n: int, x: BinaryImage) -> None:
    if x.m != m or x.n != n:
        raise InputError(f"image is {x.m}x{x.n}, instance expects {m}x{n}")


def _sum_violations(
    expected_rows: tuple[int, ...],
    expected_cols: tuple[int, ...],
    x: BinaryImage,
) -> list[Violation]:
    found: list[Violation] = []
    actual_rows = x.row_sums()
    for q in range(1, x.n + 1):
        if actual_rows[q - 1] != expected_rows[q - 1]:
            found.append(RowSumViolation(q, expected_rows[q - 1], actual_rows[q - 1]))
    actual_cols = x.col_sums()
    for p in range(1, x.m + 1):
        if actual_cols[p - 1] != expected_cols[p - 1]:
            found.append(ColSumViolation(p, expected_cols[p - 1], actual_cols[p - 1]))
    return found


def verify_rec(inst: RecInstance, x: BinaryImage) -> ViolationReport:
    """Check x against every constraint of inst.

    Reports row sums bottom-up, then column sums left to right, then per
    block (in corner order) the cap and pattern findings.
    """
    _check_shape(inst.m, inst.n, x)
    found = _sum_violations(inst.row_sums, inst.col_sums, x)
    cls = inst.pattern_class()
    for i, j in inst.corners():
        pattern = pattern_of(x, i, j, inst.k)
        cap = inst.block_values[(i, j)]
        if len(pattern) > cap:
            found.append(BlockCapViolation(i, j, cap, len(pattern)))
        if not pattern_member(pattern, cls):
            found.append(PatternViolation(i, j, pattern))
    return ViolationReport(tuple(found))


def verify_wrec(inst: WRecInstance, x: BinaryImage) -> ViolationReport:
    """Check x against every constraint of inst, windows in anchor order."""
    _check_shape(inst.m, inst.n, x)
    found = _sum_violations(inst.row_sums, inst.col_sums, x)
    cls = inst.pattern_class()
    for i, j in inst.anchors():
        pattern = pattern_of(x, i, j, inst.k)
        rel, value = inst.windows[(i, j)]
        if not rel.holds(len(pattern), value):
            found.append(WindowRelViolation(i, j, rel, value, len(pattern)))
        if not pattern_member(pattern, cls):
            found.append(PatternViolation(i, j, pattern))
    return ViolationReport(tuple(found))
