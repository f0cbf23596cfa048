"""Placing exactly one 1 in each selected block of a blocked grid.

Given a set of selected corner points and row/column sums restricted to the
strips those blocks touch, feasibility has a closed-form criterion: every
selected block's horizontal strip must carry exactly as many ones as the
strip holds selected blocks, and likewise for vertical strips. Feasible
instances admit an explicit construction that drops each block's 1 at the
first position of its strips with enough cumulative sum to absorb it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .errors import InputError
from .grid import BinaryImage, Cell, _check_block_grid, corner_points


@dataclass(frozen=True)
class OnePerBlockInstance:
    """Corner selection plus sums on exactly the touched strips.

    row_sums maps each row of a touched horizontal strip to its sum, and
    col_sums each column of a touched vertical strip; rows and columns of
    untouched strips carry no entry.
    """

    k: int
    m: int
    n: int
    corners: frozenset
    row_sums: Mapping[int, int]
    col_sums: Mapping[int, int]

    def __post_init__(self) -> None:
        _check_block_grid(self.m, self.n, self.k)
        object.__setattr__(self, "corners", frozenset(self.corners))
        object.__setattr__(self, "row_sums", dict(self.row_sums))
        object.__setattr__(self, "col_sums", dict(self.col_sums))
        lattice = set(corner_points(self.m, self.n, self.k))
        for cell in self.corners:
            if cell not in lattice:
                raise InputError(f"{cell} is not a corner point of the {self.m}x{self.n} grid")
        rows = {j + l for _i, j in self.corners for l in range(self.k)}
        cols = {i + l for i, _j in self.corners for l in range(self.k)}
        if set(self.row_sums) != rows:
            raise InputError("row_sums must cover exactly the rows of touched strips")
        if set(self.col_sums) != cols:
            raise InputError("col_sums must cover exactly the columns of touched strips")
        for value in list(self.row_sums.values()) + list(self.col_sums.values()):
            if not isinstance(value, int) or value < 0:
                raise InputError(f"strip sums must be nonnegative integers, got {value!r}")


def is_feasible(inst: OnePerBlockInstance) -> bool:
    """Closed-form feasibility: each touched strip's total equals its block count."""
    per_row = Counter(j for _i, j in inst.corners)
    per_col = Counter(i for i, _j in inst.corners)
    for i, j in inst.corners:
        row_total = sum(inst.row_sums[j + l] for l in range(inst.k))
        col_total = sum(inst.col_sums[i + l] for l in range(inst.k))
        if row_total != per_row[j] or col_total != per_col[i]:
            return False
    return True


def construct(inst: OnePerBlockInstance) -> BinaryImage:
    """Explicit solution for a feasible instance.

    Each selected block receives one 1; its column is the first of the
    block's vertical strip whose cumulative column sum reaches the block's
    rank in that strip, and its row is found the same way horizontally.
    """
    if not is_feasible(inst):
        raise InputError("instance fails the strip-sum criterion; nothing to construct")

    by_col: dict[int, list[int]] = {}
    by_row: dict[int, list[int]] = {}
    for i, j in inst.corners:
        by_col.setdefault(i, []).append(j)
        by_row.setdefault(j, []).append(i)
    col_rank = {
        (i, j): rank
        for i, js in by_col.items()
        for rank, j in enumerate(sorted(js), start=1)
    }
    row_rank = {
        (i, j): rank
        for j, iis in by_row.items()
        for rank, i in enumerate(sorted(iis), start=1)
    }

    ones: list[Cell] = []
    for i, j in sorted(inst.corners, key=lambda cell: (cell[1], cell[0])):
        ones.append(
            (
                _first_fit(i, col_rank[(i, j)], inst.col_sums, inst.k),
                _first_fit(j, row_rank[(i, j)], inst.row_sums, inst.k),
            )
        )
    return BinaryImage.from_ones(inst.m, inst.n, ones)


def _first_fit(start: int, rank: int, sums: Mapping[int, int], k: int) -> int:
    prefix = 0
    for l in range(k):
        prefix += sums[start + l]
        if rank <= prefix:
            return start + l
    raise InputError("strip cannot absorb its blocks; instance is infeasible")
