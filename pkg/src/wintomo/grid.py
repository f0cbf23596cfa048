"""Grid geometry and combinatorics: images, blocks, windows, strips, patterns.

Coordinates are Cartesian and 1-based throughout. A cell (p, q) sits in
column p (the x direction) and row q (the y direction); row 1 is the bottom
row. Window anchors follow the same convention: the window at (i, j) covers
columns i..i+k-1 and rows j..j+k-1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InputError, LimitError

Cell = tuple[int, int]
Offset = tuple[int, int]
Pattern = frozenset  # frozenset of Offset, the ones inside one window

# Largest window side for which full 2^(k*k) pattern enumeration is permitted.
PATTERN_ENUM_MAX_K = 4


@dataclass(frozen=True)
class BinaryImage:
    """Immutable 0/1 grid with m columns and n rows.

    rows[q-1][p-1] holds the value of cell (p, q). Images are hashable, so
    they can be collected into sets when enumerating solution spaces.
    """

    m: int
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise InputError(f"image dimensions must be positive, got {self.m}x{self.n}")
        if len(self.rows) != self.n:
            raise InputError(f"expected {self.n} rows, got {len(self.rows)}")
        for row in self.rows:
            if len(row) != self.m:
                raise InputError(f"expected rows of width {self.m}, got {len(row)}")
            for bit in row:
                if bit not in (0, 1):
                    raise InputError(f"cell values must be 0 or 1, got {bit!r}")

    @classmethod
    def zeros(cls, m: int, n: int) -> "BinaryImage":
        return cls(m, n, tuple((0,) * m for _ in range(n)))

    @classmethod
    def from_ones(cls, m: int, n: int, ones: Iterable[Cell]) -> "BinaryImage":
        grid = [[0] * m for _ in range(n)]
        for p, q in ones:
            if not (1 <= p <= m and 1 <= q <= n):
                raise InputError(f"cell ({p},{q}) lies outside the {m}x{n} grid")
            grid[q - 1][p - 1] = 1
        return cls(m, n, tuple(tuple(row) for row in grid))

    def __getitem__(self, cell: Cell) -> int:
        p, q = cell
        return self.rows[q - 1][p - 1]

    def ones(self) -> list[Cell]:
        """Cells holding a 1, ordered by row then column."""
        return [
            (p, q)
            for q in range(1, self.n + 1)
            for p in range(1, self.m + 1)
            if self.rows[q - 1][p - 1]
        ]

    def count_ones(self) -> int:
        return sum(map(sum, self.rows))

    def row_sums(self) -> tuple[int, ...]:
        """(r_1, ..., r_n), the number of ones in each row, bottom first."""
        return tuple(sum(row) for row in self.rows)

    def col_sums(self) -> tuple[int, ...]:
        """(c_1, ..., c_m), the number of ones in each column, left first."""
        return tuple(sum(col) for col in zip(*self.rows))

    def complement(self) -> "BinaryImage":
        return BinaryImage(
            self.m, self.n, tuple(tuple(1 - bit for bit in row) for row in self.rows)
        )


def _check_block_grid(m: int, n: int, k: int) -> None:
    if k < 1:
        raise InputError(f"window side must be positive, got k={k}")
    if m < 1 or n < 1:
        raise InputError(f"grid dimensions must be positive, got {m}x{n}")
    if m % k != 0 or n % k != 0:
        raise InputError(f"k={k} must divide both m={m} and n={n}")


def corner_points(m: int, n: int, k: int) -> list[Cell]:
    """Anchors of the k x k blocks tiling the m x n grid.

    Ordered by row strip then column strip, so (1,1), (1+k,1), ... come first.
    """
    _check_block_grid(m, n, k)
    return [(i, j) for j in range(1, n + 1, k) for i in range(1, m + 1, k)]


def window_cells(i: int, j: int, k: int) -> set[Cell]:
    """The k*k cells covered by the window anchored at (i, j)."""
    return {(i + a, j + b) for a in range(k) for b in range(k)}


def pattern_of(x: BinaryImage, i: int, j: int, k: int) -> Pattern:
    """Offsets of the ones inside the k-window of x anchored at (i, j)."""
    if i < 1 or j < 1 or i + k - 1 > x.m or j + k - 1 > x.n:
        raise InputError(
            f"window at ({i},{j}) with side {k} exceeds the {x.m}x{x.n} grid"
        )
    return frozenset(
        (a, b)
        for b in range(k)
        for a in range(k)
        if x.rows[j + b - 1][i + a - 1]
    )


@dataclass(frozen=True)
class PatternClass:
    """A family of admissible window contents, selected by t.

    t=0 admits every pattern. t=1 admits only the empty window and the two
    single-corner patterns {(0,0)} and {(k-1,k-1)}. t=2 admits at most one 1
    per window row. t=3 admits at least k-1 ones per window row and is
    defined for k >= 2 only.
    """

    k: int
    t: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InputError(f"window side must be positive, got k={self.k}")
        if self.t not in (0, 1, 2, 3):
            raise InputError(f"t must be one of 0, 1, 2, 3, got {self.t}")
        if self.t == 3 and self.k < 2:
            raise InputError("t=3 requires k >= 2")


def pattern_member(pattern: Iterable[Offset], cls: PatternClass) -> bool:
    """Whether the given set of offsets belongs to the family."""
    pat = frozenset(pattern)
    k = cls.k
    for a, b in pat:
        if not (0 <= a < k and 0 <= b < k):
            raise InputError(f"offset ({a},{b}) lies outside the {k}x{k} window")
    if cls.t == 0:
        return True
    if cls.t == 1:
        return pat in (frozenset(), frozenset({(0, 0)}), frozenset({(k - 1, k - 1)}))
    per_row = [0] * k
    for _a, b in pat:
        per_row[b] += 1
    if cls.t == 2:
        return all(count <= 1 for count in per_row)
    return all(count >= k - 1 for count in per_row)


def pattern_enumerate(cls: PatternClass) -> list[Pattern]:
    """All members of the family, in a fixed order, without duplicates.

    Guarded: enumeration walks all 2^(k*k) subsets, so k is capped at
    PATTERN_ENUM_MAX_K.
    """
    if cls.k > PATTERN_ENUM_MAX_K:
        raise LimitError(
            f"pattern enumeration is limited to k <= {PATTERN_ENUM_MAX_K}, got k={cls.k}"
        )
    offsets = [(a, b) for b in range(cls.k) for a in range(cls.k)]
    members: list[Pattern] = []
    for bits in range(1 << len(offsets)):
        subset = frozenset(
            offsets[idx] for idx in range(len(offsets)) if bits >> idx & 1
        )
        if pattern_member(subset, cls):
            members.append(subset)
    return members


class Axis(enum.Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


def strip_rank(corners: Iterable[Cell], axis: Axis, i: int, j: int) -> int:
    """Position of (i, j) within its strip of selected corners.

    VERTICAL counts selected corners (i, b) with b <= j; HORIZONTAL counts
    selected corners (a, j) with a <= i.
    """
    if axis is Axis.VERTICAL:
        return sum(1 for a, b in corners if a == i and b <= j)
    return sum(1 for a, b in corners if b == j and a <= i)


def region_and_projections(
    corners: Iterable[Cell], k: int
) -> tuple[set[Cell], set[int], set[int]]:
    """Union of the k-blocks over the corner set, plus its two projections.

    Returns (region, column anchors, row anchors): the cells covered by the
    selected blocks, the set of first coordinates, and the set of second
    coordinates.
    """
    corner_list = list(corners)
    region: set[Cell] = set()
    for i, j in corner_list:
        region |= window_cells(i, j, k)
    return region, {i for i, _ in corner_list}, {j for _, j in corner_list}


class Rel(enum.Enum):
    """Comparison attached to a window measurement."""

    LE = "<="
    GE = ">="
    EQ = "="

    def holds(self, actual: int, value: int) -> bool:
        if self is Rel.LE:
            return actual <= value
        if self is Rel.GE:
            return actual >= value
        return actual == value


def _check_sums(sums: tuple[int, ...], length: int, label: str) -> None:
    if len(sums) != length:
        raise InputError(f"expected {length} {label} sums, got {len(sums)}")
    for value in sums:
        if not isinstance(value, int) or value < 0:
            raise InputError(f"{label} sums must be nonnegative integers, got {value!r}")


@dataclass(frozen=True)
class RecInstance:
    """Reconstruction instance over a blocked grid.

    Sought is a 0/1 image with the given row and column sums whose ones,
    restricted to each k x k block anchored at a corner point, number at
    most the block's value v in {0, nu} and form a pattern admitted by
    PatternClass(k, t).
    """

    k: int
    nu: int
    t: int
    m: int
    n: int
    row_sums: tuple[int, ...]
    col_sums: tuple[int, ...]
    block_values: Mapping[Cell, int]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InputError(f"k must be positive, got {self.k}")
        if self.nu < 1:
            raise InputError(f"nu must be positive, got {self.nu}")
        if self.t not in (0, 1, 2):
            raise InputError(f"t must be one of 0, 1, 2, got {self.t}")
        _check_block_grid(self.m, self.n, self.k)
        object.__setattr__(self, "row_sums", tuple(self.row_sums))
        object.__setattr__(self, "col_sums", tuple(self.col_sums))
        object.__setattr__(self, "block_values", dict(self.block_values))
        _check_sums(self.row_sums, self.n, "row")
        _check_sums(self.col_sums, self.m, "column")
        expected = corner_points(self.m, self.n, self.k)
        if set(self.block_values) != set(expected):
            raise InputError("block_values must cover exactly the corner points")
        for cell, value in self.block_values.items():
            if value not in (0, self.nu):
                raise InputError(
                    f"block value at {cell} must be 0 or nu={self.nu}, got {value}"
                )

    def pattern_class(self) -> PatternClass:
        return PatternClass(self.k, self.t)

    def corners(self) -> list[Cell]:
        return corner_points(self.m, self.n, self.k)


@dataclass(frozen=True)
class WRecInstance:
    """Window-constrained instance.

    Window anchors may sit anywhere on the grid and may overlap. Each anchor
    carries a relation and a value constraining the number of ones inside its
    window; the window contents must additionally belong to PatternClass(k, t).
    """

    k: int
    t: int
    m: int
    n: int
    row_sums: tuple[int, ...]
    col_sums: tuple[int, ...]
    windows: Mapping[Cell, tuple[Rel, int]]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InputError(f"k must be positive, got {self.k}")
        if self.t not in (0, 1, 2, 3):
            raise InputError(f"t must be one of 0, 1, 2, 3, got {self.t}")
        if self.t == 3 and self.k < 2:
            raise InputError("t=3 requires k >= 2")
        _check_block_grid(self.m, self.n, self.k)
        object.__setattr__(self, "row_sums", tuple(self.row_sums))
        object.__setattr__(self, "col_sums", tuple(self.col_sums))
        object.__setattr__(self, "windows", dict(self.windows))
        _check_sums(self.row_sums, self.n, "row")
        _check_sums(self.col_sums, self.m, "column")
        for (i, j), (rel, value) in self.windows.items():
            if i < 1 or j < 1 or i + self.k - 1 > self.m or j + self.k - 1 > self.n:
                raise InputError(
                    f"window at ({i},{j}) with side {self.k} exceeds the grid"
                )
            if not isinstance(rel, Rel):
                raise InputError(f"window at ({i},{j}) needs a Rel, got {rel!r}")
            if not isinstance(value, int) or value < 0:
                raise InputError(
                    f"window value at ({i},{j}) must be a nonnegative integer, got {value!r}"
                )

    def pattern_class(self) -> PatternClass:
        return PatternClass(self.k, self.t)

    def anchors(self) -> list[Cell]:
        """Window anchors ordered by row then column."""
        return sorted(self.windows, key=lambda cell: (cell[1], cell[0]))
