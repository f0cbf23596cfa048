"""Transformations carrying feasibility between instance classes.

Covers the 3-color encoding into corner-pattern instances, padding of 2x2
window instances into larger window sizes (with zeros or ones filling the
grown blocks), color inversion for window instances, and block-size padding
for blocked instances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .grid import (
    BinaryImage,
    Cell,
    RecInstance,
    Rel,
    WRecInstance,
    corner_points,
    pattern_of,
)


@dataclass(frozen=True)
class ThreeColorInstance:
    """Row and column sums of two disjoint colors on an m x n grid.

    The third color is the blank background; it carries no sums.
    """

    m: int
    n: int
    row_sums_1: tuple[int, ...]
    row_sums_2: tuple[int, ...]
    col_sums_1: tuple[int, ...]
    col_sums_2: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise InputError(f"grid dimensions must be positive, got {self.m}x{self.n}")
        for name in ("row_sums_1", "row_sums_2", "col_sums_1", "col_sums_2"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        for name, length in (
            ("row_sums_1", self.n),
            ("row_sums_2", self.n),
            ("col_sums_1", self.m),
            ("col_sums_2", self.m),
        ):
            sums = getattr(self, name)
            if len(sums) != length:
                raise InputError(f"{name} must have {length} entries, got {len(sums)}")
            for value in sums:
                if not isinstance(value, int) or value < 0:
                    raise InputError(f"{name} entries must be nonnegative integers")


@dataclass(frozen=True)
class ThreeColorSolution:
    """Two binary images with disjoint supports, one per colored class."""

    color_1: BinaryImage
    color_2: BinaryImage

    def __post_init__(self) -> None:
        a, b = self.color_1, self.color_2
        if (a.m, a.n) != (b.m, b.n):
            raise InputError("color images must share dimensions")
        for cell in a.ones():
            if b[cell]:
                raise InputError(f"cell {cell} carries both colors")


def three_color_to_rec(tc: ThreeColorInstance) -> RecInstance:
    """Encode a 3-color instance as a corner-pattern instance on a doubled grid.

    Each source cell becomes a 2x2 block; color 1 occupies the block's
    lower-left corner, color 2 its upper-right corner, blank leaves the
    block empty. Interleaving the two sum families row by row (and column
    by column) makes the encodings match exactly.
    """
    m2, n2 = 2 * tc.m, 2 * tc.n
    rows = [0] * n2
    for q in range(1, tc.n + 1):
        rows[2 * q - 2] = tc.row_sums_1[q - 1]
        rows[2 * q - 1] = tc.row_sums_2[q - 1]
    cols = [0] * m2
    for p in range(1, tc.m + 1):
        cols[2 * p - 2] = tc.col_sums_1[p - 1]
        cols[2 * p - 1] = tc.col_sums_2[p - 1]
    values = {corner: 1 for corner in corner_points(m2, n2, 2)}
    return RecInstance(2, 1, 1, m2, n2, tuple(rows), tuple(cols), values)


def decode_three_color(x: BinaryImage) -> ThreeColorSolution:
    """Read a solution of the doubled instance back as a 3-coloring.

    Expects every 2x2 block to be empty or to hold a single corner 1;
    anything else is an input error.
    """
    if x.m % 2 or x.n % 2:
        raise InputError(f"image dimensions must be even, got {x.m}x{x.n}")
    m, n = x.m // 2, x.n // 2
    ones_1: list[Cell] = []
    ones_2: list[Cell] = []
    for q in range(1, n + 1):
        for p in range(1, m + 1):
            pattern = pattern_of(x, 2 * p - 1, 2 * q - 1, 2)
            if not pattern:
                continue
            if pattern == frozenset({(0, 0)}):
                ones_1.append((p, q))
            elif pattern == frozenset({(1, 1)}):
                ones_2.append((p, q))
            else:
                raise InputError(
                    f"block at ({2 * p - 1},{2 * q - 1}) holds {sorted(pattern)}; "
                    "expected empty or a single corner"
                )
    return ThreeColorSolution(
        BinaryImage.from_ones(m, n, ones_1), BinaryImage.from_ones(m, n, ones_2)
    )


def pad_to_k(inst: RecInstance, target_k: int) -> RecInstance:
    """Grow a 2x2-blocked instance to block side target_k, padding with zeros.

    Each strip's first sum stays on the first row (or column) of the grown
    strip. The second sum stays adjacent for t=0 and t=2; for t=1 it moves
    to the far row (or column), because t=1 admits ones only at the two
    opposite block corners.
    """
    if inst.k != 2:
        raise InputError(f"padding starts from k=2, got k={inst.k}")
    if target_k < 2:
        raise InputError(f"target block side must be at least 2, got {target_k}")
    if target_k == 2:
        return inst
    K = target_k
    second = K - 1 if inst.t == 1 else 1
    blocks_x, blocks_y = inst.m // 2, inst.n // 2

    rows = [0] * (blocks_y * K)
    for J in range(1, blocks_y + 1):
        rows[(J - 1) * K] = inst.row_sums[2 * J - 2]
        rows[(J - 1) * K + second] = inst.row_sums[2 * J - 1]
    cols = [0] * (blocks_x * K)
    for I in range(1, blocks_x + 1):
        cols[(I - 1) * K] = inst.col_sums[2 * I - 2]
        cols[(I - 1) * K + second] = inst.col_sums[2 * I - 1]
    values = {
        ((I - 1) * K + 1, (J - 1) * K + 1): inst.block_values[(2 * I - 1, 2 * J - 1)]
        for J in range(1, blocks_y + 1)
        for I in range(1, blocks_x + 1)
    }
    return RecInstance(
        K, inst.nu, inst.t, blocks_x * K, blocks_y * K, tuple(rows), tuple(cols), values
    )


def invert_colors(inst: WRecInstance) -> WRecInstance:
    """Swap the roles of 0 and 1: x solves inst iff its complement solves this.

    Sums invert against the line lengths, window values against the window
    area, and the relations flip sides. The pattern families t=2 and t=3 are
    each other's complements; t=0 is self-complementary; t=1 has no
    complement-closed counterpart and is rejected.
    """
    if inst.t == 1:
        raise InputError("t=1 does not survive color inversion")
    area = inst.k * inst.k
    for r in inst.row_sums:
        if r > inst.m:
            raise InputError(f"row sum {r} exceeds the width {inst.m}; cannot invert")
    for c in inst.col_sums:
        if c > inst.n:
            raise InputError(f"column sum {c} exceeds the height {inst.n}; cannot invert")
    flipped = {Rel.LE: Rel.GE, Rel.GE: Rel.LE, Rel.EQ: Rel.EQ}
    windows = {}
    for anchor, (rel, value) in inst.windows.items():
        if value > area:
            raise InputError(
                f"window value {value} at {anchor} exceeds the window area {area}"
            )
        windows[anchor] = (flipped[rel], area - value)
    return WRecInstance(
        inst.k,
        {0: 0, 2: 3, 3: 2}[inst.t],
        inst.m,
        inst.n,
        tuple(inst.m - r for r in inst.row_sums),
        tuple(inst.n - c for c in inst.col_sums),
        windows,
    )


def _check_padding_source(inst: WRecInstance, target_k: int) -> None:
    if inst.k != 2:
        raise InputError(f"padding starts from k=2, got k={inst.k}")
    if inst.t != 0:
        raise InputError(f"padding requires t=0, got t={inst.t}")
    if target_k < 2:
        raise InputError(f"target window side must be at least 2, got {target_k}")
    for i, j in inst.windows:
        if i % 2 == 0 or j % 2 == 0:
            raise InputError(f"anchor ({i},{j}) is not aligned to the 2x2 block grid")


def _pad_windows(inst: WRecInstance, target_k: int, fill: int) -> WRecInstance:
    K = target_k
    blocks_x, blocks_y = inst.m // 2, inst.n // 2
    m2, n2 = blocks_x * K, blocks_y * K
    # Padding rows and columns are constant at the fill value; data rows and
    # columns additionally cross the padding columns and rows respectively.
    extra_row = fill * blocks_x * (K - 2)
    extra_col = fill * blocks_y * (K - 2)
    rows = [fill * m2] * n2
    for J in range(1, blocks_y + 1):
        rows[(J - 1) * K] = inst.row_sums[2 * J - 2] + extra_row
        rows[(J - 1) * K + 1] = inst.row_sums[2 * J - 1] + extra_row
    cols = [fill * n2] * m2
    for I in range(1, blocks_x + 1):
        cols[(I - 1) * K] = inst.col_sums[2 * I - 2] + extra_col
        cols[(I - 1) * K + 1] = inst.col_sums[2 * I - 1] + extra_col
    bump = fill * (K * K - 4)
    windows = {
        (((i - 1) // 2) * K + 1, ((j - 1) // 2) * K + 1): (rel, value + bump)
        for (i, j), (rel, value) in inst.windows.items()
    }
    return WRecInstance(K, 0, m2, n2, tuple(rows), tuple(cols), windows)


def zero_pad(inst: WRecInstance, target_k: int) -> WRecInstance:
    """Grow 2x2 windows to side target_k; the grown cells stay 0."""
    _check_padding_source(inst, target_k)
    if target_k == 2:
        return inst
    return _pad_windows(inst, target_k, 0)


def one_pad(inst: WRecInstance, target_k: int) -> WRecInstance:
    """Grow 2x2 windows to side target_k; the grown cells are forced to 1."""
    _check_padding_source(inst, target_k)
    if target_k == 2:
        return inst
    return _pad_windows(inst, target_k, 1)


def _map_cell(p: int, q: int, K: int) -> Cell:
    return (((p - 1) // 2) * K + (p - 1) % 2 + 1, ((q - 1) // 2) * K + (q - 1) % 2 + 1)


def _embed(x: BinaryImage, target_k: int, fill: int) -> BinaryImage:
    if target_k < 2:
        raise InputError(f"target window side must be at least 2, got {target_k}")
    if x.m % 2 or x.n % 2:
        raise InputError(f"image dimensions must be even, got {x.m}x{x.n}")
    K = target_k
    m2, n2 = (x.m // 2) * K, (x.n // 2) * K
    grid = [[fill] * m2 for _ in range(n2)]
    for q in range(1, x.n + 1):
        for p in range(1, x.m + 1):
            P, Q = _map_cell(p, q, K)
            grid[Q - 1][P - 1] = x[(p, q)]
    return BinaryImage(m2, n2, tuple(tuple(row) for row in grid))


def _extract(y: BinaryImage, target_k: int) -> BinaryImage:
    if target_k < 2:
        raise InputError(f"target window side must be at least 2, got {target_k}")
    K = target_k
    if y.m % K or y.n % K:
        raise InputError(f"image dimensions must be multiples of {K}, got {y.m}x{y.n}")
    m, n = (y.m // K) * 2, (y.n // K) * 2
    rows = tuple(
        tuple(y[_map_cell(p, q, K)] for p in range(1, m + 1))
        for q in range(1, n + 1)
    )
    return BinaryImage(m, n, rows)


def zero_pad_embed(x: BinaryImage, target_k: int) -> BinaryImage:
    """Solution map matching zero_pad: grown cells filled with 0."""
    return _embed(x, target_k, 0)


def zero_pad_extract(y: BinaryImage, target_k: int) -> BinaryImage:
    """Inverse solution map of zero_pad_embed: keep each block's 2x2 data corner."""
    return _extract(y, target_k)


def one_pad_embed(x: BinaryImage, target_k: int) -> BinaryImage:
    """Solution map matching one_pad: grown cells filled with 1."""
    return _embed(x, target_k, 1)


def one_pad_extract(y: BinaryImage, target_k: int) -> BinaryImage:
    """Inverse solution map of one_pad_embed: keep each block's 2x2 data corner."""
    return _extract(y, target_k)
