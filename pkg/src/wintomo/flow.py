"""Integral feasibility engine behind the polynomial-time solvers.

The problem: pick 0 or 1 for every cell of an m x n grid so that row and
column sums are met exactly, forbidden cells stay 0, and each capacity
group (a set of cells confined to a single row) holds at most its cap of
ones. This is encoded as a layered network and solved with Dinic's
algorithm; integral maximum flows correspond exactly to solutions.

Determinism: nodes are numbered in a fixed scheme (source, columns, group
nodes, rows, sink) and arcs are scanned in insertion order, so equal inputs
produce equal images.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InputError
from .grid import BinaryImage, Cell, _check_sums


@dataclass(frozen=True)
class TransportProblem:
    """Binary transport: exact sums, forbidden cells, row-confined groups.

    Each group is a (cells, cap) pair; all cells of a group must lie in one
    row, and groups must be pairwise disjoint. A forbidden cell inside a
    group simply stays 0.
    """

    m: int
    n: int
    row_sums: tuple[int, ...]
    col_sums: tuple[int, ...]
    forbidden: frozenset = frozenset()
    groups: tuple = ()

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise InputError(f"grid dimensions must be positive, got {self.m}x{self.n}")
        object.__setattr__(self, "row_sums", tuple(self.row_sums))
        object.__setattr__(self, "col_sums", tuple(self.col_sums))
        object.__setattr__(self, "forbidden", frozenset(self.forbidden))
        object.__setattr__(
            self,
            "groups",
            tuple((frozenset(cells), cap) for cells, cap in self.groups),
        )
        _check_sums(self.row_sums, self.n, "row")
        _check_sums(self.col_sums, self.m, "column")
        for cell in self.forbidden:
            self._check_cell(cell, "forbidden cell")
        seen: set[Cell] = set()
        for cells, cap in self.groups:
            if not isinstance(cap, int) or cap < 0:
                raise InputError(f"group cap must be a nonnegative integer, got {cap!r}")
            rows = set()
            for cell in cells:
                self._check_cell(cell, "group cell")
                if cell in seen:
                    raise InputError(f"cell {cell} appears in two groups")
                seen.add(cell)
                rows.add(cell[1])
            if len(rows) > 1:
                raise InputError(f"group {sorted(cells)} spans more than one row")

    def _check_cell(self, cell: Cell, label: str) -> None:
        p, q = cell
        if not (1 <= p <= self.m and 1 <= q <= self.n):
            raise InputError(f"{label} ({p},{q}) lies outside the {self.m}x{self.n} grid")


class _Network:
    """Arc-list flow network with paired reverse arcs (arc i reverses i^1)."""

    def __init__(self, size: int):
        self.adj: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int, cap: int) -> int:
        arc = len(self.to)
        self.to.append(v)
        self.cap.append(cap)
        self.adj[u].append(arc)
        self.to.append(u)
        self.cap.append(0)
        self.adj[v].append(arc + 1)
        return arc

    def max_flow(self, source: int, sink: int) -> int:
        flow = 0
        infinity = sum(self.cap) + 1
        while True:
            level = self._levels(source, sink)
            if level[sink] < 0:
                return flow
            cursor = [0] * len(self.adj)
            while True:
                pushed = self._augment(source, sink, infinity, level, cursor)
                if pushed == 0:
                    break
                flow += pushed

    def _levels(self, source: int, sink: int) -> list[int]:
        level = [-1] * len(self.adj)
        level[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for arc in self.adj[u]:
                v = self.to[arc]
                if self.cap[arc] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level

    def _augment(
        self, u: int, sink: int, limit: int, level: list[int], cursor: list[int]
    ) -> int:
        if u == sink:
            return limit
        arcs = self.adj[u]
        while cursor[u] < len(arcs):
            arc = arcs[cursor[u]]
            v = self.to[arc]
            if self.cap[arc] > 0 and level[v] == level[u] + 1:
                pushed = self._augment(v, sink, min(limit, self.cap[arc]), level, cursor)
                if pushed > 0:
                    self.cap[arc] -= pushed
                    self.cap[arc ^ 1] += pushed
                    return pushed
            cursor[u] += 1
        level[u] = -1
        return 0


def solve_transport(tp: TransportProblem) -> BinaryImage | None:
    """Solve the transport system exactly; None means no solution exists."""
    total = sum(tp.row_sums)
    if total != sum(tp.col_sums):
        return None

    group_of: dict[Cell, int] = {}
    for index, (cells, _cap) in enumerate(tp.groups):
        for cell in cells:
            group_of[cell] = index

    num_groups = len(tp.groups)
    source = 0
    sink = tp.m + num_groups + tp.n + 1

    def col_node(p: int) -> int:
        return p

    def group_node(g: int) -> int:
        return tp.m + 1 + g

    def row_node(q: int) -> int:
        return tp.m + num_groups + q

    net = _Network(sink + 1)
    for p in range(1, tp.m + 1):
        net.add_arc(source, col_node(p), tp.col_sums[p - 1])
    for index, (cells, cap) in enumerate(tp.groups):
        if cells:
            q = next(iter(cells))[1]
            net.add_arc(group_node(index), row_node(q), cap)
    cell_arcs: list[tuple[int, Cell]] = []
    for p in range(1, tp.m + 1):
        for q in range(1, tp.n + 1):
            cell = (p, q)
            if cell in tp.forbidden:
                continue
            target = group_of.get(cell)
            head = row_node(q) if target is None else group_node(target)
            cell_arcs.append((net.add_arc(col_node(p), head, 1), cell))
    for q in range(1, tp.n + 1):
        net.add_arc(row_node(q), sink, tp.row_sums[q - 1])

    if net.max_flow(source, sink) != total:
        return None
    ones = [cell for arc, cell in cell_arcs if net.cap[arc] == 0]
    return BinaryImage.from_ones(tp.m, tp.n, ones)
