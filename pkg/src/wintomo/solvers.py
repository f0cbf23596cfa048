"""Polynomial-time reconstruction routes and the dispatching front end.

Three parameter regimes admit fast solvers. k=1 reduces to plain transport
with forbidden cells. nu=1 with an unconstrained pattern family splits into
a block-level transport (which blocks hold the single 1) followed by the
explicit one-per-block placement. t=2 with nu >= k replaces the block and
pattern constraints by one capacity group per block row. Everything else
falls back to the exhaustive oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping

from . import one_per_block
from .errors import InputError
from .flow import TransportProblem, solve_transport
from .grid import BinaryImage, Cell, RecInstance, region_and_projections
from .one_per_block import OnePerBlockInstance
from .oracle import OracleLimits, Status, oracle_solve
from .verify import verify_rec


class Method(enum.Enum):
    REC1 = "rec1"
    K10 = "k10"
    KV2 = "kv2"
    ORACLE = "oracle"


@dataclass(frozen=True)
class SolveResult:
    status: Status
    method: Method
    image: BinaryImage | None = None


@dataclass(frozen=True)
class BlockOccupancy:
    """0/1 choice per corner point: which blocks receive a single 1."""

    eta: Mapping[Cell, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "eta", dict(self.eta))
        for cell, value in self.eta.items():
            if value not in (0, 1):
                raise InputError(f"occupancy at {cell} must be 0 or 1, got {value!r}")

    def selected(self) -> frozenset:
        return frozenset(cell for cell, value in self.eta.items() if value)


def classify(inst: RecInstance) -> Method | None:
    """Pick the polynomial route for an instance; None when no route is known."""
    if inst.k == 1:
        return Method.REC1
    if inst.nu == 1 and inst.t == 0:
        return Method.K10
    if inst.t == 2 and inst.nu >= inst.k:
        return Method.KV2
    return None


def solve_rec1(inst: RecInstance) -> SolveResult:
    """k=1: every constraint is a per-cell cap, so plain transport decides."""
    if inst.k != 1:
        raise InputError(f"this route requires k=1, got k={inst.k}")
    forbidden = frozenset(
        cell for cell, value in inst.block_values.items() if value == 0
    )
    image = solve_transport(
        TransportProblem(inst.m, inst.n, inst.row_sums, inst.col_sums, forbidden)
    )
    if image is None:
        return SolveResult(Status.INFEASIBLE, Method.REC1)
    return SolveResult(Status.FEASIBLE, Method.REC1, image)


def block_transport(inst: RecInstance) -> BlockOccupancy | None:
    """Step one of the nu=1 route: decide which blocks hold the single 1.

    Strip sums become the row and column sums of a block-level grid; blocks
    with value 0 are forbidden. None means no occupancy exists.
    """
    k = inst.k
    blocks_x = inst.m // k
    blocks_y = inst.n // k
    strip_rows = tuple(
        sum(inst.row_sums[(J - 1) * k : J * k]) for J in range(1, blocks_y + 1)
    )
    strip_cols = tuple(
        sum(inst.col_sums[(I - 1) * k : I * k]) for I in range(1, blocks_x + 1)
    )
    forbidden = frozenset(
        ((i - 1) // k + 1, (j - 1) // k + 1)
        for (i, j), value in inst.block_values.items()
        if value == 0
    )
    occ = solve_transport(
        TransportProblem(blocks_x, blocks_y, strip_rows, strip_cols, forbidden)
    )
    if occ is None:
        return None
    return BlockOccupancy(
        {
            ((I - 1) * k + 1, (J - 1) * k + 1): occ[(I, J)]
            for J in range(1, blocks_y + 1)
            for I in range(1, blocks_x + 1)
        }
    )


def solve_rec_k10(inst: RecInstance) -> SolveResult:
    """nu=1 with the unconstrained pattern family: transport then placement."""
    if classify(inst) is not Method.K10:
        raise InputError("this route requires nu=1 and t=0 with k >= 2")
    occupancy = block_transport(inst)
    if occupancy is None:
        return SolveResult(Status.INFEASIBLE, Method.K10)
    corners = occupancy.selected()

    _region, cols, rows = region_and_projections(corners, inst.k)
    touched_rows = {j + l for j in rows for l in range(inst.k)}
    touched_cols = {i + l for i in cols for l in range(inst.k)}
    for q in range(1, inst.n + 1):
        if q not in touched_rows and inst.row_sums[q - 1] != 0:
            raise RuntimeError(
                f"occupancy left row {q} uncovered despite a positive sum; solver bug"
            )
    for p in range(1, inst.m + 1):
        if p not in touched_cols and inst.col_sums[p - 1] != 0:
            raise RuntimeError(
                f"occupancy left column {p} uncovered despite a positive sum; solver bug"
            )

    placement = OnePerBlockInstance(
        inst.k,
        inst.m,
        inst.n,
        corners,
        {q: inst.row_sums[q - 1] for q in touched_rows},
        {p: inst.col_sums[p - 1] for p in touched_cols},
    )
    if not one_per_block.is_feasible(placement):
        raise RuntimeError(
            "occupancy step succeeded but the placement criterion fails; solver bug"
        )
    return SolveResult(Status.FEASIBLE, Method.K10, one_per_block.construct(placement))


def solve_rec_kv2(inst: RecInstance) -> SolveResult:
    """t=2 with nu >= k: one capacity group per block row decides everything."""
    if classify(inst) is not Method.KV2:
        raise InputError("this route requires t=2 and nu >= k with k >= 2")
    k = inst.k
    groups = []
    for i, j in inst.corners():
        cap = min(1, inst.block_values[(i, j)])
        for l in range(k):
            groups.append((frozenset((i + a, j + l) for a in range(k)), cap))
    image = solve_transport(
        TransportProblem(
            inst.m, inst.n, inst.row_sums, inst.col_sums, frozenset(), tuple(groups)
        )
    )
    if image is None:
        return SolveResult(Status.INFEASIBLE, Method.KV2)
    return SolveResult(Status.FEASIBLE, Method.KV2, image)


_ROUTES = {
    Method.REC1: solve_rec1,
    Method.K10: solve_rec_k10,
    Method.KV2: solve_rec_kv2,
}


def solve(
    inst: RecInstance,
    method: Method | str | None = None,
    limits: OracleLimits | None = None,
) -> SolveResult:
    """Solve an instance, dispatching on its parameters.

    method None or "auto" picks the classified route, falling back to the
    oracle; naming a route explicitly raises InputError when the instance
    does not fit it. Any returned image is verified before it leaves.
    """
    if isinstance(method, str):
        if method == "auto":
            method = None
        else:
            try:
                method = Method(method)
            except ValueError:
                raise InputError(f"unknown method {method!r}") from None
    if method is None:
        route = classify(inst) or Method.ORACLE
    else:
        route = method
        if route is not Method.ORACLE and classify(inst) is not route:
            raise InputError(
                f"method {route.value} does not apply to this instance"
            )

    if route is Method.ORACLE:
        outcome = oracle_solve(inst, limits or OracleLimits())
        result = SolveResult(outcome.status, Method.ORACLE, outcome.image)
    else:
        result = _ROUTES[route](inst)

    if result.status is Status.FEASIBLE:
        report = verify_rec(inst, result.image)
        if not report.ok:
            raise RuntimeError(
                f"route {route.value} produced an invalid image: {report.violations[:3]}"
            )
    return result
