"""Planted instance generation for tests and benchmarks."""

from __future__ import annotations

import random

from .errors import InputError
from .grid import BinaryImage, Cell, PatternClass, RecInstance, corner_points, pattern_enumerate
from .verify import verify_rec


def gen_planted(
    m: int, n: int, k: int, nu: int, t: int, density: float, seed: int
) -> tuple[RecInstance, BinaryImage]:
    """Draw a feasible instance together with the witness it was built from.

    Each block independently receives, with the given probability, a
    nonempty admissible pattern of at most nu ones (chosen uniformly) and
    block value nu; otherwise it stays empty and its value is drawn from
    {0, nu}. Sums are read off the witness, so the instance is feasible by
    construction. Output is a pure function of the arguments.
    """
    if not 0.0 <= density <= 1.0:
        raise InputError(f"density must lie in [0, 1], got {density}")
    cls = PatternClass(k, t)
    choices = [
        pattern for pattern in pattern_enumerate(cls) if pattern and len(pattern) <= nu
    ]
    if not choices and density > 0:
        raise InputError(
            f"no nonempty pattern of at most {nu} ones exists for k={k}, t={t}"
        )
    rng = random.Random(seed)
    ones: list[Cell] = []
    values: dict[Cell, int] = {}
    for i, j in corner_points(m, n, k):
        if rng.random() < density:
            pattern = choices[rng.randrange(len(choices))]
            ones.extend((i + a, j + b) for a, b in sorted(pattern))
            values[(i, j)] = nu
        else:
            values[(i, j)] = rng.choice((0, nu))
    witness = BinaryImage.from_ones(m, n, ones)
    inst = RecInstance(k, nu, t, m, n, witness.row_sums(), witness.col_sums(), values)
    if not verify_rec(inst, witness).ok:
        raise RuntimeError("planted witness failed verification; generator bug")
    return inst, witness
