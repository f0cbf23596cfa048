"""Naive reference implementations used to cross-check the fast code.

Everything here trades speed for obviousness: plain enumeration and
backtracking with no shortcuts beyond what correctness itself implies.
"""

import dataclasses
from itertools import combinations, product

from wintomo import BinaryImage, RecInstance, verify_rec, verify_wrec


def all_images(m, n):
    """Every m x n binary image, in increasing bit order."""
    for bits in range(1 << (m * n)):
        rows = tuple(
            tuple((bits >> (q * m + p)) & 1 for p in range(m)) for q in range(n)
        )
        yield BinaryImage(m, n, rows)


def images_with_row_sums(m, n, row_sums):
    """Every image whose row sums match; column sums are left free."""
    if any(not 0 <= r <= m for r in row_sums):
        return
    per_row = [tuple(combinations(range(m), r)) for r in row_sums]
    for picks in product(*per_row):
        rows = tuple(
            tuple(1 if p in picked else 0 for p in range(m)) for picked in picks
        )
        yield BinaryImage(m, n, rows)


def check_fn(inst):
    return verify_rec if isinstance(inst, RecInstance) else verify_wrec


def exhaustive_solutions(inst):
    """All solutions of a REC or WREC instance, found by filtering candidates.

    Enumerating only images with the right row sums is complete because row
    sums are part of every instance.
    """
    check = check_fn(inst)
    return [
        x
        for x in images_with_row_sums(inst.m, inst.n, inst.row_sums)
        if check(inst, x).ok
    ]


def exhaustive_feasible(inst):
    check = check_fn(inst)
    return any(
        check(inst, x).ok
        for x in images_with_row_sums(inst.m, inst.n, inst.row_sums)
    )


def transport_holds(tp, x):
    """Direct check of an image against a transport problem."""
    if x.row_sums() != tp.row_sums or x.col_sums() != tp.col_sums:
        return False
    if any(x[cell] for cell in tp.forbidden):
        return False
    return all(sum(x[cell] for cell in cells) <= cap for cells, cap in tp.groups)


def naive_transport_feasible(tp):
    return any(
        transport_holds(tp, x)
        for x in images_with_row_sums(tp.m, tp.n, tp.row_sums)
    )


def naive_one_per_block_feasible(inst):
    """Backtracking placement of one 1 inside each selected block.

    The placement must consume the strip-restricted row and column sums
    exactly, which is what the closed-form criterion claims to decide.
    """
    rows = dict(inst.row_sums)
    cols = dict(inst.col_sums)
    count = len(inst.corners)
    if sum(rows.values()) != count or sum(cols.values()) != count:
        return False
    corners = sorted(inst.corners, key=lambda c: (c[1], c[0]))

    def place(idx):
        if idx == count:
            return True
        i, j = corners[idx]
        for a in range(inst.k):
            if cols[i + a] == 0:
                continue
            for b in range(inst.k):
                if rows[j + b] == 0:
                    continue
                cols[i + a] -= 1
                rows[j + b] -= 1
                found = place(idx + 1)
                cols[i + a] += 1
                rows[j + b] += 1
                if found:
                    return True
        return False

    return place(0)


def row_colorings(m, r1, r2):
    """All ways to place r1 cells of color 1 and r2 of color 2 in one row."""
    out = []
    for ones in combinations(range(m), r1):
        rest = [p for p in range(m) if p not in ones]
        for twos in combinations(rest, r2):
            out.append((ones, twos))
    return out


def naive_three_color_feasible(tc):
    """Row-by-row enumeration of disjoint two-color fillings."""
    per_row = []
    for q in range(tc.n):
        r1, r2 = tc.row_sums_1[q], tc.row_sums_2[q]
        if r1 + r2 > tc.m:
            return False
        per_row.append(row_colorings(tc.m, r1, r2))
    for choice in product(*per_row):
        c1 = [0] * tc.m
        c2 = [0] * tc.m
        for ones, twos in choice:
            for p in ones:
                c1[p] += 1
            for p in twos:
                c2[p] += 1
        if tuple(c1) == tc.col_sums_1 and tuple(c2) == tc.col_sums_2:
            return True
    return False


def perturb_sum(inst, rng):
    """Copy of an instance with one row or column sum nudged by one."""
    pick_row = rng.random() < 0.5
    sums = list(inst.row_sums if pick_row else inst.col_sums)
    idx = rng.randrange(len(sums))
    sums[idx] = max(0, sums[idx] + rng.choice((-1, 1)))
    field = "row_sums" if pick_row else "col_sums"
    return dataclasses.replace(inst, **{field: tuple(sums)})


def random_image(rng, m, n, density=0.4):
    return BinaryImage(
        m,
        n,
        tuple(
            tuple(1 if rng.random() < density else 0 for _ in range(m))
            for _ in range(n)
        ),
    )
