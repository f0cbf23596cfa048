"""Instance transformations: encodings, padding, and color inversion."""

import random

import pytest

from wintomo import (
    BinaryImage,
    InputError,
    OracleLimits,
    RecInstance,
    Rel,
    Status,
    ThreeColorInstance,
    ThreeColorSolution,
    WRecInstance,
    decode_three_color,
    invert_colors,
    one_pad,
    oracle_solve,
    pad_to_k,
    three_color_to_rec,
    verify_wrec,
    zero_pad,
)
from wintomo.reductions import (
    one_pad_embed,
    one_pad_extract,
    zero_pad_embed,
    zero_pad_extract,
)

from helpers import naive_three_color_feasible, perturb_sum, random_image

BIG = OracleLimits(max_cells=64)


class TestThreeColorEncoding:
    def test_single_cell_one_color(self):
        tc = ThreeColorInstance(1, 1, (1,), (0,), (1,), (0,))
        inst = three_color_to_rec(tc)
        assert (inst.k, inst.nu, inst.t) == (2, 1, 1)
        assert (inst.m, inst.n) == (2, 2)
        assert inst.row_sums == (1, 0)
        assert inst.col_sums == (1, 0)
        assert set(inst.block_values.values()) == {1}
        assert oracle_solve(inst).status is Status.FEASIBLE

    def test_single_cell_both_colors_impossible(self):
        tc = ThreeColorInstance(1, 1, (1,), (1,), (1,), (1,))
        inst = three_color_to_rec(tc)
        assert oracle_solve(inst).status is Status.INFEASIBLE

    def test_interleaving(self):
        tc = ThreeColorInstance(2, 2, (1, 0), (0, 2), (1, 1), (1, 1))
        inst = three_color_to_rec(tc)
        assert inst.row_sums == (1, 0, 0, 2)
        assert inst.col_sums == (1, 1, 1, 1)

    def test_decode_reads_corners(self):
        tc = ThreeColorInstance(2, 2, (1, 1), (1, 0), (1, 1), (0, 1))
        inst = three_color_to_rec(tc)
        outcome = oracle_solve(inst)
        assert outcome.status is Status.FEASIBLE
        sol = decode_three_color(outcome.image)
        assert sol.color_1.row_sums() == tc.row_sums_1
        assert sol.color_2.row_sums() == tc.row_sums_2
        assert sol.color_1.col_sums() == tc.col_sums_1
        assert sol.color_2.col_sums() == tc.col_sums_2

    def test_decode_rejects_non_corner_patterns(self):
        with pytest.raises(InputError):
            decode_three_color(BinaryImage.from_ones(2, 2, [(2, 1)]))

    def test_disjointness_enforced_by_construction(self):
        with pytest.raises(InputError):
            ThreeColorSolution(
                BinaryImage.from_ones(1, 1, [(1, 1)]),
                BinaryImage.from_ones(1, 1, [(1, 1)]),
            )

    def test_feasibility_carries_over_on_random_instances(self):
        rng = random.Random(31)
        for _ in range(150):
            tc = random_three_color(rng)
            reduced = three_color_to_rec(tc)
            fast = oracle_solve(reduced, BIG)
            assert (fast.status is Status.FEASIBLE) == naive_three_color_feasible(tc)
            if fast.status is Status.FEASIBLE:
                sol = decode_three_color(fast.image)
                assert sol.color_1.row_sums() == tc.row_sums_1
                assert sol.color_2.col_sums() == tc.col_sums_2


def random_three_color(rng, max_side=3):
    m = rng.randrange(1, max_side + 1)
    n = rng.randrange(1, max_side + 1)
    if rng.random() < 0.5:
        c1 = random_image(rng, m, n, 0.35)
        free = [
            (p, q)
            for p in range(1, m + 1)
            for q in range(1, n + 1)
            if not c1[(p, q)]
        ]
        c2 = BinaryImage.from_ones(
            m, n, [cell for cell in free if rng.random() < 0.35]
        )
        return ThreeColorInstance(
            m, n, c1.row_sums(), c2.row_sums(), c1.col_sums(), c2.col_sums()
        )
    r1 = tuple(rng.randrange(0, m + 1) for _ in range(n))
    r2 = tuple(rng.randrange(0, m - v + 1) for v in r1)
    c1 = tuple(rng.randrange(0, n + 1) for _ in range(m))
    c2 = tuple(rng.randrange(0, n - v + 1) for v in c1)
    return ThreeColorInstance(m, n, r1, r2, c1, c2)


class TestPadToK:
    def test_identity_when_already_there(self):
        inst = RecInstance(2, 1, 0, 2, 2, (1, 0), (0, 1), {(1, 1): 1})
        assert pad_to_k(inst, 2) == inst

    def test_sums_spread_over_wider_strips(self):
        inst = RecInstance(2, 1, 0, 2, 2, (1, 0), (1, 0), {(1, 1): 1})
        padded = pad_to_k(inst, 4)
        assert (padded.m, padded.n, padded.k) == (4, 4, 4)
        assert padded.row_sums == (1, 0, 0, 0)
        assert padded.col_sums == (1, 0, 0, 0)
        assert padded.block_values == {(1, 1): 1}

    def test_corner_patterns_move_to_the_far_corner(self):
        inst = RecInstance(2, 1, 1, 2, 2, (0, 1), (0, 1), {(1, 1): 1})
        padded = pad_to_k(inst, 4)
        assert padded.t == 1
        assert padded.row_sums == (0, 0, 0, 1)
        assert padded.col_sums == (0, 0, 0, 1)
        assert oracle_solve(padded, BIG).status is Status.FEASIBLE

    def test_odd_targets_work_too(self):
        inst = RecInstance(2, 1, 0, 2, 2, (1, 0), (0, 1), {(1, 1): 1})
        padded = pad_to_k(inst, 3)
        assert (padded.m, padded.n, padded.k) == (3, 3, 3)
        assert padded.row_sums == (1, 0, 0)
        assert padded.col_sums == (0, 1, 0)

    def test_bad_targets_and_sources_rejected(self):
        inst = RecInstance(2, 1, 0, 2, 2, (0, 0), (0, 0), {(1, 1): 0})
        with pytest.raises(InputError):
            pad_to_k(inst, 1)
        grown = pad_to_k(inst, 4)
        with pytest.raises(InputError):
            pad_to_k(grown, 8)

    @pytest.mark.parametrize("t", [0, 1, 2])
    def test_feasibility_preserved_both_ways(self, t):
        rng = random.Random(40 + t)
        from wintomo import gen_planted

        for _ in range(30):
            m = 2 * rng.randrange(1, 3)
            n = 2 * rng.randrange(1, 3)
            nu = 1 if t == 1 else rng.choice((1, 2))
            inst, _ = gen_planted(m, n, 2, nu, t, rng.random(), rng.randrange(10**6))
            if rng.random() < 0.5:
                inst = perturb_sum(inst, rng)
            padded = pad_to_k(inst, 4)
            a = oracle_solve(inst, BIG).status
            b = oracle_solve(padded, BIG).status
            assert a == b


def random_padding_source(rng, max_blocks=2):
    """Window instance with block-aligned anchors, planted around a witness."""
    from wintomo import pattern_of

    m = 2 * rng.randrange(1, max_blocks + 1)
    n = 2 * rng.randrange(1, max_blocks + 1)
    witness = random_image(rng, m, n)
    rows = list(witness.row_sums())
    cols = list(witness.col_sums())
    windows = {}
    for i in range(1, m, 2):
        for j in range(1, n, 2):
            if rng.random() < 0.6:
                actual = len(pattern_of(witness, i, j, 2))
                rel = rng.choice((Rel.LE, Rel.GE, Rel.EQ))
                if rel is Rel.LE:
                    value = rng.randrange(actual, 5)
                elif rel is Rel.GE:
                    value = rng.randrange(0, actual + 1)
                else:
                    value = actual
                windows[(i, j)] = (rel, value)
    if rng.random() < 0.4:
        rows[rng.randrange(n)] = rng.randrange(0, m + 1)
    return WRecInstance(2, 0, m, n, tuple(rows), tuple(cols), windows)


class TestZeroAndOnePad:
    def test_target_two_is_identity(self):
        inst = random_padding_source(random.Random(1))
        assert zero_pad(inst, 2) == inst
        assert one_pad(inst, 2) == inst

    def test_zero_pad_keeps_window_values(self):
        inst = WRecInstance(2, 0, 2, 2, (1, 0), (1, 0), {(1, 1): (Rel.EQ, 1)})
        padded = zero_pad(inst, 4)
        assert (padded.m, padded.n) == (4, 4)
        assert padded.row_sums == (1, 0, 0, 0)
        assert padded.windows[(1, 1)] == (Rel.EQ, 1)

    def test_one_pad_lifts_window_values(self):
        inst = WRecInstance(2, 0, 2, 2, (1, 0), (1, 0), {(1, 1): (Rel.EQ, 1)})
        padded = one_pad(inst, 4)
        assert padded.windows[(1, 1)] == (Rel.EQ, 13)
        assert padded.row_sums == (1 + 2, 0 + 2, 4, 4)
        assert padded.col_sums == (3, 2, 4, 4)

    def test_sources_with_even_anchors_rejected(self):
        inst = WRecInstance(2, 0, 4, 2, (0, 0), (0,) * 4, {(2, 1): (Rel.LE, 1)})
        with pytest.raises(InputError):
            zero_pad(inst, 4)

    def test_round_trip_through_embedding(self):
        rng = random.Random(2)
        for _ in range(40):
            inst = random_padding_source(rng)
            x = random_image(rng, inst.m, inst.n)
            for embed, extract in (
                (zero_pad_embed, zero_pad_extract),
                (one_pad_embed, one_pad_extract),
            ):
                y = embed(x, 4)
                assert (y.m, y.n) == (2 * x.m, 2 * x.n)
                assert extract(y, 4) == x

    @pytest.mark.parametrize(
        "pad,embed,extract",
        [
            (zero_pad, zero_pad_embed, zero_pad_extract),
            (one_pad, one_pad_embed, one_pad_extract),
        ],
    )
    def test_solutions_map_both_ways(self, pad, embed, extract):
        rng = random.Random(3)
        hits = 0
        for _ in range(60):
            inst = random_padding_source(rng)
            padded = pad(inst, 4)
            source = oracle_solve(inst, BIG)
            target = oracle_solve(padded, BIG)
            assert source.status == target.status
            if source.status is not Status.FEASIBLE:
                continue
            hits += 1
            assert verify_wrec(padded, embed(source.image, 4)).ok
            assert verify_wrec(inst, extract(target.image, 4)).ok
        assert hits >= 10


class TestInvertColors:
    def test_relation_and_value_flip(self):
        inst = WRecInstance(
            2, 0, 4, 4, (1, 0, 2, 1), (1, 1, 1, 1), {(1, 1): (Rel.LE, 1)}
        )
        flipped = invert_colors(inst)
        assert flipped.row_sums == (3, 4, 2, 3)
        assert flipped.col_sums == (3, 3, 3, 3)
        assert flipped.windows[(1, 1)] == (Rel.GE, 3)

    def test_t_exchange(self):
        base = dict(m=2, n=2, row_sums=(1, 0), col_sums=(1, 0))
        for t, flipped_t in ((0, 0), (2, 3), (3, 2)):
            inst = WRecInstance(2, t, windows={}, **base)
            assert invert_colors(inst).t == flipped_t

    def test_corner_family_not_invertible(self):
        inst = WRecInstance(2, 1, 2, 2, (1, 0), (1, 0), {})
        with pytest.raises(InputError):
            invert_colors(inst)

    def test_oversized_sums_rejected(self):
        inst = WRecInstance(2, 0, 2, 2, (3, 0), (1, 2), {})
        with pytest.raises(InputError):
            invert_colors(inst)

    def test_oversized_window_value_rejected(self):
        inst = WRecInstance(2, 0, 2, 2, (1, 0), (1, 0), {(1, 1): (Rel.LE, 5)})
        with pytest.raises(InputError):
            invert_colors(inst)

    def test_involution_on_random_instances(self):
        rng = random.Random(4)
        for _ in range(200):
            inst = random_invertible(rng)
            assert invert_colors(invert_colors(inst)) == inst

    def test_complement_carries_solutions_both_ways(self):
        rng = random.Random(5)
        for _ in range(200):
            inst = random_invertible(rng)
            x = random_image(rng, inst.m, inst.n, rng.random())
            assert (
                verify_wrec(inst, x).ok
                == verify_wrec(invert_colors(inst), x.complement()).ok
            )


def random_invertible(rng, max_blocks=2):
    k = 2
    m = k * rng.randrange(1, max_blocks + 1)
    n = k * rng.randrange(1, max_blocks + 1)
    t = rng.choice((0, 2, 3))
    rows = tuple(rng.randrange(0, m + 1) for _ in range(n))
    cols = tuple(rng.randrange(0, n + 1) for _ in range(m))
    windows = {}
    for i in range(1, m - k + 2):
        for j in range(1, n - k + 2):
            if rng.random() < 0.4:
                rel = rng.choice((Rel.LE, Rel.GE, Rel.EQ))
                windows[(i, j)] = (rel, rng.randrange(0, k * k + 1))
    return WRecInstance(k, t, m, n, rows, cols, windows)
