import random

import pytest

from sftcocycles import (
    LocFun,
    NotCoboundaryError,
    classify_potential,
    coboundary_transform,
    cycle_sums,
    enumerate_words,
    make_chi_H,
    membership_split,
    solve_potential,
)

from conftest import end_matched_bisections


def random_potential(A, rng, max_depth=3):
    depth = rng.randint(1, max_depth)
    return LocFun(A, depth, {w: rng.randint(-4, 4) for w in enumerate_words(A, depth)})


def test_cycle_sums_of_coboundaries_vanish(golden, full2):
    rng = random.Random(17)
    for A in (golden, full2):
        for _ in range(25):
            b = random_potential(A, rng)
            g = b.shifted() - b
            assert all(total == 0 for _, total in cycle_sums(A, g))


def test_cycle_sums_of_constant_one(golden, full2):
    for A in (golden, full2):
        one = LocFun.constant(A, 1)
        sums = cycle_sums(A, one)
        assert sums, "a valid matrix always has cycles"
        for cyc, total in sums:
            assert total == len(cyc)


def test_cycle_sums_golden_example(golden):
    g = LocFun(golden, 1, {(1,): 1, (2,): -1})
    assert cycle_sums(golden, g) == [(((1,),), 1), (((1,), (2,)), 0)]


def test_solve_zero(golden):
    zero = LocFun.constant(golden, 0)
    assert solve_potential(golden, zero) == zero


def test_solve_round_trip(golden, full2):
    rng = random.Random(23)
    for A in (golden, full2):
        for _ in range(50):
            b = random_potential(A, rng)
            recovered = solve_potential(A, b.shifted() - b)
            assert recovered == b.base_normalized()


def test_solve_constant_one_fails_with_self_loop(golden, full2):
    for A in (golden, full2):
        with pytest.raises(NotCoboundaryError) as info:
            solve_potential(A, LocFun.constant(A, 1))
        assert info.value.witness == (((1,),))


def test_classify_constant_one_reports_all_shapes(golden):
    cls = classify_potential(golden, LocFun.constant(golden, 1))
    assert cls.kinds == ("constant", "chi_H", "coboundary_1b")
    assert cls.constant == 1
    assert cls.chi_H == frozenset({1, 2})
    assert cls.coboundary_b == LocFun.constant(golden, 0)
    assert cls.note is not None


def test_classify_chi_not_coboundary(golden):
    # the self-loop gives f-1 sum 0 but the 2-cycle gives -1
    cls = classify_potential(golden, make_chi_H(golden, {1}))
    assert cls.kind == "chi_H" and cls.kinds == ("chi_H",)
    sums = dict(cycle_sums(golden, make_chi_H(golden, {1}) - 1))
    assert sums[((1,),)] == 0
    assert sums[((1,), (2,))] == -1


def test_classify_unit_coboundary(full2):
    b = LocFun.indicator_cylinder(full2, (1,))
    cls = classify_potential(full2, coboundary_transform(b))
    assert cls.kind == "coboundary_1b"
    assert cls.coboundary_b == b.base_normalized()


def test_classify_general_and_constant(golden):
    cls = classify_potential(golden, LocFun.constant(golden, 3))
    assert cls.kind == "constant" and cls.kinds == ("constant",)
    general = LocFun(golden, 1, {(1,): 2, (2,): -1})
    assert classify_potential(golden, general).kind == "general"


def test_unit_coboundary_membership_law(golden, full2):
    # a piece is inside the coboundary groupoid iff the potential drop
    # across the piece equals the lag
    potentials = {
        golden: LocFun(golden, 2, {(1, 1): 2, (1, 2): 0, (2, 1): -1}),
        full2: LocFun(full2, 2, {(1, 1): 1, (1, 2): -1, (2, 1): 0, (2, 2): 2}),
    }
    for A, b in potentials.items():
        f = coboundary_transform(b)
        for z in end_matched_bisections(A, 4):
            split = membership_split(A, f, z)
            for piece, inside in [(p, True) for p in split.inside] + [
                (p, False) for p in split.outside
            ]:
                drop = b.value_on(piece.mu) - b.value_on(piece.nu)
                assert (drop == piece.lag) == inside


def test_cycle_cap(golden):
    with pytest.raises(ValueError, match="cycle"):
        cycle_sums(golden, LocFun.constant(golden, 1), cycle_cap=1)


def test_solve_on_disconnected_block_graph():
    # reducible matrices are representable; the solver works per component
    from sftcocycles import TransitionMatrix

    ident = TransitionMatrix([[1, 0], [0, 1]])
    b = LocFun(ident, 1, {(1,): 3, (2,): -2})
    assert solve_potential(ident, b.shifted() - b) == LocFun.constant(ident, 0)
    skew = LocFun(ident, 1, {(1,): 1, (2,): 0})
    with pytest.raises(NotCoboundaryError) as info:
        solve_potential(ident, skew)
    assert info.value.witness == ((1,),)
