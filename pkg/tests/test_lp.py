import random
from fractions import Fraction

from toricfans.lp import (
    FarkasCertificate,
    FeasiblePoint,
    feasible_by_basis_enumeration,
    fm_feasible,
    solve_system,
    verify_farkas,
    verify_feasible,
)


def _random_system(rng):
    n = rng.randint(1, 4)
    m = rng.randint(1, 8)
    rows = [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(m)]
    rhs = [rng.randint(-2, 2) for _ in range(m)]
    return rows, rhs


def test_simple_feasible():
    out = solve_system([(1, 0), (0, 1)], [1, 2])
    assert isinstance(out, FeasiblePoint)
    assert out.x[0] >= 1 and out.x[1] >= 2


def test_simple_infeasible_with_farkas():
    # x >= 1 and -x >= 0 cannot hold
    out = solve_system([(1,), (-1,)], [1, 0])
    assert isinstance(out, FarkasCertificate)
    assert verify_farkas([(1,), (-1,)], [1, 0], out.multipliers)


def test_witnesses_verify_on_random_systems():
    rng = random.Random(42)
    for _ in range(300):
        rows, rhs = _random_system(rng)
        out = solve_system(rows, rhs)
        if isinstance(out, FeasiblePoint):
            assert verify_feasible(rows, rhs, out.x)
        else:
            assert verify_farkas(rows, rhs, out.multipliers)


def test_agreement_with_basis_enumeration():
    rng = random.Random(43)
    for _ in range(300):
        rows, rhs = _random_system(rng)
        got = isinstance(solve_system(rows, rhs), FeasiblePoint)
        assert got == feasible_by_basis_enumeration(rows, rhs)


def test_fm_feasible_agrees_with_certified_solver():
    rng = random.Random(44)
    for _ in range(300):
        rows, rhs = _random_system(rng)
        assert fm_feasible(rows, rhs) == isinstance(
            solve_system(rows, rhs), FeasiblePoint
        )


def test_homogeneous_scaling():
    # a homogeneous strict system is feasible with >= 1 iff with >= eps
    rows = [(1, -1), (0, 1)]
    out = solve_system(rows, [1, 1])
    assert isinstance(out, FeasiblePoint)
    scaled = [x * Fraction(1, 7) for x in out.x]
    assert verify_feasible(rows, [Fraction(1, 7)] * 2, scaled)
