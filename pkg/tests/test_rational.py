import random
from fractions import Fraction

import pytest

from toricfans import rational


def test_primitive():
    assert rational.is_primitive((1, 0, 0))
    assert rational.is_primitive((2, 3, 5))
    assert not rational.is_primitive((0, 0, 0))
    assert not rational.is_primitive((2, 4, 6))


def test_determinant_small():
    assert rational.determinant([(1, 0), (0, 1)]) == 1
    assert rational.determinant([(1, 0, 0), (0, 1, 0), (1, 1, 2)]) == 2
    assert rational.determinant([(1, 2, 3), (2, 4, 6), (0, 1, 0)]) == 0


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_int_det_matches_generic(n):
    rng = random.Random(1000 + n)
    for _ in range(50):
        m = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        assert rational.int_det(m) == rational.determinant(m)


def test_solve_columns_square():
    coeffs = rational.solve_columns([(1, 0, 0), (0, 1, 0), (0, 0, 1)], (3, -2, 5))
    assert coeffs == (3, -2, 5)
    coeffs = rational.solve_columns([(2, 0, 0), (0, 1, 1), (0, 0, 1)], (1, 1, 1))
    assert coeffs == (Fraction(1, 2), 1, 0)


def test_solve_columns_rectangular():
    assert rational.solve_columns([(1, 0, 0), (0, 1, 0)], (2, 3, 0)) == (2, 3)
    assert rational.solve_columns([(1, 0, 0), (0, 1, 0)], (2, 3, 1)) is None
    with pytest.raises(ValueError):
        rational.solve_columns([(1, 0, 0), (2, 0, 0)], (1, 0, 0))


def test_solve_columns_random_roundtrip():
    rng = random.Random(7)
    for _ in range(100):
        vecs = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
        if rational.determinant(vecs) == 0:
            continue
        want = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3)]
        target = [
            sum(w * v[k] for w, v in zip(want, vecs)) for k in range(3)
        ]
        assert rational.solve_columns(vecs, target) == tuple(want)


def test_nullspace():
    basis = rational.nullspace([(1, 0, 0), (0, 1, 0)])
    assert len(basis) == 1
    assert basis[0][0] == 0 and basis[0][1] == 0 and basis[0][2] != 0
    assert rational.nullspace([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == []


def test_cross3_is_orthogonal_kernel():
    rng = random.Random(11)
    for _ in range(50):
        u = tuple(rng.randint(-5, 5) for _ in range(3))
        v = tuple(rng.randint(-5, 5) for _ in range(3))
        c = rational.cross3(u, v)
        assert rational.dot(c, u) == 0
        assert rational.dot(c, v) == 0


def test_integerize():
    assert rational.integerize([Fraction(1, 2), Fraction(3, 2)]) == (1, 3)
    assert rational.integerize([2, 4, 6]) == (1, 2, 3)
    assert rational.integerize([Fraction(-2, 3), Fraction(4, 3)]) == (-1, 2)
