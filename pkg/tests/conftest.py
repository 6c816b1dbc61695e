import random

import pytest

from toricfans import validate_fan

P3_RAYS = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
P3_CONES = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]

# One or two representative parameter choices per catalog family; the full
# verdict grids run in the acceptance suite.
CATALOG_INSTANCES = [
    ("W7_5", ()),
    ("Z2", (0,)),
    ("Z2", (-2,)),
    ("Z5p", (0,)),
    ("Z5p", (-1,)),
    ("Z5p", (2,)),
    ("Z5pp", ()),
    ("Z8", ()),
    ("Z10", ()),
    ("Z11", (0, 0)),
    ("Z11", (-1, 2)),
    ("Z12", ()),
    ("Z13p", (0, 0)),
    ("Z13p", (1, 1)),
    ("Z13p", (-2, 1)),
    ("Z13pp", (2, 7, 4, 2)),
    ("Z13pp", (0, 0, 0, 0)),
    ("Z13pp", (1, 1, 1, 1)),
    ("Z13pp", (-1, 2, 1, 2)),
    ("Z14p", (0,)),
    ("Z14p", (-2,)),
    ("Z14pp", (0, 0)),
    ("Z14pp", (2, -1)),
]


@pytest.fixture
def p3():
    return validate_fan(3, P3_RAYS, P3_CONES)


def ray_index(fan, vector):
    return fan.rays.index(tuple(vector))


def random_unimodular(rng: random.Random, steps: int = 6):
    """A random element of GL(3, Z) built from elementary operations."""
    m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for _ in range(steps):
        i, j = rng.sample(range(3), 2)
        c = rng.choice([-2, -1, 1, 2])
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    if rng.random() < 0.5:
        i, j = rng.sample(range(3), 2)
        m[i], m[j] = m[j], m[i]
    if rng.random() < 0.5:
        i = rng.randrange(3)
        m[i] = [-a for a in m[i]]
    return [tuple(row) for row in m]
