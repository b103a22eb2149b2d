"""Exact rational linear algebra helpers."""

import random
from fractions import Fraction

from renner.linalg import (
    affine_rank,
    kron,
    mat_identity,
    mat_inverse,
    mat_is_identity,
    mat_mul,
    mat_trace,
    rank,
)


def test_inverse_round_trip():
    rng = random.Random(9)
    for n in (1, 2, 3, 4):
        for _ in range(6):
            while True:
                a = [
                    [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)]
                    for _ in range(n)
                ]
                if rank([row[:] for row in a]) == n:
                    break
            inv = mat_inverse(a)
            assert mat_is_identity(mat_mul(a, inv))
            assert mat_is_identity(mat_mul(inv, a))


def test_rank_and_affine_rank():
    assert rank([[1, 0], [0, 1], [1, 1]]) == 2
    assert rank([[2, 4], [1, 2]]) == 1
    assert rank([]) == 0
    # a segment, a triangle, a square: affine dims 1, 2, 2
    assert affine_rank([(0, 0), (1, 1)]) == 1
    assert affine_rank([(0, 0), (1, 0), (0, 1)]) == 2
    assert affine_rank([(0, 0), (1, 0), (0, 1), (1, 1)]) == 2
    assert affine_rank([(5, 5)]) == 0
    assert affine_rank([]) == -1


def test_kron_block_structure():
    a = [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(1)]]
    b = [[Fraction(3)]]
    k = kron(a, b)
    assert k == [[Fraction(3), Fraction(6)], [Fraction(0), Fraction(3)]]
    c = mat_identity(2)
    kk = kron(a, c)
    assert len(kk) == 4
    assert mat_trace(kk) == 2 * mat_trace(a)
    # mixed-product identity on small samples
    rng = random.Random(2)
    for _ in range(4):
        m1 = [[Fraction(rng.randint(-3, 3)) for _ in range(2)] for _ in range(2)]
        m2 = [[Fraction(rng.randint(-3, 3)) for _ in range(2)] for _ in range(2)]
        left = kron(mat_mul(a, m1), mat_mul(c, m2))
        right = mat_mul(kron(a, c), kron(m1, m2))
        assert left == right
