import random
from fractions import Fraction

import pytest

from a3kit import Algebra, Comultiplication, Matrix, Tensor2, Vector
from a3kit.catalog import (
    demo_algebra,
    demo_delta,
    group_ring_order_two,
    idempotent_algebra,
    rb_witness_operator,
    upper_triangular_algebra,
)


@pytest.fixture
def demo():
    return demo_algebra()


@pytest.fixture
def golden_delta():
    return demo_delta()


@pytest.fixture
def idem():
    return idempotent_algebra()


@pytest.fixture
def rb_T():
    return rb_witness_operator()


@pytest.fixture
def upper():
    return upper_triangular_algebra()


@pytest.fixture
def group_ring():
    return group_ring_order_two()


def random_algebra(rng: random.Random, dim: int, lo: int = -2, hi: int = 2) -> Algebra:
    return Algebra.of([[[rng.randint(lo, hi) for _ in range(dim)] for _ in range(dim)] for _ in range(dim)])


def random_commutative(rng: random.Random, dim: int, lo: int = -2, hi: int = 2) -> Algebra:
    sc: list = [[None] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i, dim):
            v = [Fraction(rng.randint(lo, hi)) for _ in range(dim)]
            sc[i][j] = v
            sc[j][i] = v
    return Algebra.of(sc)


def random_delta(rng: random.Random, dim: int, lo: int = -2, hi: int = 2) -> Comultiplication:
    return Comultiplication.of(
        [[[rng.randint(lo, hi) for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
    )


def random_symmetric_delta(rng: random.Random, dim: int, lo: int = -1, hi: int = 1) -> Comultiplication:
    dd = []
    for _ in range(dim):
        plane = [[Fraction(0)] * dim for _ in range(dim)]
        for a in range(dim):
            for b in range(a, dim):
                v = Fraction(rng.randint(lo, hi))
                plane[a][b] = v
                plane[b][a] = v
        dd.append(plane)
    return Comultiplication.of(dd)


def random_matrix(rng: random.Random, rows: int, cols: int, lo: int = -2, hi: int = 2) -> Matrix:
    return Matrix.of([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def random_skew(rng: random.Random, dim: int, lo: int = -2, hi: int = 2) -> Tensor2:
    coeff = [[Fraction(0)] * dim for _ in range(dim)]
    for a in range(dim):
        for b in range(a + 1, dim):
            v = Fraction(rng.randint(lo, hi), rng.choice([1, 1, 2]))
            coeff[a][b] = v
            coeff[b][a] = -v
    return Tensor2.of(coeff)


def random_tensor2(rng: random.Random, dim: int, lo: int = -2, hi: int = 2) -> Tensor2:
    return Tensor2.of([[rng.randint(lo, hi) for _ in range(dim)] for _ in range(dim)])
