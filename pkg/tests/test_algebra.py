import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from a3kit import (
    Algebra,
    LawKind,
    Matrix,
    Vector,
    check_homomorphism,
    check_law,
    check_subalgebra,
    commutator_algebra,
    multiply,
)
from a3kit.algebra import law_residual_at, law_residuals
from a3kit.errors import DimensionMismatch
from conftest import random_algebra, random_commutative


def test_demo_law_verdicts(demo):
    expected = {
        LawKind.A3: True,
        LawKind.ASSOCIATIVE: False,
        LawKind.ADMISSIBLE_POISSON: False,
        LawKind.ADMISSIBLE: True,
        LawKind.LEFT_SYMMETRIC: False,
        LawKind.RIGHT_SYMMETRIC: False,
        LawKind.LIE_ADMISSIBLE: True,
    }
    for law, verdict in expected.items():
        assert check_law(demo, law).passed is verdict


def test_demo_associative_golden_residual(demo):
    report = check_law(demo, LawKind.ASSOCIATIVE)
    assert not report.passed
    # the displayed failing computation: residual at (e1, e2, e2) is exactly 2 e2
    assert report.residuals[(0, 1, 1)] == Vector.of([0, 2])
    # deterministic witness: lexicographically first failing triple
    assert report.witness.indices == (0, 0, 1)
    assert report.witness.residual == Vector.of([-2, -2])


def test_multiply_golden(demo):
    e1, e2 = Vector.basis(2, 0), Vector.basis(2, 1)
    assert multiply(demo, e1, e2) == Vector.of([1, 2])
    assert multiply(demo, Vector.of([1, 2]), e1) == Vector.of([3, 6])
    assert multiply(demo, Vector.zero(2), e2).is_zero()
    with pytest.raises(DimensionMismatch):
        multiply(demo, Vector.of([1, 2, 3]), e1)


def test_zero_algebra_passes_every_law():
    z = Algebra.zero(3)
    for law in LawKind:
        assert check_law(z, law).passed


def test_commutator_of_commutative_is_zero(demo):
    assert commutator_algebra(demo) == Algebra.zero(2, labels=demo.basis_labels)


def test_commutator_jacobi_for_a3_algebras():
    rng = random.Random(11)
    for _ in range(20):
        a = random_commutative(rng, rng.choice([2, 3]))
        assert check_law(a, LawKind.A3).passed
        bracket = commutator_algebra(a)
        # independent Jacobi oracle on the bracket algebra
        n = a.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    ei, ej, ek = (Vector.basis(n, t) for t in (i, j, k))
                    jac = (
                        multiply(bracket, multiply(bracket, ei, ej), ek)
                        + multiply(bracket, multiply(bracket, ej, ek), ei)
                        + multiply(bracket, multiply(bracket, ek, ei), ej)
                    )
                    assert jac.is_zero()


def test_lie_admissible_residual_equals_commutator_jacobi():
    rng = random.Random(5)
    for _ in range(15):
        a = random_algebra(rng, 2)
        bracket = commutator_algebra(a)
        n = a.dim
        fam = law_residuals(a, LawKind.LIE_ADMISSIBLE)
        for (i, j, k), res in fam.items():
            ei, ej, ek = (Vector.basis(n, t) for t in (i, j, k))
            jac = (
                multiply(bracket, multiply(bracket, ei, ej), ek)
                + multiply(bracket, multiply(bracket, ej, ek), ei)
                + multiply(bracket, multiply(bracket, ek, ei), ej)
            )
            assert res == jac


def test_class_inclusions_on_random_instances():
    rng = random.Random(23)
    for _ in range(40):
        a = random_algebra(rng, 2, lo=-1, hi=1)
        verdict = {law: check_law(a, law).passed for law in LawKind}
        if verdict[LawKind.ASSOCIATIVE]:
            assert verdict[LawKind.A3]
        if verdict[LawKind.ADMISSIBLE_POISSON]:
            assert verdict[LawKind.A3]
        if verdict[LawKind.A3]:
            assert verdict[LawKind.LIE_ADMISSIBLE]
        if verdict[LawKind.ADMISSIBLE] and verdict[LawKind.LEFT_SYMMETRIC] and verdict[LawKind.A3]:
            assert verdict[LawKind.ASSOCIATIVE]
        if verdict[LawKind.ADMISSIBLE] and verdict[LawKind.RIGHT_SYMMETRIC] and verdict[LawKind.A3]:
            assert verdict[LawKind.ASSOCIATIVE]


def test_basis_reduction_matches_element_level_evaluation():
    # multilinearity soundness: passing on basis triples means passing on
    # arbitrary rational vectors, and a failing law shows a nonzero residual
    rng = random.Random(31)
    for _ in range(10):
        a = random_algebra(rng, 2, lo=-1, hi=1)
        for law in (LawKind.A3, LawKind.ASSOCIATIVE):
            fam = law_residuals(a, law)
            passed = all(v.is_zero() for v in fam.values())
            vs = [Vector.of([Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(2)]) for _ in range(3)]
            elt = _element_law_residual(a, law, *vs)
            if passed:
                assert elt.is_zero()


def _element_law_residual(a: Algebra, law: LawKind, x: Vector, y: Vector, z: Vector) -> Vector:
    def m(u, v):
        return multiply(a, u, v)

    if law is LawKind.A3:
        return (m(m(x, y), z) + m(m(y, z), x) + m(m(z, x), y)) - (m(x, m(y, z)) + m(y, m(z, x)) + m(z, m(x, y)))
    if law is LawKind.ASSOCIATIVE:
        return m(m(x, y), z) - m(x, m(y, z))
    raise AssertionError("unsupported law in helper")


def test_homomorphism_checks(demo):
    ident = Matrix.identity(2)
    assert check_homomorphism(ident, demo, demo).passed
    assert check_homomorphism(Matrix.zeros(2, 2), demo, demo).passed
    swap = Matrix.of([[0, 1], [1, 0]])
    assert not check_homomorphism(swap, demo, demo).passed
    with pytest.raises(DimensionMismatch):
        check_homomorphism(Matrix.zeros(3, 2), demo, demo)


def test_subalgebra_checks(demo):
    full = [Vector.basis(2, 0), Vector.basis(2, 1)]
    assert check_subalgebra(demo, full).passed
    assert check_subalgebra(demo, [Vector.basis(2, 1)]).passed
    report = check_subalgebra(demo, [Vector.basis(2, 0)])
    assert not report.passed
    assert report.witness.indices == (0, 0)


def test_algebra_validation():
    with pytest.raises(DimensionMismatch):
        Algebra.of([[[1, 0]]])
    with pytest.raises(ValueError):
        Algebra.of([[[0, 0], [0, 0]], [[0, 0], [0, 0]]], labels=("x", "x"))
