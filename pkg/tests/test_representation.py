import random

import pytest

from a3kit import (
    Algebra,
    LawKind,
    Matrix,
    Representation,
    Vector,
    adjoint_representation,
    check_admissible_representation,
    check_associative_representation,
    check_equivalence,
    check_law,
    check_representation,
    coadjoint_representation,
    dual_representation,
    multiply,
    semidirect_product,
)
from a3kit.errors import AdmissibilityRequired, AlgebraMismatch, NotInvertible
from conftest import random_commutative, random_matrix


def non_admissible_algebra() -> Algebra:
    # e1.e1 = e2, e2.e1 = e1: fails the admissibility law
    a = Algebra.of([[[0, 1], [0, 0]], [[1, 0], [0, 0]]])
    assert not check_law(a, LawKind.ADMISSIBLE).passed
    return a


def test_adjoint_matrices_golden(demo):
    adj = adjoint_representation(demo)
    assert adj.l_mats[0] == Matrix.of([[1, 1], [2, 2]])
    assert adj.l_mats[1] == Matrix.of([[1, 0], [2, 1]])
    # commutative algebra: left and right actions coincide
    assert adj.l_mats == adj.r_mats


def test_adjoint_of_zero_algebra_is_zero():
    adj = adjoint_representation(Algebra.zero(2))
    assert all(m.is_zero() for m in adj.l_mats + adj.r_mats)


def test_adjoint_passes_representation_check(demo):
    adj = adjoint_representation(demo)
    assert check_representation(adj).passed
    assert not check_associative_representation(adj).passed
    assert check_admissible_representation(adj).passed


def test_zero_representation_passes_all(demo):
    rho = Representation.zero(demo, 3)
    assert check_representation(rho).passed
    assert check_associative_representation(rho).passed
    assert check_admissible_representation(rho).passed


def test_left_action_without_right_fails(demo):
    adj = adjoint_representation(demo)
    zero = Matrix.zeros(2, 2)
    broken = Representation(demo, adj.l_mats, (zero, zero))
    assert not check_representation(broken).passed


def test_associative_adjoint_representation(idem):
    adj = adjoint_representation(idem)
    assert check_associative_representation(adj).passed
    assert check_representation(adj).passed


def test_dual_representation_transpose_and_involution(demo):
    l1 = Matrix.of([[0, 1], [0, 0]])
    zero = Matrix.zeros(2, 2)
    rho = Representation(demo, (l1, zero), (zero, zero))
    dual = dual_representation(rho)
    assert dual.r_mats[0] == Matrix.of([[0, 0], [1, 0]])
    assert dual.l_mats[0].is_zero()
    assert dual_representation(dual) == rho


def test_dual_of_admissible_representation_is_admissible(demo):
    adj = adjoint_representation(demo)
    dual = dual_representation(adj)
    assert check_representation(dual).passed
    assert check_admissible_representation(dual).passed


def test_coadjoint_requires_admissibility():
    with pytest.raises(AdmissibilityRequired):
        coadjoint_representation(non_admissible_algebra())


def test_coadjoint_golden(demo, idem):
    co = coadjoint_representation(demo)
    assert check_representation(co).passed
    co2 = coadjoint_representation(idem)
    assert check_representation(co2).passed
    assert check_admissible_representation(co2).passed
    assert all(m.is_zero() for m in coadjoint_representation(Algebra.zero(2)).l_mats)


def test_equivalence_identity_and_failures(demo):
    adj = adjoint_representation(demo)
    ident = Matrix.identity(2)
    assert check_equivalence(adj, adj, ident).passed
    zero_rep = Representation.zero(demo, 2)
    assert not check_equivalence(adj, zero_rep, ident).passed
    with pytest.raises(NotInvertible):
        check_equivalence(adj, adj, Matrix.zeros(2, 2))


def test_semidirect_product_golden(demo):
    adj = adjoint_representation(demo)
    sd = semidirect_product(demo, adj)
    assert sd.dim == 4
    # (e1, 0) * (0, e2) = (0, e1 + 2 e2)
    out = multiply(sd, Vector.basis(4, 0), Vector.basis(4, 3))
    assert out == Vector.of([0, 0, 1, 2])
    assert check_law(sd, LawKind.A3).passed
    assert check_law(sd, LawKind.ADMISSIBLE).passed


def test_semidirect_with_zero_rep_is_direct_sum(demo):
    sd = semidirect_product(demo, Representation.zero(demo, 2))
    for i in range(2):
        for j in range(2):
            for k in range(2):
                assert sd.sc[i][j][k] == demo.sc[i][j][k]
    assert all(
        sd.sc[i][j][k] == 0
        for i in range(4)
        for j in range(4)
        for k in range(4)
        if i >= 2 or j >= 2
    )


def test_semidirect_iff_representation(demo):
    # perturbing one action entry breaks the representation check and the
    # block algebra's law in tandem
    rng = random.Random(2)
    adj = adjoint_representation(demo)
    for _ in range(10):
        l_mats = [list(map(list, m.entries)) for m in adj.l_mats]
        i = rng.randrange(2)
        a = rng.randrange(2)
        b = rng.randrange(2)
        l_mats[i][a][b] += rng.choice([1, -1])
        rho = Representation(demo, tuple(Matrix.of(m) for m in l_mats), adj.r_mats)
        assert check_representation(rho).passed == check_law(semidirect_product(demo, rho), LawKind.A3).passed


def test_semidirect_rejects_foreign_representation(demo, idem):
    with pytest.raises(AlgebraMismatch):
        semidirect_product(demo, adjoint_representation(idem))
