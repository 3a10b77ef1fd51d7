import random
from fractions import Fraction

import pytest

from a3kit import LawKind, brute_residual
from a3kit.algebra import check_homomorphism, law_residuals
from a3kit.bialgebra import (
    admissible_coalgebra_residuals,
    coalgebra_residuals,
    coassociative_residuals,
    compat_residuals,
)
from a3kit.brute import SUPPORTED_EXPRESSIONS
from a3kit.double import BilinearForm, MatchedPairData, invariance_residual, matched_pair_compat_residuals, quadratic_residuals
from a3kit.errors import UnknownExpression
from a3kit.representation import (
    Representation,
    admissible_representation_residuals,
    associative_representation_residuals,
    representation_residuals,
)
from a3kit.yangbaxter import (
    RelativeRBData,
    aybe_residual,
    check_rb_operator_form,
    connes_cocycle_residuals,
    relative_rb_residuals,
)
from conftest import random_algebra, random_commutative, random_delta, random_matrix, random_skew, random_tensor2


def test_unknown_expression():
    with pytest.raises(UnknownExpression):
        brute_residual("not-an-identity")


def test_supported_expressions_cover_all_checkers():
    expected = {
        "a3", "associative", "admissible_poisson", "admissible",
        "left_symmetric", "right_symmetric", "lie_admissible",
        "representation", "associative_representation", "admissible_representation",
        "homomorphism", "quadratic_invariance", "tensor_invariance",
        "matched_pair_first", "matched_pair_second",
        "coalgebra", "coassociative", "admissible_coalgebra",
        "bialgebra_first", "bialgebra_second",
        "aybe", "relative_rb", "rb_operator_form", "connes_cocycle",
    }
    assert set(SUPPORTED_EXPRESSIONS) == expected


def test_golden_oracle_values(demo):
    fam = brute_residual("a3", demo)
    assert all(v.is_zero() for v in fam.values())
    fam = brute_residual("associative", demo)
    assert not fam[(0, 1, 1)].is_zero()
    assert fam[(0, 1, 1)].coords == (Fraction(0), Fraction(2))


def test_oracle_matches_law_checkers():
    rng = random.Random(101)
    for _ in range(12):
        a = random_algebra(rng, rng.choice([2, 3]))
        for law in LawKind:
            assert brute_residual(law.value, a) == law_residuals(a, law)


def test_oracle_matches_structural_checkers(demo):
    rng = random.Random(55)
    for _ in range(6):
        n = 2
        a = random_algebra(rng, n)
        rho = Representation(
            a,
            tuple(random_matrix(rng, n, n) for _ in range(n)),
            tuple(random_matrix(rng, n, n) for _ in range(n)),
        )
        assert brute_residual("representation", a, rho) == representation_residuals(rho)
        assert brute_residual("associative_representation", a, rho) == associative_representation_residuals(rho)
        assert brute_residual("admissible_representation", a, rho) == admissible_representation_residuals(rho)

        phi = random_matrix(rng, n, n)
        a2 = random_algebra(rng, n)
        assert brute_residual("homomorphism", phi, a, a2) == check_homomorphism(phi, a, a2).residuals

        form = BilinearForm(random_matrix(rng, n, n))
        expected = {k[1:]: v for k, v in quadratic_residuals(a, form).items() if k[0] == "invariance"}
        assert brute_residual("quadratic_invariance", a, form) == expected

        r2 = random_tensor2(rng, n)
        assert brute_residual("tensor_invariance", a, r2) == {
            (i,): t for i, t in enumerate(invariance_residual(a, r2))
        }

        mp = MatchedPairData(
            a,
            a2,
            tuple(random_matrix(rng, n, n) for _ in range(n)),
            tuple(random_matrix(rng, n, n) for _ in range(n)),
            tuple(random_matrix(rng, n, n) for _ in range(n)),
            tuple(random_matrix(rng, n, n) for _ in range(n)),
        )
        first, second = matched_pair_compat_residuals(mp)
        assert brute_residual("matched_pair_first", mp) == first
        assert brute_residual("matched_pair_second", mp) == second

        d = random_delta(rng, n)
        assert brute_residual("coalgebra", d) == coalgebra_residuals(d)
        assert brute_residual("coassociative", d) == coassociative_residuals(d)
        assert brute_residual("admissible_coalgebra", d) == admissible_coalgebra_residuals(d)
        b1, b2 = compat_residuals(a, d)
        assert brute_residual("bialgebra_first", a, d) == b1
        assert brute_residual("bialgebra_second", a, d) == b2

        assert brute_residual("aybe", a, r2) == aybe_residual(a, r2)

        T = random_matrix(rng, n, n)
        assert brute_residual("relative_rb", a, rho, T) == relative_rb_residuals(RelativeRBData(a, rho, T))

        comm = random_commutative(rng, n)
        skew = random_skew(rng, n)
        assert brute_residual("rb_operator_form", comm, skew) == check_rb_operator_form(comm, skew).residuals

        g = random_matrix(rng, n, n)
        omega = BilinearForm(g - g.transpose())
        assert brute_residual("connes_cocycle", a, omega) == connes_cocycle_residuals(a, omega)
