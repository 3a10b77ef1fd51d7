import random
import sys
from fractions import Fraction

sys.path.insert(0, "src")

from a3kit import brute
from a3kit.algebra import Algebra, LawKind, check_homomorphism, law_residuals
from a3kit.bialgebra import (
    Comultiplication,
    admissible_coalgebra_residuals,
    coalgebra_residuals,
    coassociative_residuals,
    compat_residuals,
)
from a3kit.core import Matrix, Tensor2, Vector
from a3kit.double import (
    BilinearForm,
    MatchedPairData,
    invariance_residual,
    matched_pair_compat_residuals,
    quadratic_residuals,
)
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

rng = random.Random(123)


def rand_algebra(n):
    return Algebra.of([[[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)] for _ in range(n)])


def rand_matrix(r, c):
    return Matrix.of([[rng.randint(-2, 2) for _ in range(c)] for _ in range(r)])


def rand_tensor2(n):
    return Tensor2.of([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])


def rand_skew(n):
    up = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            v = Fraction(rng.randint(-2, 2))
            up[a][b] = v
            up[b][a] = -v
    return Tensor2.of(up)


def rand_delta(n):
    return Comultiplication.of([[[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)] for _ in range(n)])


fails = []


def diff(name, got, expect):
    if got != expect:
        fails.append(name)
        print("DIFF in", name)


N_TRIALS = 25
for trial in range(N_TRIALS):
    n = rng.choice([2, 3])
    A = rand_algebra(n)

    for law in LawKind:
        diff(f"law:{law.value}", brute.brute_residual(law.value, A), law_residuals(A, law))

    rho = Representation(A, tuple(rand_matrix(n, n) for _ in range(n)), tuple(rand_matrix(n, n) for _ in range(n)))
    diff("representation", brute.brute_residual("representation", A, rho), representation_residuals(rho))
    diff(
        "associative_representation",
        brute.brute_residual("associative_representation", A, rho),
        associative_representation_residuals(rho),
    )
    diff(
        "admissible_representation",
        brute.brute_residual("admissible_representation", A, rho),
        admissible_representation_residuals(rho),
    )

    A2 = rand_algebra(n)
    phi = rand_matrix(n, n)
    diff("homomorphism", brute.brute_residual("homomorphism", phi, A, A2), check_homomorphism(phi, A, A2).residuals)

    form = BilinearForm(rand_matrix(n, n))
    inv_opt = {k: v for k, v in quadratic_residuals(A, form).items() if k[0] == "invariance"}
    inv_brute = {("invariance",) + k: v for k, v in brute.brute_residual("quadratic_invariance", A, form).items()}
    diff("quadratic_invariance", inv_brute, inv_opt)

    r2 = rand_tensor2(n)
    inv_list = invariance_residual(A, r2)
    diff("tensor_invariance", brute.brute_residual("tensor_invariance", A, r2), {(i,): t for i, t in enumerate(inv_list)})

    B = rand_algebra(n)
    mp = MatchedPairData(
        A,
        B,
        tuple(rand_matrix(n, n) for _ in range(n)),
        tuple(rand_matrix(n, n) for _ in range(n)),
        tuple(rand_matrix(n, n) for _ in range(n)),
        tuple(rand_matrix(n, n) for _ in range(n)),
    )
    f1, f2 = matched_pair_compat_residuals(mp)
    diff("matched_pair_first", brute.brute_residual("matched_pair_first", mp), f1)
    diff("matched_pair_second", brute.brute_residual("matched_pair_second", mp), f2)

    D = rand_delta(n)
    diff("coalgebra", brute.brute_residual("coalgebra", D), coalgebra_residuals(D))
    diff("coassociative", brute.brute_residual("coassociative", D), coassociative_residuals(D))
    diff("admissible_coalgebra", brute.brute_residual("admissible_coalgebra", D), admissible_coalgebra_residuals(D))

    b1, b2 = compat_residuals(A, D)
    diff("bialgebra_first", brute.brute_residual("bialgebra_first", A, D), b1)
    diff("bialgebra_second", brute.brute_residual("bialgebra_second", A, D), b2)

    diff("aybe", brute.brute_residual("aybe", A, r2), aybe_residual(A, r2))

    T = rand_matrix(n, n)
    data = RelativeRBData(A, rho, T)
    diff("relative_rb", brute.brute_residual("relative_rb", A, rho, T), relative_rb_residuals(data))

    skew = rand_skew(n)
    # operator form needs admissible algebra in the optimized checker; use commutative
    sc = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = [Fraction(rng.randint(-2, 2)) for _ in range(n)]
            sc[i][j] = v
            sc[j][i] = v
    C = Algebra.of(sc)
    diff(
        "rb_operator_form",
        brute.brute_residual("rb_operator_form", C, skew),
        check_rb_operator_form(C, skew).residuals,
    )

    g = rand_matrix(n, n)
    omega_gram = g - g.transpose()
    om = BilinearForm(omega_gram)
    diff("connes_cocycle", brute.brute_residual("connes_cocycle", A, om), connes_cocycle_residuals(A, om))

print("trials:", N_TRIALS, "failures:", sorted(set(fails)) or "none")
