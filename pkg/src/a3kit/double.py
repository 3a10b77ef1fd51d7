"""Matched pairs, quadratic forms, the standard double and Manin triples.

The standard double lives on A + A* with the six-term product built from
the coadjoint actions of both factors; its pairing form is the
block-antidiagonal identity.  The degenerate case with a zero product on
A* is exactly the semidirect product through the coadjoint representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from .algebra import (
    Algebra,
    CheckReport,
    LawKind,
    Witness,
    check_law,
    check_subalgebra,
    law_residuals,
    merge_families,
    multiply,
    report_from_residuals,
)
from .core import ONE, ZERO, Matrix, Tensor2, Vector, apply_ops2, kernel_vector, scalar, span_rank
from .errors import AdmissibilityRequired, DimensionMismatch, SpansNotComplementary
from .representation import Representation, adjoint_representation, check_representation, representation_residuals


@dataclass(frozen=True)
class BilinearForm:
    gram: Matrix

    def __post_init__(self):
        if self.gram.rows != self.gram.cols:
            raise DimensionMismatch("gram matrix must be square")

    @staticmethod
    def of(rows: Iterable[Iterable[Any]]) -> "BilinearForm":
        return BilinearForm(Matrix.of(rows))

    @staticmethod
    def identity(dim: int) -> "BilinearForm":
        return BilinearForm(Matrix.identity(dim))

    @property
    def dim(self) -> int:
        return self.gram.rows

    def evaluate(self, u: Vector, v: Vector) -> Fraction:
        if u.dim != self.dim or v.dim != self.dim:
            raise DimensionMismatch("vectors must match the form dimension")
        total = ZERO
        for a in range(self.dim):
            ua = u[a]
            if ua == 0:
                continue
            row = self.gram.entries[a]
            for b in range(self.dim):
                if row[b] != 0 and v[b] != 0:
                    total += ua * row[b] * v[b]
        return total

    def is_symmetric(self) -> bool:
        return self.gram == self.gram.transpose()

    def is_skew(self) -> bool:
        n = self.dim
        g = self.gram.entries
        return all(g[i][j] == -g[j][i] for i in range(n) for j in range(i, n))


@dataclass(frozen=True)
class MatchedPairData:
    A: Algebra
    B: Algebra
    lA: tuple[Matrix, ...]
    rA: tuple[Matrix, ...]
    lB: tuple[Matrix, ...]
    rB: tuple[Matrix, ...]

    def __post_init__(self):
        nA, nB = self.A.dim, self.B.dim
        if len(self.lA) != nA or len(self.rA) != nA:
            raise DimensionMismatch("one lA/rA matrix per basis element of A required")
        if len(self.lB) != nB or len(self.rB) != nB:
            raise DimensionMismatch("one lB/rB matrix per basis element of B required")
        for m in (*self.lA, *self.rA):
            if m.rows != nB or m.cols != nB:
                raise DimensionMismatch("lA/rA matrices act on B")
        for m in (*self.lB, *self.rB):
            if m.rows != nA or m.cols != nA:
                raise DimensionMismatch("lB/rB matrices act on A")

    @staticmethod
    def of(A: Algebra, B: Algebra, lA: Sequence[Matrix], rA: Sequence[Matrix],
           lB: Sequence[Matrix], rB: Sequence[Matrix]) -> "MatchedPairData":
        return MatchedPairData(A, B, tuple(lA), tuple(rA), tuple(lB), tuple(rB))


def matched_pair_product(mp: MatchedPairData) -> Algebra:
    """The block product on A + B driven by the four actions."""
    nA, nB = mp.A.dim, mp.B.dim
    total = nA + nB
    sc = [[[ZERO] * total for _ in range(total)] for _ in range(total)]
    for i in range(nA):
        for j in range(nA):
            for k in range(nA):
                sc[i][j][k] = mp.A.sc[i][j][k]
    for a in range(nB):
        for b in range(nB):
            for c in range(nB):
                sc[nA + a][nA + b][nA + c] = mp.B.sc[a][b][c]
    for i in range(nA):
        for b in range(nB):
            # e_i * f_b = rB(f_b) e_i + lA(e_i) f_b
            for k in range(nA):
                sc[i][nA + b][k] = mp.rB[b].entries[k][i]
            for c in range(nB):
                sc[i][nA + b][nA + c] = mp.lA[i].entries[c][b]
    for a in range(nB):
        for j in range(nA):
            # f_a * e_j = lB(f_a) e_j + rA(e_j) f_a
            for k in range(nA):
                sc[nA + a][j][k] = mp.lB[a].entries[k][j]
            for c in range(nB):
                sc[nA + a][j][nA + c] = mp.rA[j].entries[c][a]
    labels = tuple(mp.A.basis_labels) + tuple(mp.B.basis_labels)
    if len(set(labels)) != total:
        labels = tuple(mp.A.basis_labels) + tuple(f"{x}'" for x in mp.B.basis_labels)
    return Algebra.of(sc, labels)


def _action_comb(mats: Sequence[Matrix], coeffs: Vector) -> Matrix:
    out = Matrix.zeros(mats[0].rows, mats[0].cols)
    for c, m in zip(coeffs, mats):
        if c != 0:
            out = out + m.scale(c)
    return out


def matched_pair_compat_residuals(mp: MatchedPairData) -> tuple[dict[tuple, Vector], dict[tuple, Vector]]:
    """The two cross-compatibility residual families on basis triples."""
    nA, nB = mp.A.dim, mp.B.dim
    first: dict[tuple, Vector] = {}
    for i in range(nA):
        for j in range(nA):
            xy = mp.A.product_vector(i, j)
            ei, ej = mp.A.basis_vector(i), mp.A.basis_vector(j)
            for c in range(nB):
                rb_y = mp.rB[c].col(j)
                lb_x = mp.lB[c].col(i)
                w1 = mp.lA[j].col(c)
                w2 = mp.rA[i].col(c)
                res = (
                    mp.rB[c].apply(xy) - mp.lB[c].apply(xy)
                    - multiply(mp.A, ei, rb_y) + multiply(mp.A, rb_y, ei)
                    - multiply(mp.A, ej, lb_x) + multiply(mp.A, lb_x, ej)
                    - (_action_comb(mp.rB, w1) - _action_comb(mp.lB, w1)).apply(ei)
                    - (_action_comb(mp.rB, w2) - _action_comb(mp.lB, w2)).apply(ej)
                )
                first[(i, j, c)] = res
    second: dict[tuple, Vector] = {}
    for c in range(nB):
        for d in range(nB):
            ab = mp.B.product_vector(c, d)
            fc, fd = mp.B.basis_vector(c), mp.B.basis_vector(d)
            for i in range(nA):
                ra_b = mp.rA[i].col(d)
                la_a = mp.lA[i].col(c)
                w1 = mp.lB[d].col(i)
                w2 = mp.rB[c].col(i)
                res = (
                    mp.rA[i].apply(ab) - mp.lA[i].apply(ab)
                    - multiply(mp.B, fc, ra_b) + multiply(mp.B, ra_b, fc)
                    - multiply(mp.B, fd, la_a) + multiply(mp.B, la_a, fd)
                    - (_action_comb(mp.rA, w1) - _action_comb(mp.lA, w1)).apply(fc)
                    - (_action_comb(mp.rA, w2) - _action_comb(mp.lA, w2)).apply(fd)
                )
                second[(c, d, i)] = res
    return first, second


def check_matched_pair(mp: MatchedPairData) -> CheckReport:
    """Both factor laws, both representation conditions, both compatibilities.

    Passing is equivalent to the block product on A + B satisfying the
    cyclic-associativity law.
    """
    rep_a = Representation(mp.A, mp.lA, mp.rA)
    rep_b = Representation(mp.B, mp.lB, mp.rB)
    first, second = matched_pair_compat_residuals(mp)
    merged = merge_families({
        "first_algebra_law": law_residuals(mp.A, LawKind.A3),
        "second_algebra_law": law_residuals(mp.B, LawKind.A3),
        "first_representation": representation_residuals(rep_a),
        "second_representation": representation_residuals(rep_b),
        "first_compat": first,
        "second_compat": second,
    })
    return report_from_residuals("matched_pair", merged)


def quadratic_residuals(algebra: Algebra, form: BilinearForm) -> dict[tuple, Any]:
    """Symmetry and invariance residual entries, plus a kernel witness if degenerate."""
    n = algebra.dim
    res: dict[tuple, Any] = {}
    g = form.gram.entries
    for i in range(n):
        for j in range(i + 1, n):
            res[("symmetry", i, j)] = g[i][j] - g[j][i]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = sum((algebra.sc[i][j][p] * g[p][k] for p in range(n)), start=ZERO)
                rhs = sum((algebra.sc[j][k][p] * g[i][p] for p in range(n)), start=ZERO)
                res[("invariance", i, j, k)] = lhs - rhs
    kv = kernel_vector(form.gram)
    if kv is not None:
        res[("nondegenerate",)] = kv
    return res


def check_quadratic(algebra: Algebra, form: BilinearForm) -> CheckReport:
    """Symmetric, exactly nondegenerate and invariant on all basis triples."""
    if form.dim != algebra.dim:
        raise DimensionMismatch("form must match the algebra dimension")
    return report_from_residuals("quadratic", quadratic_residuals(algebra, form))


def bflat(form: BilinearForm) -> Matrix:
    """The musical map A -> A* induced by the form, in basis/dual-basis coordinates."""
    return Matrix(form.gram.entries)


def invariance_residual(algebra: Algebra, r: Tensor2) -> list[Tensor2]:
    """One residual tensor per basis element; all zero iff r is invariant."""
    if r.dim != algebra.dim:
        raise DimensionMismatch("tensor must match the algebra dimension")
    adj = adjoint_representation(algebra)
    ident = Matrix.identity(algebra.dim)
    return [
        apply_ops2(ident, adj.l_mats[i], r) - apply_ops2(adj.r_mats[i], ident, r)
        for i in range(algebra.dim)
    ]


def form_to_tensor(form: BilinearForm) -> Tensor2:
    """Tensor avatar of a nondegenerate form: the inverse gram array."""
    return Tensor2(form.gram.inverse().entries)


def _dual_labels(labels: Sequence[str]) -> tuple[str, ...]:
    return tuple(f"{x}*" for x in labels)


def pairing_form(n: int) -> BilinearForm:
    """The canonical pairing on A + A*: block-antidiagonal identity gram."""
    g = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        g[i][n + i] = ONE
        g[n + i][i] = ONE
    return BilinearForm.of(g)


def standard_double(algebra: Algebra, astar: Algebra) -> tuple[Algebra, BilinearForm]:
    """The double on A + A* with both coadjoint actions, plus its pairing form.

    With a zero product on astar this degenerates to the semidirect product
    through the coadjoint representation.
    """
    n = algebra.dim
    if astar.dim != n:
        raise DimensionMismatch("dual algebra must have the same dimension")
    if not check_law(algebra, LawKind.ADMISSIBLE).passed:
        raise AdmissibilityRequired("standard double needs an admissible base algebra")
    if not check_law(astar, LawKind.ADMISSIBLE).passed:
        raise AdmissibilityRequired("standard double needs an admissible dual algebra")
    sc = [[[ZERO] * (2 * n) for _ in range(2 * n)] for _ in range(2 * n)]
    a_sc, s_sc = algebra.sc, astar.sc
    for i in range(n):
        for j in range(n):
            for k in range(n):
                sc[i][j][k] = a_sc[i][j][k]
                sc[n + i][n + j][n + k] = s_sc[i][j][k]
    for i in range(n):
        for b in range(n):
            for c in range(n):
                # e_i . e_b* = L_dual*(e_b*) e_i   +  R*(e_i) e_b*
                sc[i][n + b][c] = s_sc[b][c][i]
                sc[i][n + b][n + c] = a_sc[c][i][b]
                # e_a* . e_j = R_dual*(e_a*) e_j   +  L*(e_j) e_a*
                sc[n + i][b][c] = s_sc[c][i][b]
                sc[n + i][b][n + c] = a_sc[b][c][i]
    labels = tuple(algebra.basis_labels) + tuple(astar.basis_labels)
    if len(set(labels)) != 2 * n:
        labels = tuple(algebra.basis_labels) + _dual_labels(algebra.basis_labels)
    return Algebra.of(sc, labels), pairing_form(n)


def coadjoint_matched_pair(algebra: Algebra, astar: Algebra) -> MatchedPairData:
    """The matched-pair data (R*, L*, R_dual*, L_dual*) of the standard double."""
    n = algebra.dim
    if astar.dim != n:
        raise DimensionMismatch("dual algebra must have the same dimension")
    adj = adjoint_representation(algebra)
    adj_star = adjoint_representation(astar)
    lA = tuple(adj.r_mats[i].transpose() for i in range(n))
    rA = tuple(adj.l_mats[i].transpose() for i in range(n))
    lB = tuple(adj_star.r_mats[a].transpose() for a in range(n))
    rB = tuple(adj_star.l_mats[a].transpose() for a in range(n))
    return MatchedPairData(algebra, astar, lA, rA, lB, rB)


def manin_residuals(double_algebra: Algebra, form: BilinearForm,
                    span_a: Sequence[Vector], span_b: Sequence[Vector]) -> dict[tuple, Any]:
    first, second = {}, {}
    for s, u in enumerate(span_a):
        for t, v in enumerate(span_a):
            first[(s, t)] = form.evaluate(u, v)
    for s, u in enumerate(span_b):
        for t, v in enumerate(span_b):
            second[(s, t)] = form.evaluate(u, v)
    return merge_families({
        "ambient_law": law_residuals(double_algebra, LawKind.A3),
        "quadratic": quadratic_residuals(double_algebra, form),
        "first_subalgebra": check_subalgebra(double_algebra, span_a).residuals,
        "second_subalgebra": check_subalgebra(double_algebra, span_b).residuals,
        "first_isotropy": first,
        "second_isotropy": second,
    })


def check_manin_triple(double_algebra: Algebra, form: BilinearForm,
                       span_a: Sequence[Vector], span_b: Sequence[Vector]) -> CheckReport:
    """Quadratic ambient algebra split into two isotropic subalgebra spans.

    The ambient algebra must itself satisfy the cyclic-associativity law;
    the spans must be bases of complementary subspaces (exact rank check).
    """
    n = double_algebra.dim
    if form.dim != n:
        raise DimensionMismatch("form must match the double's dimension")
    for v in (*span_a, *span_b):
        if v.dim != n:
            raise DimensionMismatch("span vectors must match the double's dimension")
    if (
        len(span_a) + len(span_b) != n
        or span_rank(list(span_a)) != len(span_a)
        or span_rank(list(span_b)) != len(span_b)
        or span_rank(list(span_a) + list(span_b)) != n
    ):
        raise SpansNotComplementary("spans must be bases of complementary subspaces")
    return report_from_residuals("manin_triple", manin_residuals(double_algebra, form, span_a, span_b))
