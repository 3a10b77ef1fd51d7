"""Yang-Baxter residuals, triangular structures and Rota-Baxter operators.

A tensor r is stored by its dense coefficient array, so the Yang-Baxter
residual is computed by a decomposition-free index formula:

    AY[a][b][m] =   sum_{p,q} r[a][p] r[b][q] sc[p][q][m]
                  - sum_{s,t} r[a][t] r[s][m] sc[s][t][b]
                  + sum_{s,t} r[s][b] r[t][m] sc[s][t][a]

which agrees with expanding any decomposition of r into pure tensors.

The musical map of r sends the a-th dual basis vector to sum_b r[a][b] e_b,
so its matrix is the transpose of the coefficient array.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import Algebra, CheckReport, LawKind, check_law, multiply, report_from_residuals
from .bialgebra import Comultiplication, check_bialgebra, coalgebra_residuals, compat_residuals, dual_algebra
from .core import ONE, ZERO, Matrix, Tensor2, Tensor3, Vector, apply_ops2, tau_swap, xi_permute
from .double import BilinearForm, standard_double
from .errors import (
    AdmissibilityRequired,
    DimensionMismatch,
    NotAYBESolution,
    NotInvertible,
    NotSkew,
)
from .representation import Representation, adjoint_representation


@dataclass(frozen=True)
class RelativeRBData:
    A: Algebra
    rho: Representation
    T: Matrix

    def __post_init__(self):
        if self.rho.algebra != self.A:
            raise DimensionMismatch("representation must be over the given algebra")
        if self.T.rows != self.A.dim or self.T.cols != self.rho.vdim:
            raise DimensionMismatch("operator must map the module into the algebra")


def _require_dim(algebra: Algebra, r: Tensor2) -> None:
    if r.dim != algebra.dim:
        raise DimensionMismatch("tensor must match the algebra dimension")


def _require_admissible(algebra: Algebra) -> None:
    if not check_law(algebra, LawKind.ADMISSIBLE).passed:
        raise AdmissibilityRequired("an admissible algebra is required")


def _require_skew(r: Tensor2) -> None:
    if not r.is_skew():
        raise NotSkew("a skew-symmetric tensor is required")


def aybe_residual(algebra: Algebra, r: Tensor2) -> Tensor3:
    """Exact Yang-Baxter residual; r solves the equation iff this is zero."""
    _require_dim(algebra, r)
    n = algebra.dim
    rc = r.coeff
    out = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for s in range(n):
        for t in range(n):
            row = algebra.sc[s][t]
            for u in range(n):
                c = row[u]
                if c == 0:
                    continue
                for a in range(n):
                    f = rc[a][s]
                    if f != 0:
                        g = f * c
                        for b in range(n):
                            if rc[b][t] != 0:
                                out[a][b][u] += g * rc[b][t]
                for a in range(n):
                    f = rc[a][t]
                    if f != 0:
                        g = f * c
                        for m in range(n):
                            if rc[s][m] != 0:
                                out[a][u][m] -= g * rc[s][m]
                for b in range(n):
                    f = rc[s][b]
                    if f != 0:
                        g = f * c
                        for m in range(n):
                            if rc[t][m] != 0:
                                out[u][b][m] += g * rc[t][m]
    return Tensor3.of(out)


def delta_from_r(algebra: Algebra, r: Tensor2) -> Comultiplication:
    """Comultiplication induced by r through the invariance operator family."""
    _require_dim(algebra, r)
    adj = adjoint_representation(algebra)
    ident = Matrix.identity(algebra.dim)
    dd = tuple(
        (apply_ops2(ident, adj.l_mats[i], r) - apply_ops2(adj.r_mats[i], ident, r)).coeff
        for i in range(algebra.dim)
    )
    return Comultiplication(dd)


@dataclass(frozen=True)
class CocycleResiduals:
    """Residual families of the three r-form cocycle conditions."""

    coalgebra: dict
    compat_first: dict
    compat_second: dict

    def all_zero(self) -> bool:
        return (
            all(t.is_zero() for t in self.coalgebra.values())
            and all(t.is_zero() for t in self.compat_first.values())
            and all(t.is_zero() for t in self.compat_second.values())
        )


def cocycle_conditions_residual(algebra: Algebra, r: Tensor2) -> CocycleResiduals:
    """The r-form counterparts of the co-law and the two compatibility laws.

    Entry-by-entry these equal the corresponding residuals of the induced
    comultiplication, so zero-ness matches the coalgebra/bialgebra checkers.
    """
    _require_dim(algebra, r)
    _require_admissible(algebra)
    n = algebra.dim
    adj = adjoint_representation(algebra)
    lmats, rmats = adj.l_mats, adj.r_mats
    ident = Matrix.identity(n)
    rc = r.coeff
    sym = (r + tau_swap(r)).coeff
    ay = aybe_residual(algebra, r)

    coalg: dict = {}
    for x in range(n):
        lx, rx = lmats[x], rmats[x]
        com_r = [rmats[s] @ lx - lx @ rmats[s] for s in range(n)]
        com_l = [rx @ lmats[t] - lmats[t] @ rx for t in range(n)]
        w = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for a in range(n):
            for b in range(n):
                for m in range(n):
                    acc = ZERO
                    for c in range(n):
                        acc += rx.entries[a][c] * ay.coeff[c][b][m]
                        acc -= lx.entries[m][c] * ay.coeff[a][b][c]
                    for s in range(n):
                        if rc[s][m] != 0:
                            mrow = com_r[s].entries[b]
                            acc += rc[s][m] * sum(
                                (mrow[c] * sym[a][c] for c in range(n)), start=ZERO
                            )
                    for t in range(n):
                        if rc[a][t] != 0:
                            mrow = com_l[t].entries[b]
                            acc += rc[a][t] * sum(
                                (mrow[c] * sym[c][m] for c in range(n)), start=ZERO
                            )
                    w[a][b][m] = acc
        wt = Tensor3.of(w)
        coalg[(x,)] = wt + xi_permute(wt) + xi_permute(xi_permute(wt))

    sym_t = Tensor2.of(sym)
    first: dict = {}
    second: dict = {}
    for i in range(n):
        for j in range(n):
            lxy = _comb(lmats, algebra.sc[i][j])
            lyx = _comb(lmats, algebra.sc[j][i])
            ryx = _comb(rmats, algebra.sc[j][i])
            rxy = _comb(rmats, algebra.sc[i][j])
            first[(i, j)] = (
                apply_ops2(ident, lmats[i] @ lmats[j], sym_t)
                - apply_ops2(ident, lxy, sym_t)
                + apply_ops2(lxy, ident, sym_t)
                - apply_ops2(lmats[i] @ lmats[j], ident, sym_t)
                + apply_ops2(lmats[i], lmats[j], sym_t)
                + apply_ops2(rmats[j], rmats[i], sym_t)
                - apply_ops2(ident, rmats[i] @ lmats[j], sym_t)
                - apply_ops2(rmats[j] @ lmats[i], ident, sym_t)
            )
            second[(i, j)] = (
                apply_ops2(ident, ryx, sym_t)
                - apply_ops2(ident, rmats[i] @ rmats[j], sym_t)
                + apply_ops2(ident, lmats[j] @ lmats[i], sym_t)
                - apply_ops2(ident, lyx, sym_t)
                - apply_ops2(ident, rmats[j] @ lmats[i], sym_t)
                + apply_ops2(lmats[j], lmats[i], sym_t)
                + apply_ops2(rmats[i], rmats[j], sym_t)
                + apply_ops2(lxy, ident, sym_t)
                - apply_ops2(rxy, ident, sym_t)
                - apply_ops2(lmats[i] @ lmats[j], ident, sym_t)
                + apply_ops2(rmats[j] @ rmats[i], ident, sym_t)
                - apply_ops2(lmats[j] @ rmats[i], ident, sym_t)
            )
    return CocycleResiduals(coalg, first, second)


def _comb(mats: Sequence[Matrix], coeffs) -> Matrix:
    out = Matrix.zeros(mats[0].rows, mats[0].cols)
    for c, m in zip(coeffs, mats):
        if c != 0:
            out = out + m.scale(c)
    return out


def triangular_bialgebra(algebra: Algebra, r: Tensor2) -> tuple[Algebra, Comultiplication]:
    """The bialgebra induced by a skew Yang-Baxter solution on an admissible algebra."""
    _require_dim(algebra, r)
    _require_admissible(algebra)
    _require_skew(r)
    ay = aybe_residual(algebra, r)
    if not ay.is_zero():
        raise NotAYBESolution("the tensor does not solve the Yang-Baxter equation")
    return algebra, delta_from_r(algebra, r)


def rsharp(r: Tensor2) -> Matrix:
    """Matrix of the musical map A* -> A: the transpose of the coefficient array."""
    return Matrix(r.coeff).transpose()


def _dual_labels(dim: int) -> tuple[str, ...]:
    return tuple(f"e{i + 1}*" for i in range(dim))


def dual_product_from_r(algebra: Algebra, r: Tensor2,
                        labels: Optional[Sequence[str]] = None) -> Algebra:
    """The dual-space product transported through the musical map of r.

    For skew r its structure constants coincide with those of the dual
    algebra of the induced comultiplication.
    """
    _require_dim(algebra, r)
    n = algebra.dim
    rc = r.coeff
    sc = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                acc = ZERO
                for p in range(n):
                    if rc[a][p] != 0:
                        acc += rc[a][p] * algebra.sc[c][p][b]
                    if rc[b][p] != 0:
                        acc += rc[b][p] * algebra.sc[p][c][a]
                sc[a][b][c] = acc
    return Algebra.of(sc, labels if labels is not None else _dual_labels(n))


def aybe_rb_gap(algebra: Algebra, r: Tensor2) -> CheckReport:
    """Self-test: product defect of the musical map equals the pairing with AY(r).

    Holds identically for every skew tensor on an admissible algebra.
    """
    _require_dim(algebra, r)
    _require_admissible(algebra)
    _require_skew(r)
    n = algebra.dim
    rc = r.coeff
    scs = dual_product_from_r(algebra, r).sc
    ay = aybe_residual(algebra, r)
    residuals: dict[tuple, Fraction] = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = ZERO
                for p in range(n):
                    if rc[a][p] == 0:
                        continue
                    for q in range(n):
                        if rc[b][q] != 0:
                            lhs += rc[a][p] * rc[b][q] * algebra.sc[p][q][c]
                for m in range(n):
                    if scs[a][b][m] != 0:
                        lhs -= scs[a][b][m] * rc[m][c]
                residuals[(a, b, c)] = lhs - ay.coeff[a][b][c]
    return report_from_residuals("aybe_rb_gap", residuals)


def relative_rb_residuals(data: RelativeRBData) -> dict[tuple, Vector]:
    A, rho, T = data.A, data.rho, data.T
    d = rho.vdim
    res: dict[tuple, Vector] = {}
    for a in range(d):
        for b in range(d):
            tu = T.col(a)
            tv = T.col(b)
            lhs = multiply(A, tu, tv)
            arg = rho.l_of(tu).col(b) + rho.r_of(tv).col(a)
            res[(a, b)] = lhs - T.apply(arg)
    return res


def check_relative_rb(data: RelativeRBData) -> CheckReport:
    """The operator equation T(u).T(v) = T(l(Tu)v + r(Tv)u) on basis pairs."""
    return report_from_residuals("relative_rb", relative_rb_residuals(data))


def check_rb_operator_form(algebra: Algebra, r: Tensor2) -> CheckReport:
    """Operator form of the Yang-Baxter equation for the musical map of skew r."""
    _require_dim(algebra, r)
    _require_admissible(algebra)
    _require_skew(r)
    n = algebra.dim
    rc = r.coeff
    scs = dual_product_from_r(algebra, r).sc
    residuals: dict[tuple, Vector] = {}
    for a in range(n):
        for b in range(n):
            lhs = [ZERO] * n
            for p in range(n):
                if rc[a][p] == 0:
                    continue
                for q in range(n):
                    if rc[b][q] != 0:
                        f = rc[a][p] * rc[b][q]
                        row = algebra.sc[p][q]
                        for c in range(n):
                            if row[c] != 0:
                                lhs[c] += f * row[c]
            for m in range(n):
                if scs[a][b][m] != 0:
                    for c in range(n):
                        if rc[m][c] != 0:
                            lhs[c] -= scs[a][b][m] * rc[m][c]
            residuals[(a, b)] = Vector.of(lhs)
    return report_from_residuals("rb_operator_form", residuals)


def connes_cocycle_residuals(algebra: Algebra, omega: BilinearForm) -> dict[tuple, Fraction]:
    n = algebra.dim
    res: dict[tuple, Fraction] = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                total = ZERO
                total += omega.evaluate(algebra.product_vector(i, j), algebra.basis_vector(k))
                total += omega.evaluate(algebra.product_vector(j, k), algebra.basis_vector(i))
                total += omega.evaluate(algebra.product_vector(k, i), algebra.basis_vector(j))
                res[(i, j, k)] = total
    return res


def check_connes_cocycle(algebra: Algebra, omega: BilinearForm) -> CheckReport:
    """Vanishing cyclic sum of a skew bilinear form on all basis triples."""
    if omega.dim != algebra.dim:
        raise DimensionMismatch("form must match the algebra dimension")
    if not omega.is_skew():
        raise NotSkew("a skew-symmetric form is required")
    return report_from_residuals("connes_cocycle", connes_cocycle_residuals(algebra, omega))


def omega_from_r(algebra: Algebra, r: Tensor2) -> BilinearForm:
    """Bilinear form of the inverse musical map: gram = inverse coefficient array."""
    _require_dim(algebra, r)
    gram = rsharp(r).inverse().transpose()
    return BilinearForm(gram)


def double_lift(T: Matrix) -> Matrix:
    """Matrix of the lifted operator on A + A*: a* + x -> T*(a*) - T(x).

    Coordinates on the dual of the double are ordered dual-to-A first;
    the result equals the musical matrix of the embedded tensor.
    """
    n = T.rows
    if T.cols != n:
        raise DimensionMismatch("operator must be square")
    out = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for a in range(n):
        for b in range(n):
            out[n + b][a] = T.entries[a][b]
            out[a][n + b] = -T.entries[a][b]
    return Matrix.of(out)


def embed_operator(T: Matrix) -> Tensor2:
    """Skew tensor on A + A* pairing like the lifted operator: T minus its flip."""
    n = T.rows
    if T.cols != n:
        raise DimensionMismatch("operator must be square")
    out = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for j in range(n):
        for b in range(n):
            out[j][n + b] = T.entries[j][b]
            out[n + b][j] = -T.entries[j][b]
    return Tensor2.of(out)


def rb_to_ybe(algebra: Algebra, T: Matrix) -> tuple[Algebra, Tensor2]:
    """Lift an operator on an admissible algebra to a skew tensor on the double.

    The double is the standard double with a zero product on the dual
    factor; T is a relative Rota-Baxter operator for the adjoint actions
    exactly when the embedded tensor solves the Yang-Baxter equation there.
    """
    n = algebra.dim
    if T.rows != n or T.cols != n:
        raise DimensionMismatch("operator must be square of the algebra dimension")
    _require_admissible(algebra)
    zero_dual = Algebra.zero(n, labels=_dual_labels(n))
    double_algebra, _ = standard_double(algebra, zero_dual)
    return double_algebra, embed_operator(T)
