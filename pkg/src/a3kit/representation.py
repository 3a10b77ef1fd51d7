"""Two-sided representations: checks, duals, adjoints and semidirect products.

Matrix convention: the matrix of a left action l(e_i) has the coordinates
of l(e_i) applied to the j-th module basis vector in its j-th column.  For
the adjoint representation this means column j of L(e_i) holds e_i . e_j,
i.e. ``l_mats[i][k][j] = sc[i][j][k]`` and ``r_mats[j][k][i] = sc[i][j][k]``.

Dual spaces always carry the dual basis, so dual actions are plain matrix
transposes (unsigned convention).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, CheckReport, LawKind, Witness, check_law, report_from_residuals
from .core import ZERO, Matrix, Vector
from .errors import AdmissibilityRequired, AlgebraMismatch, DimensionMismatch, NotInvertible


@dataclass(frozen=True)
class Representation:
    algebra: Algebra
    l_mats: tuple[Matrix, ...]
    r_mats: tuple[Matrix, ...]

    def __post_init__(self):
        n = self.algebra.dim
        if len(self.l_mats) != n or len(self.r_mats) != n:
            raise DimensionMismatch("one action matrix pair per basis element required")
        d = self.l_mats[0].rows if self.l_mats else 0
        for m in (*self.l_mats, *self.r_mats):
            if m.rows != d or m.cols != d:
                raise DimensionMismatch("all action matrices must be square of the module dimension")

    @staticmethod
    def of(algebra: Algebra, l_mats: Sequence[Matrix], r_mats: Sequence[Matrix]) -> "Representation":
        return Representation(algebra, tuple(l_mats), tuple(r_mats))

    @staticmethod
    def zero(algebra: Algebra, vdim: int) -> "Representation":
        z = Matrix.zeros(vdim, vdim)
        return Representation(algebra, (z,) * algebra.dim, (z,) * algebra.dim)

    @property
    def vdim(self) -> int:
        return self.l_mats[0].rows

    def l_of(self, x: Vector) -> Matrix:
        return _lin_comb(self.l_mats, x)

    def r_of(self, x: Vector) -> Matrix:
        return _lin_comb(self.r_mats, x)


def _lin_comb(mats: Sequence[Matrix], coeffs) -> Matrix:
    d = mats[0].rows
    out = [[ZERO] * d for _ in range(d)]
    for c, m in zip(coeffs, mats):
        if c == 0:
            continue
        for a in range(d):
            row = m.entries[a]
            for b in range(d):
                if row[b] != 0:
                    out[a][b] += c * row[b]
    return Matrix.of(out)


def representation_residuals(rho: Representation) -> dict[tuple, Matrix]:
    """Residual of the defining mixed identity on each basis pair."""
    a = rho.algebra
    n = a.dim
    res: dict[tuple, Matrix] = {}
    for i in range(n):
        for j in range(n):
            lxy = _lin_comb(rho.l_mats, a.sc[i][j])
            rxy = _lin_comb(rho.r_mats, a.sc[i][j])
            res[(i, j)] = (
                lxy - rxy
                + rho.r_mats[i] @ rho.l_mats[j]
                - rho.l_mats[i] @ rho.l_mats[j]
                + rho.r_mats[j] @ rho.r_mats[i]
                - rho.l_mats[j] @ rho.r_mats[i]
            )
    return res


def check_representation(rho: Representation) -> CheckReport:
    return report_from_residuals("representation", representation_residuals(rho))


def associative_representation_residuals(rho: Representation) -> dict[tuple, Matrix]:
    a = rho.algebra
    n = a.dim
    res: dict[tuple, Matrix] = {}
    for i in range(n):
        for j in range(n):
            lxy = _lin_comb(rho.l_mats, a.sc[i][j])
            rxy = _lin_comb(rho.r_mats, a.sc[i][j])
            res[("left", i, j)] = lxy - rho.l_mats[i] @ rho.l_mats[j]
            res[("right", i, j)] = rxy - rho.r_mats[j] @ rho.r_mats[i]
            res[("mixed", i, j)] = rho.l_mats[i] @ rho.r_mats[j] - rho.r_mats[j] @ rho.l_mats[i]
    return res


def check_associative_representation(rho: Representation) -> CheckReport:
    return report_from_residuals("associative_representation", associative_representation_residuals(rho))


def admissible_representation_residuals(rho: Representation) -> dict[tuple, Matrix]:
    n = rho.algebra.dim
    res: dict[tuple, Matrix] = {}
    for i in range(n):
        for j in range(n):
            res[(i, j)] = (
                rho.r_mats[j] @ rho.l_mats[i]
                - rho.l_mats[i] @ rho.r_mats[j]
                + rho.r_mats[i] @ rho.l_mats[j]
                - rho.l_mats[j] @ rho.r_mats[i]
            )
    return res


def check_admissible_representation(rho: Representation) -> CheckReport:
    return report_from_residuals("admissible_representation", admissible_representation_residuals(rho))


def dual_representation(rho: Representation) -> Representation:
    """The dual triple: new left action is r-transpose, new right is l-transpose."""
    return Representation(
        rho.algebra,
        tuple(m.transpose() for m in rho.r_mats),
        tuple(m.transpose() for m in rho.l_mats),
    )


def adjoint_representation(algebra: Algebra) -> Representation:
    n = algebra.dim
    l_mats = tuple(
        Matrix.of([[algebra.sc[i][j][k] for j in range(n)] for k in range(n)])
        for i in range(n)
    )
    r_mats = tuple(
        Matrix.of([[algebra.sc[i][j][k] for i in range(n)] for k in range(n)])
        for j in range(n)
    )
    return Representation(algebra, l_mats, r_mats)


def coadjoint_representation(algebra: Algebra) -> Representation:
    """Dual of the adjoint; defined only for algebras passing admissibility."""
    if not check_law(algebra, LawKind.ADMISSIBLE).passed:
        raise AdmissibilityRequired("coadjoint representation needs an admissible algebra")
    return dual_representation(adjoint_representation(algebra))


def check_equivalence(rho: Representation, rho2: Representation, phi: Matrix) -> CheckReport:
    """phi intertwines both actions; phi must be exactly invertible."""
    if rho.vdim != rho2.vdim or phi.rows != rho2.vdim or phi.cols != rho.vdim:
        raise DimensionMismatch("phi must be a square map between equal-dimensional modules")
    if rho.algebra.dim != rho2.algebra.dim:
        raise DimensionMismatch("representations must be over algebras of equal dimension")
    if phi.det() == 0:
        raise NotInvertible("intertwiner must be invertible")
    res: dict[tuple, Matrix] = {}
    for i in range(rho.algebra.dim):
        res[("left", i)] = phi @ rho.l_mats[i] - rho2.l_mats[i] @ phi
        res[("right", i)] = phi @ rho.r_mats[i] - rho2.r_mats[i] @ phi
    return report_from_residuals("equivalence", res)


def semidirect_product(algebra: Algebra, rho: Representation,
                       module_labels: Sequence[str] | None = None) -> Algebra:
    """Algebra on A + V with A acting on V through rho and V.V = 0."""
    if rho.algebra != algebra:
        raise AlgebraMismatch("representation is not over the given algebra")
    n = algebra.dim
    d = rho.vdim
    total = n + d
    sc = [[[ZERO] * total for _ in range(total)] for _ in range(total)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                sc[i][j][k] = algebra.sc[i][j][k]
    for i in range(n):
        for b in range(d):
            for c in range(d):
                sc[i][n + b][n + c] = rho.l_mats[i].entries[c][b]
                sc[n + b][i][n + c] = rho.r_mats[i].entries[c][b]
    if module_labels is None:
        module_labels = tuple(f"v{t + 1}" for t in range(d))
    return Algebra.of(sc, tuple(algebra.basis_labels) + tuple(module_labels))
