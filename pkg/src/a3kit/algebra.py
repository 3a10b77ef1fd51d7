"""Structure-constant algebras and the single-algebra law checkers.

An ``Algebra`` stores a rank-3 array ``sc`` with ``e_i . e_j =
sum_k sc[i][j][k] e_k``.  Every law is checked on basis triples only; by
multilinearity this is equivalent to the law holding for all elements.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Any, Iterable, Mapping, Optional, Sequence

from .core import ONE, ZERO, Matrix, Tensor2, Tensor3, Vector, in_span, scalar
from .errors import DimensionMismatch


class LawKind(enum.Enum):
    A3 = "a3"
    ASSOCIATIVE = "associative"
    ADMISSIBLE_POISSON = "admissible_poisson"
    ADMISSIBLE = "admissible"
    LEFT_SYMMETRIC = "left_symmetric"
    RIGHT_SYMMETRIC = "right_symmetric"
    LIE_ADMISSIBLE = "lie_admissible"


def _default_labels(dim: int) -> tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(dim))


@dataclass(frozen=True)
class Algebra:
    sc: tuple[tuple[tuple[Fraction, ...], ...], ...]
    basis_labels: tuple[str, ...]

    def __post_init__(self):
        n = len(self.sc)
        if n == 0:
            raise DimensionMismatch("algebra dimension must be positive")
        if any(len(plane) != n or any(len(row) != n for row in plane) for plane in self.sc):
            raise DimensionMismatch("structure constants must form an n x n x n array")
        if len(self.basis_labels) != n:
            raise DimensionMismatch("one basis label per dimension required")
        if len(set(self.basis_labels)) != n:
            raise ValueError("basis labels must be distinct")

    @staticmethod
    def of(sc: Iterable[Iterable[Iterable[Any]]], labels: Optional[Sequence[str]] = None) -> "Algebra":
        frozen = tuple(tuple(tuple(scalar(v) for v in row) for row in plane) for plane in sc)
        if labels is None:
            labels = _default_labels(len(frozen))
        return Algebra(frozen, tuple(labels))

    @staticmethod
    def zero(dim: int, labels: Optional[Sequence[str]] = None) -> "Algebra":
        sc = tuple(tuple((ZERO,) * dim for _ in range(dim)) for _ in range(dim))
        return Algebra(sc, tuple(labels) if labels is not None else _default_labels(dim))

    @staticmethod
    def from_products(dim: int, products: Mapping[tuple[int, int], Mapping[int, Any]],
                      labels: Optional[Sequence[str]] = None) -> "Algebra":
        """Build from a sparse table {(i, j): {k: coefficient}}."""
        sc = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), comps in products.items():
            for k, v in comps.items():
                sc[i][j][k] = scalar(v)
        return Algebra.of(sc, labels)

    @property
    def dim(self) -> int:
        return len(self.sc)

    def product_vector(self, i: int, j: int) -> Vector:
        return Vector(self.sc[i][j])

    def basis_vector(self, i: int) -> Vector:
        return Vector.basis(self.dim, i)

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.sc[i][j] == self.sc[j][i] for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class Witness:
    indices: tuple
    residual: Any
    part: str = ""


@dataclass(frozen=True)
class CheckReport:
    law_name: str
    passed: bool
    witness: Optional[Witness]
    residual_norm_zero: bool
    residuals: Mapping[tuple, Any] = field(default_factory=dict, compare=False)


def _residual_is_zero(residual: Any) -> bool:
    if isinstance(residual, Fraction):
        return residual == 0
    return residual.is_zero()


def report_from_residuals(law_name: str, residuals: Mapping[tuple, Any]) -> CheckReport:
    """Wrap a residual family, picking the lexicographically first failure."""
    witness = None
    for key in sorted(residuals):
        if not _residual_is_zero(residuals[key]):
            value = residuals[key]
            part = key[0] if key and isinstance(key[0], str) else ""
            witness = Witness(indices=key, residual=value, part=part)
            break
    passed = witness is None
    return CheckReport(law_name, passed, witness, passed, residuals)


def merge_families(parts: Mapping[str, Mapping[tuple, Any]]) -> dict[tuple, Any]:
    """Prefix every key of each family with its part name."""
    merged: dict[tuple, Any] = {}
    for part, family in parts.items():
        for key, value in family.items():
            merged[(part,) + tuple(key)] = value
    return merged


def multiply(algebra: Algebra, x: Vector, y: Vector) -> Vector:
    """Bilinear product: out[k] = sum_{i,j} x[i] y[j] sc[i][j][k]."""
    n = algebra.dim
    if x.dim != n or y.dim != n:
        raise DimensionMismatch("vectors must match the algebra dimension")
    out = [ZERO] * n
    for i in range(n):
        xi = x[i]
        if xi == 0:
            continue
        for j in range(n):
            yj = y[j]
            if yj == 0:
                continue
            f = xi * yj
            row = algebra.sc[i][j]
            for k in range(n):
                if row[k] != 0:
                    out[k] += f * row[k]
    return Vector(tuple(out))


# Each law is a signed sum of bracketings of a permuted triple:
# ("L", p) stands for (u_p0 . u_p1) . u_p2 and ("R", p) for u_p0 . (u_p1 . u_p2).
_LAW_TERMS: dict[LawKind, tuple[tuple[int, str, tuple[int, int, int]], ...]] = {
    LawKind.A3: (
        (1, "L", (0, 1, 2)), (1, "L", (1, 2, 0)), (1, "L", (2, 0, 1)),
        (-1, "R", (0, 1, 2)), (-1, "R", (1, 2, 0)), (-1, "R", (2, 0, 1)),
    ),
    LawKind.ASSOCIATIVE: ((1, "L", (0, 1, 2)), (-1, "R", (0, 1, 2))),
    LawKind.ADMISSIBLE_POISSON: (
        (3, "L", (0, 1, 2)), (-3, "R", (0, 1, 2)),
        (-1, "L", (0, 2, 1)), (-1, "L", (1, 2, 0)),
        (1, "L", (1, 0, 2)), (1, "L", (2, 0, 1)),
    ),
    LawKind.ADMISSIBLE: (
        (1, "L", (0, 2, 1)), (-1, "R", (0, 2, 1)),
        (-1, "R", (1, 2, 0)), (1, "L", (1, 2, 0)),
    ),
    LawKind.LEFT_SYMMETRIC: (
        (1, "L", (0, 1, 2)), (-1, "R", (0, 1, 2)),
        (-1, "L", (1, 0, 2)), (1, "R", (1, 0, 2)),
    ),
    LawKind.RIGHT_SYMMETRIC: (
        (1, "L", (0, 1, 2)), (-1, "R", (0, 1, 2)),
        (-1, "L", (0, 2, 1)), (1, "R", (0, 2, 1)),
    ),
    LawKind.LIE_ADMISSIBLE: (
        (1, "L", (0, 1, 2)), (-1, "L", (1, 0, 2)),
        (1, "L", (1, 2, 0)), (-1, "L", (2, 1, 0)),
        (1, "L", (2, 0, 1)), (-1, "L", (0, 2, 1)),
        (-1, "R", (0, 1, 2)), (1, "R", (0, 2, 1)),
        (-1, "R", (1, 2, 0)), (1, "R", (1, 0, 2)),
        (-1, "R", (2, 0, 1)), (1, "R", (2, 1, 0)),
    ),
}


def law_residual_at(algebra: Algebra, law: LawKind, i: int, j: int, k: int) -> Vector:
    """Exact residual of ``law`` evaluated at the basis triple (e_i, e_j, e_k)."""
    sc = algebra.sc
    n = algebra.dim
    out = [ZERO] * n
    triple = (i, j, k)
    for coef, assoc, perm in _LAW_TERMS[law]:
        a, b, c = triple[perm[0]], triple[perm[1]], triple[perm[2]]
        if assoc == "L":
            first = sc[a][b]
            for p in range(n):
                f = first[p]
                if f != 0:
                    row = sc[p][c]
                    g = coef * f
                    for m in range(n):
                        if row[m] != 0:
                            out[m] += g * row[m]
        else:
            inner = sc[b][c]
            for p in range(n):
                f = inner[p]
                if f != 0:
                    row = sc[a][p]
                    g = coef * f
                    for m in range(n):
                        if row[m] != 0:
                            out[m] += g * row[m]
    return Vector(tuple(out))


def law_residuals(algebra: Algebra, law: LawKind) -> dict[tuple, Vector]:
    n = algebra.dim
    return {
        (i, j, k): law_residual_at(algebra, law, i, j, k)
        for i, j, k in iproduct(range(n), repeat=3)
    }


def check_law(algebra: Algebra, law: LawKind) -> CheckReport:
    """Evaluate the law's residual on every basis triple."""
    return report_from_residuals(law.value, law_residuals(algebra, law))


def commutator_algebra(algebra: Algebra) -> Algebra:
    """Anticommutative algebra with bracket [x, y] = x.y - y.x."""
    n = algebra.dim
    sc = tuple(
        tuple(tuple(algebra.sc[i][j][k] - algebra.sc[j][i][k] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    return Algebra(sc, algebra.basis_labels)


def check_homomorphism(phi: Matrix, a1: Algebra, a2: Algebra) -> CheckReport:
    """phi(x .1 y) = phi(x) .2 phi(y) on all basis pairs of a1."""
    if phi.rows != a2.dim or phi.cols != a1.dim:
        raise DimensionMismatch("phi must be a2.dim x a1.dim")
    residuals: dict[tuple, Vector] = {}
    images = [phi.col(i) for i in range(a1.dim)]
    for i in range(a1.dim):
        for j in range(a1.dim):
            lhs = phi.apply(a1.product_vector(i, j))
            rhs = multiply(a2, images[i], images[j])
            residuals[(i, j)] = lhs - rhs
    return report_from_residuals("homomorphism", residuals)


def check_subalgebra(algebra: Algebra, span: Sequence[Vector]) -> CheckReport:
    """Closure of the span under the product, decided by exact row reduction.

    The residual for a pair is the remainder of the product after
    elimination by the span; it is zero exactly when the product lies in
    the rational span.
    """
    for v in span:
        if v.dim != algebra.dim:
            raise DimensionMismatch("span vectors must match the algebra dimension")
    residuals: dict[tuple, Vector] = {}
    for s, u in enumerate(span):
        for t, v in enumerate(span):
            residuals[(s, t)] = in_span(span, multiply(algebra, u, v))
    return report_from_residuals("subalgebra", residuals)
