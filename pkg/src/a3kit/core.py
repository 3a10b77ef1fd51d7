"""Exact scalars, vectors, matrices and small dense tensors.

Conventions used throughout the package:

* scalars are ``fractions.Fraction`` values and floats are rejected, so
  every equality test is decided exactly with zero tolerance;
* a matrix acts on column vectors: ``M.apply(v)[i] = sum_j M[i][j] v[j]``;
* ``Tensor2`` and ``Tensor3`` hold dense coefficient arrays of elements of
  ``V (x) V`` and ``V (x) V (x) V`` in a fixed basis.

All values are immutable after construction; every operation returns a
new value, so instances may be freely shared between concurrent tasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatch, NotInvertible

ScalarLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(value: ScalarLike) -> Fraction:
    """Coerce ``value`` to an exact rational; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact scalar, got {type(value).__name__}")


def _freeze_coords(values: Iterable[ScalarLike]) -> tuple[Fraction, ...]:
    return tuple(scalar(v) for v in values)


def _freeze_rows(rows: Iterable[Iterable[ScalarLike]]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(scalar(v) for v in row) for row in rows)


@dataclass(frozen=True)
class Vector:
    coords: tuple[Fraction, ...]

    @staticmethod
    def of(values: Iterable[ScalarLike]) -> "Vector":
        return Vector(_freeze_coords(values))

    @staticmethod
    def zero(dim: int) -> "Vector":
        return Vector((ZERO,) * dim)

    @staticmethod
    def basis(dim: int, index: int) -> "Vector":
        return Vector(tuple(ONE if i == index else ZERO for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def _check(self, other: "Vector") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"vector dims {self.dim} != {other.dim}")

    def __add__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Vector":
        return Vector(tuple(-a for a in self.coords))

    def scale(self, c: ScalarLike) -> "Vector":
        f = scalar(c)
        return Vector(tuple(f * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __repr__(self) -> str:
        return "Vector(" + ", ".join(str(a) for a in self.coords) + ")"


@dataclass(frozen=True)
class Matrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise DimensionMismatch("matrix rows have unequal lengths")

    @staticmethod
    def of(rows: Iterable[Iterable[ScalarLike]]) -> "Matrix":
        return Matrix(_freeze_rows(rows))

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix(tuple((ZERO,) * cols for _ in range(rows)))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def row(self, i: int) -> Vector:
        return Vector(self.entries[i])

    def col(self, j: int) -> Vector:
        return Vector(tuple(row[j] for row in self.entries))

    def transpose(self) -> "Matrix":
        return Matrix(tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)))

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix shapes differ")
        return Matrix(tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix shapes differ")
        return Matrix(tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-a for a in row) for row in self.entries))

    def scale(self, c: ScalarLike) -> "Matrix":
        f = scalar(c)
        return Matrix(tuple(tuple(f * a for a in row) for row in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = other.cols
        out = []
        for row in self.entries:
            out.append(tuple(
                sum((row[k] * other.entries[k][j] for k in range(self.cols)), start=ZERO)
                for j in range(cols)
            ))
        return Matrix(tuple(out))

    def apply(self, v: Vector) -> Vector:
        if self.cols != v.dim:
            raise DimensionMismatch(f"matrix has {self.cols} columns, vector has dim {v.dim}")
        return Vector(tuple(sum((row[j] * v[j] for j in range(self.cols)), start=ZERO) for row in self.entries))

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.entries for a in row)

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.rows
        m = [list(row) for row in self.entries]
        det = ONE
        for c in range(n):
            pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
            if pivot is None:
                return ZERO
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = -det
            det *= m[c][c]
            inv = ONE / m[c][c]
            for r in range(c + 1, n):
                if m[r][c] != 0:
                    f = m[r][c] * inv
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return det

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.rows
        m = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(self.entries)]
        for c in range(n):
            pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
            if pivot is None:
                raise NotInvertible("matrix is singular")
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
            inv = ONE / m[c][c]
            m[c] = [a * inv for a in m[c]]
            for r in range(n):
                if r != c and m[r][c] != 0:
                    f = m[r][c]
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return Matrix(tuple(tuple(row[n:]) for row in m))

    def rank(self) -> int:
        _, pivots = rref(self.entries)
        return len(pivots)

    def __repr__(self) -> str:
        return "Matrix(" + "; ".join(", ".join(str(a) for a in row) for row in self.entries) + ")"


@dataclass(frozen=True)
class Tensor2:
    coeff: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.coeff)
        if any(len(row) != n for row in self.coeff):
            raise DimensionMismatch("Tensor2 coefficient array must be square")

    @staticmethod
    def of(rows: Iterable[Iterable[ScalarLike]]) -> "Tensor2":
        return Tensor2(_freeze_rows(rows))

    @staticmethod
    def zero(dim: int) -> "Tensor2":
        return Tensor2(tuple((ZERO,) * dim for _ in range(dim)))

    @staticmethod
    def basis(dim: int, a: int, b: int) -> "Tensor2":
        return Tensor2(tuple(tuple(ONE if (i, j) == (a, b) else ZERO for j in range(dim)) for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coeff)

    def __getitem__(self, i: int) -> tuple[Fraction, ...]:
        return self.coeff[i]

    def _check(self, other: "Tensor2") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"tensor dims {self.dim} != {other.dim}")

    def __add__(self, other: "Tensor2") -> "Tensor2":
        self._check(other)
        return Tensor2(tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.coeff, other.coeff)))

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        self._check(other)
        return Tensor2(tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.coeff, other.coeff)))

    def __neg__(self) -> "Tensor2":
        return Tensor2(tuple(tuple(-a for a in row) for row in self.coeff))

    def scale(self, c: ScalarLike) -> "Tensor2":
        f = scalar(c)
        return Tensor2(tuple(tuple(f * a for a in row) for row in self.coeff))

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.coeff for a in row)

    def is_symmetric(self) -> bool:
        n = self.dim
        return all(self.coeff[i][j] == self.coeff[j][i] for i in range(n) for j in range(i + 1, n))

    def is_skew(self) -> bool:
        n = self.dim
        return all(self.coeff[i][j] == -self.coeff[j][i] for i in range(n) for j in range(i, n))

    def __repr__(self) -> str:
        return "Tensor2(" + "; ".join(", ".join(str(a) for a in row) for row in self.coeff) + ")"


@dataclass(frozen=True)
class Tensor3:
    coeff: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        n = len(self.coeff)
        if any(len(plane) != n or any(len(row) != n for row in plane) for plane in self.coeff):
            raise DimensionMismatch("Tensor3 coefficient array must be cubic")

    @staticmethod
    def of(planes: Iterable[Iterable[Iterable[ScalarLike]]]) -> "Tensor3":
        return Tensor3(tuple(_freeze_rows(plane) for plane in planes))

    @staticmethod
    def zero(dim: int) -> "Tensor3":
        return Tensor3(tuple(tuple((ZERO,) * dim for _ in range(dim)) for _ in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coeff)

    def __getitem__(self, i: int) -> tuple[tuple[Fraction, ...], ...]:
        return self.coeff[i]

    def _check(self, other: "Tensor3") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"tensor dims {self.dim} != {other.dim}")

    def __add__(self, other: "Tensor3") -> "Tensor3":
        self._check(other)
        return Tensor3(tuple(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(p1, p2))
            for p1, p2 in zip(self.coeff, other.coeff)
        ))

    def __sub__(self, other: "Tensor3") -> "Tensor3":
        self._check(other)
        return Tensor3(tuple(
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(p1, p2))
            for p1, p2 in zip(self.coeff, other.coeff)
        ))

    def __neg__(self) -> "Tensor3":
        return Tensor3(tuple(tuple(tuple(-a for a in row) for row in plane) for plane in self.coeff))

    def scale(self, c: ScalarLike) -> "Tensor3":
        f = scalar(c)
        return Tensor3(tuple(tuple(tuple(f * a for a in row) for row in plane) for plane in self.coeff))

    def is_zero(self) -> bool:
        return all(a == 0 for plane in self.coeff for row in plane for a in row)

    def __repr__(self) -> str:
        return f"Tensor3(dim={self.dim})"


def xi_permute(t: Tensor3) -> Tensor3:
    """Cyclic permutation sending the monomial x(x)y(x)z to y(x)z(x)x.

    On coefficients: out[b][c][a] = t[a][b][c]; applying it three times is
    the identity.
    """
    n = t.dim
    c = t.coeff
    return Tensor3(tuple(
        tuple(tuple(c[k][i][j] for k in range(n)) for j in range(n))
        for i in range(n)
    ))


def tau_swap(t: Tensor2) -> Tensor2:
    """Flip sending x(x)y to y(x)x; an involution (coefficient transpose)."""
    n = t.dim
    return Tensor2(tuple(tuple(t.coeff[j][i] for j in range(n)) for i in range(n)))


def skew_part(t: Tensor2) -> Tensor2:
    """t minus its flip; the result is always skew-symmetric."""
    return t - tau_swap(t)


def apply_ops2(m: Matrix, n: Matrix, t: Tensor2) -> Tensor2:
    """Apply the operator m(x)n to a rank-2 tensor.

    out[a][b] = sum_{c,d} m[a][c] n[b][d] t[c][d], i.e. ``m @ t @ n^T``.
    """
    d = t.dim
    if m.rows != d or m.cols != d or n.rows != d or n.cols != d:
        raise DimensionMismatch("operator factors must be square of the tensor's dimension")
    inner = m @ Matrix(t.coeff) @ n.transpose()
    return Tensor2(inner.entries)


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals.

    Returns the nonzero echelon rows and the pivot column indices.
    """
    m = [list(row) for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    pr = 0
    for pc in range(ncols):
        pivot_row = next((r for r in range(pr, len(m)) if m[r][pc] != 0), None)
        if pivot_row is None:
            continue
        m[pr], m[pivot_row] = m[pivot_row], m[pr]
        inv = ONE / m[pr][pc]
        m[pr] = [a * inv for a in m[pr]]
        for r in range(len(m)):
            if r != pr and m[r][pc] != 0:
                f = m[r][pc]
                m[r] = [a - f * b for a, b in zip(m[r], m[pr])]
        pivots.append(pc)
        pr += 1
        if pr == len(m):
            break
    return m[:pr], pivots


def reduce_against(rows: list[list[Fraction]], pivots: list[int], v: Vector) -> Vector:
    """Remainder of v after elimination by echelon rows; zero iff v is in the span."""
    coords = list(v.coords)
    for row, pc in zip(rows, pivots):
        if coords[pc] != 0:
            f = coords[pc]
            coords = [a - f * b for a, b in zip(coords, row)]
    return Vector(tuple(coords))


def span_rank(vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    _, pivots = rref([v.coords for v in vectors])
    return len(pivots)


def in_span(vectors: Sequence[Vector], v: Vector) -> Vector:
    """Residual of membership of v in the rational span; zero vector iff member."""
    rows, pivots = rref([w.coords for w in vectors])
    return reduce_against(rows, pivots, v)


def kernel_vector(m: Matrix) -> Vector | None:
    """One nonzero kernel vector of a square matrix, or None if invertible."""
    n = m.rows
    rows, pivots = rref(m.entries)
    if len(pivots) == n:
        return None
    free = next(c for c in range(n) if c not in pivots)
    coords = [ZERO] * n
    coords[free] = ONE
    for row, pc in zip(rows, pivots):
        coords[pc] = -row[free]
    return Vector(tuple(coords))
