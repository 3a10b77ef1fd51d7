"""Exhaustive small-grid solvers and deterministic algebra generators.

Candidates are enumerated in lexicographic order over row-major entries
with the grid values sorted ascending; parallel runs partition the
candidate space and merge per-partition results back in canonical order,
so the output list never depends on the worker count.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Callable, Iterable, Iterator, Sequence

from .algebra import Algebra, LawKind, check_law
from .catalog import demo_algebra
from .core import ZERO, Matrix, Tensor2, scalar
from .errors import RejectionBudgetExceeded, SearchSpaceTooLarge
from .representation import Representation
from .yangbaxter import RelativeRBData, aybe_residual, check_relative_rb

DEFAULT_GRID_VALUES = tuple(Fraction(v) for v in (-2, -1, 0, 1, 2))


@dataclass(frozen=True)
class GridSpec:
    values: tuple[Fraction, ...] = DEFAULT_GRID_VALUES
    max_solutions: int = 256
    deterministic_order: bool = True

    def __post_init__(self):
        if not self.values:
            raise ValueError("grid needs at least one candidate value")
        if len(set(self.values)) != len(self.values):
            raise ValueError("grid values must be duplicate-free")
        if self.max_solutions <= 0:
            raise ValueError("max_solutions must be positive")
        if not self.deterministic_order:
            raise ValueError("only deterministic enumeration is supported")

    @staticmethod
    def of(values: Iterable, max_solutions: int = 256) -> "GridSpec":
        vals = tuple(sorted({scalar(v) for v in values}))
        return GridSpec(vals, max_solutions, True)

    def sorted_values(self) -> tuple[Fraction, ...]:
        return tuple(sorted(self.values))


def matrix_candidates(rows: int, cols: int, grid: GridSpec) -> Iterator[Matrix]:
    """All matrices with entries in the grid, lexicographic by row-major entries."""
    values = grid.sorted_values()
    for combo in iproduct(values, repeat=rows * cols):
        yield Matrix.of([combo[r * cols:(r + 1) * cols] for r in range(rows)])


def skew_candidates(dim: int, grid: GridSpec) -> Iterator[Tensor2]:
    """All skew tensors with strict upper-triangle entries in the grid."""
    values = grid.sorted_values()
    positions = [(a, b) for a in range(dim) for b in range(a + 1, dim)]
    for combo in iproduct(values, repeat=len(positions)):
        coeff = [[ZERO] * dim for _ in range(dim)]
        for (a, b), v in zip(positions, combo):
            coeff[a][b] = v
            coeff[b][a] = -v
        yield Tensor2.of(coeff)


def _filter_candidates(candidates: list, keep: Callable, max_solutions: int, workers: int) -> list:
    if workers <= 1:
        out = []
        for cand in candidates:
            if keep(cand):
                out.append(cand)
                if len(out) >= max_solutions:
                    break
        return out
    chunk = max(1, (len(candidates) + workers * 4 - 1) // (workers * 4))
    parts = [candidates[i:i + chunk] for i in range(0, len(candidates), chunk)]

    def scan(part):
        return [cand for cand in part if keep(cand)]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(scan, parts))
    merged = [cand for part in results for cand in part]
    return merged[:max_solutions]


def solve_relative_rb(algebra: Algebra, rho: Representation,
                      grid: GridSpec = GridSpec(), workers: int = 1) -> list[Matrix]:
    """All grid operators satisfying the relative Rota-Baxter equation."""
    cells = algebra.dim * rho.vdim
    if cells > 6:
        raise SearchSpaceTooLarge(f"{cells} operator entries exceed the enumeration budget of 6")

    def keep(T: Matrix) -> bool:
        return check_relative_rb(RelativeRBData(algebra, rho, T)).passed

    candidates = list(matrix_candidates(algebra.dim, rho.vdim, grid))
    return _filter_candidates(candidates, keep, grid.max_solutions, workers)


def solve_aybe_skew(algebra: Algebra, grid: GridSpec = GridSpec(), workers: int = 1) -> list[Tensor2]:
    """All skew grid tensors solving the Yang-Baxter equation."""
    free = algebra.dim * (algebra.dim - 1) // 2
    if free > 8:
        raise SearchSpaceTooLarge(f"{free} free entries exceed the enumeration budget of 8")

    def keep(r: Tensor2) -> bool:
        return aybe_residual(algebra, r).is_zero()

    candidates = list(skew_candidates(algebra.dim, grid))
    return _filter_candidates(candidates, keep, grid.max_solutions, workers)


_FAMILIES = ("zero", "demo", "demo_deformation", "commutative", "associative", "admissible_poisson", "random")


def _random_invertible(rng: random.Random, n: int) -> Matrix:
    for _ in range(200):
        m = Matrix.of([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        if m.det() != 0:
            return m
    raise RejectionBudgetExceeded("could not draw an invertible change of basis")


def _conjugate(algebra: Algebra, p: Matrix) -> Algebra:
    """Transport the product along the basis change with columns of p."""
    n = algebra.dim
    pi = p.inverse()
    sc = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            img = [ZERO] * n
            for a in range(n):
                if p.entries[a][i] == 0:
                    continue
                for b in range(n):
                    if p.entries[b][j] == 0:
                        continue
                    f = p.entries[a][i] * p.entries[b][j]
                    row = algebra.sc[a][b]
                    for c in range(n):
                        if row[c] != 0:
                            img[c] += f * row[c]
            for k in range(n):
                sc[i][j][k] = sum((pi.entries[k][c] * img[c] for c in range(n)), start=ZERO)
    return Algebra.of(sc, algebra.basis_labels)


def _associative_template(rng: random.Random, n: int) -> Algebra:
    kind = rng.randrange(3)
    sc = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    if kind == 0:
        # pairwise-orthogonal idempotents, a random subset active
        for i in range(n):
            if rng.random() < 0.8:
                sc[i][i][i] = Fraction(1)
    elif kind == 1:
        # truncated polynomial ring: e_i ~ t^(i-1), products truncate
        for i in range(n):
            for j in range(n):
                if i + j < n:
                    sc[i][j][i + j] = Fraction(1)
    else:
        # unit plus one square root of a scalar
        sc[0][0][0] = Fraction(1)
        if n > 1:
            sc[0][1][1] = sc[1][0][1] = Fraction(1)
            sc[1][1][0] = Fraction(rng.choice([-1, 1]))
    return Algebra.of(sc)


def generate_algebra(family: str, seed: int, dim: int = 2) -> Algebra:
    """Deterministic per-seed generator; output passes the family's defining check."""
    if family not in _FAMILIES:
        raise ValueError(f"unsupported family {family!r}; choose from {_FAMILIES}")
    rng = random.Random((family, seed, dim).__repr__())
    if family == "zero":
        return Algebra.zero(dim)
    if family == "demo":
        return demo_algebra()
    if family == "demo_deformation":
        for _ in range(100):
            a, b, c, d = (Fraction(rng.randint(-2, 2)) for _ in range(4))
            shared = [a, b]
            cand = Algebra.of([[shared, shared], [shared, [c, d]]])
            if check_law(cand, LawKind.A3).passed:
                return cand
        raise RejectionBudgetExceeded("no deformation passed the defining check")
    if family == "commutative":
        for _ in range(100):
            sc: list = [[None] * dim for _ in range(dim)]
            for i in range(dim):
                for j in range(i, dim):
                    v = [Fraction(rng.randint(-2, 2)) for _ in range(dim)]
                    sc[i][j] = v
                    sc[j][i] = v
            cand = Algebra.of(sc)
            if check_law(cand, LawKind.A3).passed and check_law(cand, LawKind.ADMISSIBLE).passed:
                return cand
        raise RejectionBudgetExceeded("no commutative sample passed the defining check")
    if family == "associative":
        for _ in range(100):
            cand = _conjugate(_associative_template(rng, dim), _random_invertible(rng, dim))
            if check_law(cand, LawKind.ASSOCIATIVE).passed:
                return cand
        raise RejectionBudgetExceeded("no associative sample passed the defining check")
    if family == "admissible_poisson":
        for _ in range(100):
            sc = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
            for i in range(dim):
                sc[i][i][i] = Fraction(rng.randint(-2, 2))
            cand = _conjugate(Algebra.of(sc), _random_invertible(rng, dim))
            if check_law(cand, LawKind.ADMISSIBLE_POISSON).passed:
                return cand
        raise RejectionBudgetExceeded("no admissible-Poisson sample passed the defining check")
    # family == "random": unconstrained
    sc = [[[Fraction(rng.randint(-2, 2)) for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
    return Algebra.of(sc)
