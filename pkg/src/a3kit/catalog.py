"""Small named algebras and comultiplications used by tests and scripts."""

from __future__ import annotations

from .algebra import Algebra
from .bialgebra import Comultiplication
from .core import Matrix


def demo_algebra() -> Algebra:
    """Two-dimensional commutative witness algebra.

    Products: e1.e1 = e1.e2 = e2.e1 = e1 + 2 e2 and e2.e2 = e2.  It passes
    the cyclic and admissibility laws but is not associative.
    """
    return Algebra.of([[[1, 2], [1, 2]], [[1, 2], [0, 1]]])


def demo_delta() -> Comultiplication:
    """The comultiplication sending e1 to e1 (x) e1 and e2 to zero.

    Together with the demo algebra it forms the golden bialgebra instance.
    """
    return Comultiplication.of([[[1, 0], [0, 0]], [[0, 0], [0, 0]]])


def idempotent_algebra() -> Algebra:
    """Two-dimensional algebra with e1.e1 = e1 and all other products zero."""
    return Algebra.of([[[1, 0], [0, 0]], [[0, 0], [0, 0]]])


def rb_witness_operator() -> Matrix:
    """The operator e1 -> e2, e2 -> 0: a relative Rota-Baxter operator for
    the adjoint actions of the idempotent algebra."""
    return Matrix.of([[0, 0], [1, 0]])


def upper_triangular_algebra() -> Algebra:
    """Associative non-commutative algebra: e1.e1 = e1, e1.e2 = e2, rest zero."""
    return Algebra.of([[[1, 0], [0, 1]], [[0, 0], [0, 0]]])


def group_ring_order_two() -> Algebra:
    """Commutative associative algebra with e1 the unit and e2.e2 = e1."""
    return Algebra.of([[[1, 0], [0, 1]], [[0, 1], [1, 0]]])
