"""Exact-arithmetic toolkit for A3-associative algebra structures.

Structure constants over exact rationals, law checkers with residual
witnesses, representations and doubles, bialgebra and Yang-Baxter
machinery, relative Rota-Baxter operators, brute-force oracles and
small-grid solvers, plus a JSON file format and CLI.
"""

from .algebra import Algebra, CheckReport, LawKind, Witness, check_homomorphism, check_law, check_subalgebra, commutator_algebra, multiply
from .bialgebra import (
    Comultiplication,
    check_admissible_coalgebra,
    check_bialgebra,
    check_coalgebra,
    check_coassociative,
    comultiplication_of_dual,
    dual_algebra,
    manin_from_bialgebra,
)
from .brute import SUPPORTED_EXPRESSIONS, brute_residual
from .core import Matrix, Tensor2, Tensor3, Vector, apply_ops2, scalar, skew_part, tau_swap, xi_permute
from .double import (
    BilinearForm,
    MatchedPairData,
    bflat,
    check_manin_triple,
    check_matched_pair,
    check_quadratic,
    coadjoint_matched_pair,
    form_to_tensor,
    invariance_residual,
    matched_pair_product,
    pairing_form,
    standard_double,
)
from .representation import (
    Representation,
    adjoint_representation,
    check_admissible_representation,
    check_associative_representation,
    check_equivalence,
    check_representation,
    coadjoint_representation,
    dual_representation,
    semidirect_product,
)
from .search import GridSpec, generate_algebra, solve_aybe_skew, solve_relative_rb
from .yangbaxter import (
    CocycleResiduals,
    RelativeRBData,
    aybe_rb_gap,
    aybe_residual,
    check_connes_cocycle,
    check_rb_operator_form,
    check_relative_rb,
    cocycle_conditions_residual,
    delta_from_r,
    double_lift,
    dual_product_from_r,
    embed_operator,
    omega_from_r,
    rb_to_ybe,
    rsharp,
    triangular_bialgebra,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
