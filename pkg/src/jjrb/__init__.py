"""Exact computations with Jacobi-Jordan algebras, weighted Rota-Baxter
operators, their representations and low-degree RB cohomology."""

from .algebra import AlgebraMorphism, CheckResult, JJAlgebra, check_jj_axioms, check_morphism, is_subalgebra
from .errors import *  # noqa: F401,F403
from .linalg import Matrix, SubspaceBasis, image_basis, kernel_basis, quotient_representatives
from .rota_baxter import (
    PolySystem,
    RBOperator,
    check_quasi_idempotent_identity,
    check_rb,
    conjugate_rb,
    derived_algebra,
    eval_constraints,
    eval_grid,
    rb_constraint_system,
    reflect_rb,
    scale_rb,
)
from .representations import (
    RBRepresentation,
    Representation,
    adjoint_rb_rep,
    adjoint_rep,
    bar_rep,
    check_paired,
    check_rb_representation,
    check_representation,
    direct_sum,
    doubled_rep,
    doubling,
    dual_rep,
    hat_gl_rep,
    quadruple_semidirect,
    reflect_rep,
    semidirect_product,
    tilde_rep,
)
from .cohomology import (
    Cochain,
    CohomologyReport,
    RBCochain,
    RBCochain1,
    ader_basis,
    cohomology_rb,
    d_n,
    d_rb,
    delta_n,
    delta_rb,
    inner_antiderivation,
    innader_basis,
    is_antiderivation,
)

__version__ = "0.1.0"
