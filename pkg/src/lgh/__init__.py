"""Numerical verification of harmonic-morphism identities on the classical
matrix Lie groups.

The library computes the tension field tau and the conformality operator
kappa of polynomial and rational functions of matrix entries through exact
second-order jets along one-parameter subgroups, constructs eigenfamilies
on SO(n), U(n)/SU(n) and Sp(n) together with their rational harmonic
morphisms, and carries every family across the compact/non-compact duality
with sign-flipped constants.  All checks run on seeded random group samples
and emit machine-readable residual reports.
"""

from .duality import (
    DualPair,
    continue_function,
    default_compact_family,
    dual_pair,
    identity_pair,
    probe_noncontinuable,
    sample_noncompact,
    verify_dual_eigenfamily,
)
from .errors import (
    ConfigError,
    ConstructionError,
    DegeneracyError,
    DomainError,
    InconclusiveError,
    ValidationError,
)
from .exprs import (
    Const,
    Entry,
    Expr,
    HomPoly,
    LinearTrace,
    Power,
    Product,
    Quotient,
    Sum,
    expr_from_dict,
    scale_action_check,
    w_entry,
    z_entry,
)
from .families import (
    Eigenfamily,
    eigen_constants,
    maximal_isotropic_basis,
    measure_constants_residual,
    so4_deformation,
    so_family_V,
    so_family_special,
    sp_family,
    su_family,
    u_family,
    verify_coordinate_lemmas,
    verify_eigenfamily,
)
from .harness import RunConfig, run_suite
from .jets import (
    BasisCurves,
    CurvePoint,
    Jet2,
    entry_jet,
    jet_add,
    jet_div,
    jet_mul,
    jet_scale,
    kappa,
    tau,
)
from .matrices import (
    SO,
    SU,
    Sp,
    U,
    GroupId,
    SignedBasis,
    SignedBasisVector,
    compact_basis,
    generator,
    glc_split_basis,
    gram_schmidt_indefinite,
    hermitian_form,
    quaternion_embed,
    signature_matrix,
    sl_r,
    so_pq,
    so_star,
    sp_pq,
    sp_r,
    su_pq,
    su_star,
    symplectic_matrix,
    trace_form,
    verify_matrix_identities,
)
from .morphisms import (
    PowerFamily,
    RationalMorphism,
    compose_orthogonal,
    mobius_transform,
    orthogonal_family,
    power_constants,
    power_family,
    quotient_morphism,
    random_morphism,
    verify_harmonic_morphism,
    verify_quotient_condition,
)
from .report import VerificationReport
from .sampling import SampleSet, SplitMix64, sample_compact

__version__ = "0.1.0"
