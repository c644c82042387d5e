"""Exact local invariants of complete intersection singularities.

Pure-rational computations at a singular point of a polynomial map: the
two-step tangent complex fiber and its Hessian bracket, Chevalley-Eilenberg
cohomology of the resulting two-step Lie algebra, minimal graded free
resolutions over complete intersection quotients with their degree-2
cohomology operators and finite-generation window checks, nilpotent
thickening towers, and minimization of semifree differential graded modules.
Everything runs over ``fractions.Fraction``; results are exact and
deterministic.
"""

from .chevalley import (
    ChevalleyComplex,
    GradedDims,
    ce_cohomology,
    chevalley_cochain,
    extract_bracket,
)
from .ciext import (
    CoherenceReport,
    DGModule,
    ExtModule,
    FG_CERTIFIED,
    FG_NOT,
    FG_WINDOW,
    FGVerdict,
    FreeResolution,
    GradedModulePresentation,
    MinimizeResult,
    coherence_report,
    cyclic_module,
    default_window,
    eisenbud_ops,
    ext_module,
    fg_check,
    free_module,
    hstar_dims,
    minimal_generators,
    minimal_resolution,
    minimize_dg,
    new_generator_counts,
    residue_field_module,
)
from .errors import (
    CisingError,
    CommutativityError,
    ExactnessError,
    GradingError,
    NotRegularSequenceError,
    OffLocusError,
    ParseError,
    ReduceVariablesError,
    ResourceLimitError,
    ValidationError,
)
from .exactq import (
    IncrementalSpan,
    Mat,
    SubquotientMap,
    cokernel_presentation,
    kernel_basis,
    rank,
    rref,
    snake_boundary,
    solve,
)
from .polyring import (
    GroebnerBasis,
    Poly,
    PolyRing,
    RingPresentation,
    buchberger,
    hilbert_function,
    is_regular_sequence,
    is_square_zero,
    normal_form_with_cofactors,
    square_zero_filtration,
    tower_ring,
)
from .syzygies import (
    ModuleGroebnerBasis,
    module_buchberger,
    module_member,
    module_normal_form,
    module_normal_form_with_cofactors,
    syzygies,
)
from .tangentlie import (
    TangentComplexFiber,
    TangentLieAlgebra,
    hessian_direct,
    hessian_snake,
    jacobian_at,
    tangent_fiber,
    tangent_lie,
)

__all__ = [
    "CisingError",
    "CommutativityError",
    "ExactnessError",
    "GradingError",
    "NotRegularSequenceError",
    "OffLocusError",
    "ParseError",
    "ReduceVariablesError",
    "ResourceLimitError",
    "ValidationError",
    "IncrementalSpan",
    "Mat",
    "SubquotientMap",
    "cokernel_presentation",
    "kernel_basis",
    "rank",
    "rref",
    "snake_boundary",
    "solve",
    "GroebnerBasis",
    "Poly",
    "PolyRing",
    "RingPresentation",
    "buchberger",
    "hilbert_function",
    "is_regular_sequence",
    "is_square_zero",
    "normal_form_with_cofactors",
    "square_zero_filtration",
    "tower_ring",
    "TangentComplexFiber",
    "TangentLieAlgebra",
    "hessian_direct",
    "hessian_snake",
    "jacobian_at",
    "tangent_fiber",
    "tangent_lie",
    "ChevalleyComplex",
    "GradedDims",
    "ce_cohomology",
    "chevalley_cochain",
    "extract_bracket",
    "ModuleGroebnerBasis",
    "module_buchberger",
    "module_member",
    "module_normal_form",
    "module_normal_form_with_cofactors",
    "syzygies",
    "CoherenceReport",
    "DGModule",
    "ExtModule",
    "FG_CERTIFIED",
    "FG_NOT",
    "FG_WINDOW",
    "FGVerdict",
    "FreeResolution",
    "GradedModulePresentation",
    "MinimizeResult",
    "coherence_report",
    "cyclic_module",
    "default_window",
    "eisenbud_ops",
    "ext_module",
    "fg_check",
    "free_module",
    "hstar_dims",
    "minimal_generators",
    "minimal_resolution",
    "minimize_dg",
    "new_generator_counts",
    "residue_field_module",
]
