"""wittcert: an exact engine for quadratic-form theory over Q and its
multiquadratic extensions.

Square classes, Hilbert symbols (including bounded Hensel searches in dyadic
completions of degree up to 4), Hasse-Minkowski isotropy, Witt decomposition,
Pfister forms, quaternionic symplectic involution algebras, and searchable,
independently verifiable hyperbolicity/norm certificates for their
similarity-factor groups.
"""

from .arith import DomainError, Rat, padic_valuation, prime_support, squarefree_rep
from .localfields import (
    REAL,
    EngineContext,
    LocalField,
    LocalFormClass,
    Place,
    default_context,
    dyadic_square_test,
    hilbert_symbol,
    local_aniso_dim,
    local_square_class,
    rationals_at,
)
from .forms import (
    ARASON_PFISTER_CHECK,
    HYPERBOLIC_PLANE,
    InvariantViolation,
    QForm,
    WittClassQ,
    ap_violation_count,
    disc,
    hasse_invariant,
    in_G,
    in_In,
    is_hyperbolic,
    is_isometric,
    is_isotropic,
    isotropy_obstruction,
    orth_sum,
    pfister,
    pfister_slots,
    qform,
    represents,
    scale,
    signature,
    tensor,
    witt_decompose,
    witt_equivalent,
    witt_index,
)
from .extensions import (
    ExtensionTower,
    PlaceEvidence,
    PlaceFiber,
    TRIVIAL_TOWER,
    aniso_dim_over,
    hyperbolicity_evidence,
    is_hyperbolic_over,
    make_tower,
    norm_member,
    norm_member_tower,
    places_over,
    witt_index_over,
)
from .involutions import (
    InvolutionAlgebra,
    QuaternionAlg,
    degree_index,
    involution_discriminant,
    is_split,
    norm_form,
    quaternion,
    reduce_to_form,
)
from .similitude import (
    DEFAULT_BOUND,
    HypCertificate,
    MultiplierResult,
    PfisterDecomposition,
    PipelineReport,
    SearchExhausted,
    lemma24_certificate,
    lemma_beta_search,
    prop_index_check,
    thm4_decompose,
    thm6_pipeline,
    verify_certificate,
)

__version__ = "0.1.0"
