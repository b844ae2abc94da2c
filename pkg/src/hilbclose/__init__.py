"""Exact Hilbert-Samuel coefficients of closure filtrations for monomial
ideals in affine semigroup rings."""

from .closures import (
    FrobeniusContext,
    LimitClosureCertificate,
    ParameterSplit,
    compositions,
    frobenius_power,
    integral_closure,
    integral_closure_power,
    lim_intersection,
    limit_closure,
    parameter_splits,
    tight_closure_candidate,
)
from .errors import (
    DimensionMismatchError,
    GenerationExhaustedError,
    HilbcloseError,
    NonIntegralCoefficientError,
    NotMPrimaryError,
    NotStabilizedError,
    RingMismatchError,
    UncertifiedError,
    UnsupportedRingError,
)
from .hilbert import (
    CoefficientBundle,
    Filtration,
    FiltrationKind,
    HilbertReport,
    coefficient_report,
    fit_polynomial,
    length_sequence,
    multiplicity_volume,
)
from .ideals import (
    MonomialIdeal,
    ParameterIdeal,
    ideal_colon,
    ideal_colon_ideal,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_parameter_ideal,
    maximal_ideal,
    nu_m_mod_q,
)
from .lattice import (
    AffineSemigroup,
    ExponentVector,
    RationalPolyhedron,
    newton_polyhedron,
    saturation,
    semigroup_membership,
)
from .theorems import (
    ChainVerdict,
    RingProfile,
    check_claim_bound,
    check_e1_zero_implies_cm,
    check_nonnegativity_chain,
    check_vanishing,
    fuzz_corpus,
    ring_profile,
    verify_instances,
)

__version__ = "0.1.0"
