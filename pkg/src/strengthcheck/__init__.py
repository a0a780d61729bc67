"""Generic strength versus slice rank of forms: dimension formulas for
joins of varieties of reducible forms, exhaustive checks of the
inequalities that make the all-linear-factor join the largest, and a
finite-field Terracini oracle."""

from .errors import BoundViolation, InvariantViolation, PreconditionError, UnsupportedDegreeError
from .formulas import (
    AbcdeRecord,
    JoinProfile,
    abcde,
    ci_dimension,
    f_value,
    generic_slice_rank,
    hl_codim,
    join_dim_upper_bound,
    sigma_r_x1_codim,
)
from .oracle import (
    DimensionReport,
    cross_check,
    ideal_degree_dim,
    regular_sequence_check,
    sample_form,
    terracini_join_dim,
)
from .series import (
    TruncatedSeries,
    binomial,
    ci_quotient_series,
    geometric,
    inclusion_exclusion_coeff,
    mul,
    p_k,
)
from .verifier import (
    VerificationReport,
    verify_chain,
    verify_edcba,
    verify_identity_lemma,
    verify_minimality,
    verify_theta_inequality,
    verify_theta_reduction,
)

__version__ = "0.1.0"
