"""Matrix product state families as states on the infinite spin chain.

Build a family of site tensors, check that it satisfies the normalization and
neighbour-consistency conditions, then evaluate the resulting state on local
observables either from the explicit statevector or by transfer matrices.
"""

from .conditions import (
    ConditionReport,
    check_consistency,
    check_normalization,
    normalization_sums,
    trace_identity_sides,
    verify_trace_identity,
)
from .errors import (
    DimensionError,
    FormatError,
    QlmpsError,
    ResourceError,
    SiteRangeError,
    UnsupportedFormError,
    ValidationError,
)
from .linalg import chain_product, dagger, hermitian_eigenvalues, kron, partial_trace_last, trace
from .models import (
    ProjectorFamilySpec,
    collapsing_family,
    ghz_expectation_closed_form,
    ghz_family,
    projector_family,
)
from .mps import DEFAULT_CAP, MPSFamily, amplitude, build_statevector, norm_squared, site
from .state import (
    DensityMatrix,
    EvaluationReport,
    LocalObservable,
    check_projectivity,
    evaluate_naive,
    evaluate_transfer,
    reduced_density_matrix,
    von_neumann_entropy,
)

__version__ = "0.1.0"
