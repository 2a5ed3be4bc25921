"""Exact-arithmetic toolkit for lattice witnesses of divisor intersections.

The package constructs and independently certifies positive definite
saturated sublattices of the middle cohomology lattice of a cubic fourfold
(E8 + E8 + U + U + I3) that contain the square of the hyperplane class.  Such
witnesses prove that prescribed Hassett (Noether-Lefschetz) divisors of the
moduli space of smooth cubic fourfolds intersect.  All arithmetic is exact:
arbitrary-precision integers and rationals, no floating point.
"""

from ._version import __version__
from .linalg import (
    IntMatrix,
    determinant,
    hermite_normal_form,
    inertia,
    invariant_factors,
    is_positive_definite,
    quadratic_form,
    rational_inverse,
    smith_normal_form,
    solve_integer,
)
from .lattice import (
    A1,
    A2,
    AMBIENT,
    AMBIENT_GRAM,
    A2Embedding,
    AmbientVector,
    DEFAULT_A2,
    E8_GRAM,
    H_SQUARED,
    Labelling,
    Sublattice,
    U_GRAM,
    contains,
    e_vec,
    gram_of,
    i3_unit,
    i3_vector,
    inner_product,
    is_saturated,
    minimum,
    norm,
    saturation_in,
    short_vectors,
    t_vec,
)
from .criteria import (
    CriterionReport,
    DiscriminantReport,
    certify_nonempty,
    conjecture_shape,
    conjecture_sweep,
    discriminant_report,
    factorize,
    has_associated_k3,
    satisfies_double_star,
    satisfies_star,
)
from .constructions import (
    CaseId,
    Mode,
    RealizationOutcome,
    RealizationStatus,
    Recipe,
    SLOT_POOL,
    SlotSpec,
    build,
    build_generic,
    candidate_perturbations,
    case_slots,
    form_value,
    generic_slots,
    ideal_gram,
    identity_pair,
    realize_perturbations,
    recipe,
    reference_gram,
    squares_value,
)
from .verifier import (
    COROLLARY_DISCRIMINANTS,
    Certificate,
    CertificateError,
    LabellingCheck,
    WitnessReport,
    certificate_for,
    check_identity,
    oracle_short_vectors,
    verify_corollary20,
    verify_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
