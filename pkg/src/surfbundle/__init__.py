"""Homology-level pseudo-Anosov extensions of surface bundle monodromies."""
__version__ = "0.1.0"

from .errors import DimensionError, DomainError, SpecError
from .extension import (
    ExtensionCertificate,
    ExtensionResult,
    PinchMap,
    build_extension,
    delta_general_block,
    delta_one_block,
    pinch_homology_map,
    verify_extension,
)
from .homology import BundleHomology, betti_one, integral_h1
from .linalg import IntMatrix, SmithForm, characteristic_polynomial, determinant, rational_rank, smith_normal_form
from .mapping_class import (
    MappingClass,
    PACertificate,
    TwistLetter,
    Verdict,
    certify_pseudo_anosov,
    compose,
    from_twist_word,
    is_symplectic,
    minus_identity_word,
    transvection_matrix,
)
from .polynomial import IntPolynomial
from .surface import (
    BasisSplit,
    CurveClass,
    Surface,
    intersection_number,
    handle_curve_family,
    standard_symplectic_form,
)
