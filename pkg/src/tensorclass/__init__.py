"""Eigenpair-based classification of 2-dimensional symmetric tensors.

Binary cubics and quartics (equivalently 2x2x2 and 2x2x2x2 symmetric
tensors) are classified up to complex and real linear changes of variables,
and the same machinery classifies principal parts of third and fourth order
linear PDEs in two variables.
"""

__version__ = "0.1.0"

from .algebra import (
    BinaryForm,
    SymmetricTensor2,
    Transform2,
    form_to_tensor,
    random_transform,
    tensor_to_form,
    transform,
    transform_coeffs_closed,
)
from .classify import (
    ClassificationReport,
    ComplexType,
    RealType,
    canonical_form,
    classify,
    classify_complex_cubic,
    classify_complex_quartic,
    classify_real_cubic,
    classify_real_quartic,
)
from .errors import AmbiguityError, InputError, TensorClassError
from .pde import PdePrincipal, PdeReport, classify_pde, parse_pde, pde_to_form, render_pde, transform_pde
from .roots import ProjectivePoint, discriminant, projective_roots, root_pattern, roots_complex
from .scalars import GaussianRational
from .spectra import (
    INFINITE,
    EigenpairClass,
    SpectralSignature,
    class_equivalent,
    eigenpairs,
    eigenvector_equation,
    signature,
)
from .tolerances import Tolerances

__all__ = [
    "AmbiguityError",
    "BinaryForm",
    "ClassificationReport",
    "ComplexType",
    "EigenpairClass",
    "GaussianRational",
    "INFINITE",
    "InputError",
    "PdePrincipal",
    "PdeReport",
    "ProjectivePoint",
    "RealType",
    "SpectralSignature",
    "SymmetricTensor2",
    "TensorClassError",
    "Tolerances",
    "Transform2",
    "canonical_form",
    "class_equivalent",
    "classify",
    "classify_complex_cubic",
    "classify_complex_quartic",
    "classify_pde",
    "classify_real_cubic",
    "classify_real_quartic",
    "discriminant",
    "eigenpairs",
    "eigenvector_equation",
    "form_to_tensor",
    "parse_pde",
    "pde_to_form",
    "projective_roots",
    "random_transform",
    "render_pde",
    "root_pattern",
    "roots_complex",
    "signature",
    "tensor_to_form",
    "transform",
    "transform_coeffs_closed",
    "transform_pde",
]
