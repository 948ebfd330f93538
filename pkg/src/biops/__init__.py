"""Exact bi-orthogonal-polynomial machinery for the two-parameter
open-boundary TASEP matrix product ansatz."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .errors import (BiopsError, InexactDivision, DegenerateParameters,
                     TruncationTooSmall, SingularSystem, ParseError)
from .ring import Poly2, KappaElem, poly_add, poly_mul, poly_exact_div, \
    kappa_mul, poly_eval
from .tensor import (TensorElem, ShockElem, normal_order, shock_mul,
                     linear_form, power_sum)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND", "__version__",
    "BiopsError", "InexactDivision", "DegenerateParameters",
    "TruncationTooSmall", "SingularSystem", "ParseError",
    "Poly2", "KappaElem", "poly_add", "poly_mul", "poly_exact_div",
    "kappa_mul", "poly_eval",
    "TensorElem", "ShockElem", "normal_order", "shock_mul",
    "linear_form", "power_sum",
]
