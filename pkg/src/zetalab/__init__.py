"""zetalab: a verification toolkit for hypercube integral
representations of odd zeta values.

Exact closed forms (rational + zeta-value linear forms) are checked
against independent series oracles and tanh-sinh quadrature; a
desk-scale reconstruction of the classical zeta(3) irrationality
pipeline exercises the same machinery end to end.
"""
from .errors import (
    BoundaryError,
    DomainError,
    IntegrityError,
    QuadratureConvergenceError,
    UnsupportedDimensionError,
)
from .forms import BigRational, ZetaLinearForm, form_add, form_eval
from .precision import FLOAT_CTX, PrecisionContext

__version__ = "1.0.0"

__all__ = [
    "BigRational",
    "BoundaryError",
    "DomainError",
    "FLOAT_CTX",
    "IntegrityError",
    "PrecisionContext",
    "QuadratureConvergenceError",
    "UnsupportedDimensionError",
    "ZetaLinearForm",
    "form_add",
    "form_eval",
    "__version__",
]
