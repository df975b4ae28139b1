"""Exact Sister Celine-type polynomials and angular-momentum coefficients."""
from .exact import (
    CelineError,
    DomainError,
    HalfInt,
    NonTerminatingError,
    PoleError,
    SqrtRational,
    UnsupportedRegimeError,
)

__all__ = [
    "CelineError",
    "DomainError",
    "HalfInt",
    "NonTerminatingError",
    "PoleError",
    "SqrtRational",
    "UnsupportedRegimeError",
]
__version__ = "0.1.0"
