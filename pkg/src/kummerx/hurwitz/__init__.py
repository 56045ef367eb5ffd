"""
Hurwitz zeta function and its s-derivatives with certified error bounds.
"""

from .euler_maclaurin import (
    HurwitzKernel,
    bernoulli_coefficients,
    hurwitz_zeta_derivs,
    hurwitz_zeta_regular_derivs,
)
from .models import EulerMaclaurinParameters

__all__ = [
    "EulerMaclaurinParameters",
    "HurwitzKernel",
    "bernoulli_coefficients",
    "hurwitz_zeta_derivs",
    "hurwitz_zeta_regular_derivs",
]
