"""Special functions, quadrature and a registry of verified integral identities."""

from .identities import IdentitySpec, VerificationRecord, get, registry, sweep, verify
from .quadrature import Integrand, QuadratureResult, integrate, integrate_finite, integrate_semi_infinite

__all__ = [
    "IdentitySpec",
    "Integrand",
    "QuadratureResult",
    "VerificationRecord",
    "get",
    "integrate",
    "integrate_finite",
    "integrate_semi_infinite",
    "registry",
    "sweep",
    "verify",
]
