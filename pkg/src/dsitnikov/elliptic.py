"""Elliptic integrals and Jacobi elliptic functions.

Conventions used throughout the package:

* every routine takes the modulus k, never the parameter m = k**2;
* incomplete integrals are parameterized by the Jacobi argument u, i.e.
  they integrate Jacobi-function integrands from 0 to u (not amplitude
  angles); the derivative identities in the test suite pin this down.

Complete K and E use the arithmetic-geometric mean; third-kind integrals
and the incomplete forms reduce to Carlson symmetric integrals.
"""

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from . import _kernels as _k
from ._errors import DomainError

__all__ = [
    "Modulus",
    "JacobiTriple",
    "complete_K",
    "complete_E",
    "complete_Pi",
    "jacobi",
    "jacobi_epsilon",
    "incomplete_Pi",
]


@dataclass(frozen=True)
class Modulus:
    """Elliptic modulus k with its parameter m = k**2."""

    k: float
    m: float = field(init=False)

    def __post_init__(self):
        k = float(self.k)
        if not 0.0 <= k < 1.0:
            raise DomainError(f"modulus k={k!r} outside [0, 1)")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "m", k * k)


class JacobiTriple(NamedTuple):
    sn: float
    cn: float
    dn: float


def _as_k(k) -> float:
    return float(k.k) if isinstance(k, Modulus) else float(k)


def complete_K(k) -> float:
    """Complete elliptic integral of the first kind K(k)."""
    k = _as_k(k)
    if not 0.0 <= k < 1.0:
        raise DomainError(f"complete_K: modulus k={k!r} outside [0, 1)")
    return _k.agm_ke(k)[0]


def complete_E(k) -> float:
    """Complete elliptic integral of the second kind E(k)."""
    k = _as_k(k)
    if not 0.0 <= k <= 1.0:
        raise DomainError(f"complete_E: modulus k={k!r} outside [0, 1]")
    if k == 1.0:
        return 1.0
    return _k.agm_ke(k)[1]


def complete_Pi(n, k) -> float:
    """Complete elliptic integral of the third kind Pi(n, k)."""
    n = float(n)
    k = _as_k(k)
    if not 0.0 <= k < 1.0:
        raise DomainError(f"complete_Pi: modulus k={k!r} outside [0, 1)")
    if n >= 1.0:
        raise DomainError(f"complete_Pi: characteristic n={n!r} must be < 1")
    return _k.complete_pi(n, k)


def jacobi(u, k) -> JacobiTriple:
    """Jacobi elliptic functions (sn, cn, dn) at argument u."""
    u = float(u)
    k = _as_k(k)
    if not 0.0 <= k < 1.0:
        raise DomainError(f"jacobi: modulus k={k!r} outside [0, 1)")
    if not math.isfinite(u):
        raise DomainError(f"jacobi: argument u={u!r} is not finite")
    return JacobiTriple(*_k.jacobi_sncndn(u, k))


def jacobi_epsilon(u, k) -> float:
    """Jacobi epsilon function: integral of dn(w, k)**2 for w from 0 to u.

    Quasi-periodic: jacobi_epsilon(u + 2K) = jacobi_epsilon(u) + 2E.
    """
    u = float(u)
    k = _as_k(k)
    if not 0.0 <= k < 1.0:
        raise DomainError(f"jacobi_epsilon: modulus k={k!r} outside [0, 1)")
    if not math.isfinite(u):
        raise DomainError(f"jacobi_epsilon: argument u={u!r} is not finite")
    kk, ee = _k.agm_ke(k)
    return _k.epsilon_inc(u, k, kk, ee)


def incomplete_Pi(n, u, k) -> float:
    """Incomplete third kind along the Jacobi argument.

    Pi(n; u, k) = integral of 1/(1 - n sn(w, k)**2) for w from 0 to u;
    Pi(0; u, k) = u, and at u = K(k) the complete integral is recovered.
    """
    n = float(n)
    u = float(u)
    k = _as_k(k)
    if not 0.0 <= k < 1.0:
        raise DomainError(f"incomplete_Pi: modulus k={k!r} outside [0, 1)")
    if n >= 1.0:
        raise DomainError(f"incomplete_Pi: characteristic n={n!r} must be < 1")
    if not math.isfinite(u):
        raise DomainError(f"incomplete_Pi: argument u={u!r} is not finite")
    kk, _ = _k.agm_ke(k)
    pic = _k.complete_pi(n, k) if n != 0.0 else 0.0
    return _k.pi_inc(n, u, k, kk, pic)
