"""Closed-form solutions of the equal-mass limit flow.

One secondary with partial energy h in (-2, 0) oscillates with modulus
k = sqrt(2 + h)/2 and

    q(nu) = k sn dn / (1 - 2 k**2 sn**2),   p(nu) = 2 sqrt(2) k cn,

where physical time follows from dt/dnu = sqrt(2)/(4 (1 - 2k**2 sn**2)**2).
Integrating once gives the time function

    t(nu) = sqrt(2)/(8(1-2k**2)) [2 eps(nu) - nu + Pi(2k**2; nu)
            - 4 k**2 sn cn dn/(1 - 2k**2 sn**2)] + C,

with eps and Pi taken along the Jacobi argument (the derivative property in
the test suite pins this convention). The period is T = sqrt(2)
(2E - K + Pi(2k**2, k)) / (2 (1 - 2k**2)), with harmonic limit pi/sqrt(2),
and the action is J = sqrt(2)/pi (K - 2E + Pi(2k**2, k)), normalized so that
J equals the loop integral of p dq over 2 pi and dJ/dh = T/(2 pi).
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as _k
from ._errors import ConvergenceError, DomainError
from .dynamics import PhysicalState

__all__ = [
    "EnergyModulus",
    "ActionAngle",
    "SingleOrbit",
    "T_MIN",
    "modulus_from_energy",
    "period_T",
    "action_J",
    "omega",
    "make_orbit",
    "time_of_nu",
    "nu_of_time",
    "eval_state",
    "eval_state_array",
    "eval_double_state",
    "action_angle",
]

_SQRT2 = math.sqrt(2.0)

# infimum of the period: the linearized oscillation of V(q) = -1/sqrt(q**2+1/4)
T_MIN = math.pi / _SQRT2


@dataclass(frozen=True)
class EnergyModulus:
    """Partial energy h paired with its modulus k = sqrt(2 + h)/2.

    Bounded oscillation requires h in (-2, 0); h = -2 is the rest
    equilibrium (k = 0) and is admitted only where explicitly stated.
    """

    h: float
    k: float = field(init=False)

    def __post_init__(self):
        h = float(self.h)
        if not -2.0 <= h < 0.0:
            raise DomainError(f"partial energy h={h!r} outside [-2, 0)")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "k", math.sqrt(2.0 + h) / 2.0)


@dataclass(frozen=True)
class ActionAngle:
    """Action J, time-per-angle Omega = T/(2 pi), and angle offset theta0."""

    J: float
    Omega: float
    theta0: float


def modulus_from_energy(h: float) -> EnergyModulus:
    """Pair a partial energy h in [-2, 0) with its modulus."""
    return EnergyModulus(float(h))


def _as_em(x, allow_rest: bool) -> EnergyModulus:
    em = x if isinstance(x, EnergyModulus) else EnergyModulus(float(x))
    if not allow_rest and em.h == -2.0:
        raise DomainError("h = -2 is the degenerate rest orbit")
    return em


def _complete_triple(k: float):
    kk, ee = _k.agm_ke(k)
    pic = _k.complete_pi(2.0 * k * k, k)
    return kk, ee, pic


def period_T(em) -> float:
    """Oscillation period T(h); strictly increasing, T -> pi/sqrt(2) as h -> -2."""
    em = _as_em(em, allow_rest=False)
    k = em.k
    kk, ee, pic = _complete_triple(k)
    return _SQRT2 * (2.0 * ee - kk + pic) / (2.0 * (1.0 - 2.0 * k * k))


def action_J(em) -> float:
    """Action variable J(h) = sqrt(2)/pi (K - 2E + Pi(2k**2, k)).

    Normalized as the loop integral of p dq over 2 pi, so J(-2) = 0, J is
    strictly increasing, and dJ/dh = T(h)/(2 pi).
    """
    em = _as_em(em, allow_rest=True)
    if em.h == -2.0:
        return 0.0
    k = em.k
    kk, ee, pic = _complete_triple(k)
    return _SQRT2 / math.pi * (kk - 2.0 * ee + pic)


def omega(em) -> float:
    """Time advanced per unit angle: Omega(h) = T(h)/(2 pi)."""
    return period_T(em) / (2.0 * math.pi)


@dataclass(frozen=True)
class SingleOrbit:
    """A closed-form orbit, fixed by (h, nu0) with t(nu0) = 0.

    C is the integration constant of the time function; the complete
    integrals and the period are cached on construction.
    """

    em: EnergyModulus
    nu0: float = 0.0
    C: float = field(init=False)
    _K: float = field(init=False, repr=False)
    _E: float = field(init=False, repr=False)
    _Pic: float = field(init=False, repr=False)
    _T: float = field(init=False, repr=False)
    _raw0: float = field(init=False, repr=False)

    def __post_init__(self):
        em = _as_em(self.em, allow_rest=False)
        object.__setattr__(self, "em", em)
        object.__setattr__(self, "nu0", float(self.nu0))
        k = em.k
        kk, ee, pic = _complete_triple(k)
        raw0 = _k.time_raw(self.nu0, k, kk, ee, pic)
        object.__setattr__(self, "_K", kk)
        object.__setattr__(self, "_E", ee)
        object.__setattr__(self, "_Pic", pic)
        object.__setattr__(self, "_T",
                           _SQRT2 * (2.0 * ee - kk + pic) / (2.0 * (1.0 - 2.0 * k * k)))
        object.__setattr__(self, "_raw0", raw0)
        object.__setattr__(self, "C", -raw0)

    @property
    def period(self) -> float:
        return self._T


def make_orbit(h: float, nu0: float = 0.0) -> SingleOrbit:
    """Orbit of partial energy h in (-2, 0) with phase nu0 at t = 0."""
    return SingleOrbit(EnergyModulus(float(h)), float(nu0))


def time_of_nu(nu: float, orbit: SingleOrbit) -> float:
    """Physical time at Jacobi argument nu; strictly increasing, t(nu0) = 0."""
    k = orbit.em.k
    return _k.time_raw(float(nu), k, orbit._K, orbit._E, orbit._Pic) + orbit.C


def nu_of_time(t: float, orbit: SingleOrbit) -> float:
    """The unique nu with time_of_nu(nu) = t.

    t is reduced modulo the period, the base argument is found by bracketed
    Newton iteration on one 4K period, and the whole cycles are added back,
    making nu(t) a strictly increasing bijection.
    """
    t = float(t)
    k = orbit.em.k
    period = orbit._T
    ncyc = math.floor(t / period)
    tr = t - ncyc * period
    four_k = 4.0 * orbit._K
    guess = orbit.nu0 + tr / period * four_k
    nu_r, ok = _k.invert_time(tr, k, orbit.nu0, orbit._raw0,
                              orbit._K, orbit._E, orbit._Pic, guess)
    if not ok:
        raise ConvergenceError(f"time inversion did not converge at t={t!r}")
    nu = nu_r + ncyc * four_k
    resid = abs(time_of_nu(nu, orbit) - t)
    if resid > 1e-12 * max(1.0, abs(t)):
        raise ConvergenceError(
            f"time inversion residual {resid:.3e} exceeds tolerance at t={t!r}")
    return nu


def _qp_of_nu(nu: float, orbit: SingleOrbit):
    k = orbit.em.k
    sn, cn, dn = _k.jacobi_sncndn(nu, k)
    w = 1.0 - 2.0 * k * k * sn * sn
    return k * sn * dn / w, 2.0 * _SQRT2 * k * cn


def eval_state(t: float, orbit: SingleOrbit) -> tuple:
    """(q, p) of the orbit at time t."""
    return _qp_of_nu(nu_of_time(t, orbit), orbit)


def eval_state_array(ts, orbit: SingleOrbit) -> tuple:
    """(q, p) arrays of the orbit on an array of times."""
    ts = np.ascontiguousarray(ts, dtype=np.float64)
    qs, ps, _, ok = _k.orbit_eval(ts, orbit.em.k, orbit.nu0, orbit._raw0,
                                  orbit._K, orbit._E, orbit._Pic, orbit._T)
    if not ok:
        raise ConvergenceError("time inversion did not converge on the time grid")
    return qs, ps


def eval_double_state(t: float, orbit3: SingleOrbit, orbit4: SingleOrbit) -> PhysicalState:
    """Assemble (q3, q4, p3, p4) from two independent closed-form orbits."""
    q3, p3 = eval_state(t, orbit3)
    q4, p4 = eval_state(t, orbit4)
    return PhysicalState(q3, q4, p3, p4)


def action_angle(orbit: SingleOrbit) -> ActionAngle:
    """Action-angle data of an orbit: theta(t) = t/Omega + theta0 (mod 2 pi),
    with theta = 0 at the ascending q = 0 crossing (nu = 0)."""
    om = orbit._T / (2.0 * math.pi)
    theta0 = -time_of_nu(0.0, orbit) / om
    return ActionAngle(action_J(orbit.em), om, theta0)
