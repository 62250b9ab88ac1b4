"""Hamiltonian-systems layer for the two secondaries on the vertical axis.

Contains the weighted two-parameter Hamiltonian with mass matrix
diag(alpha, beta) and coupling mu, its equal-mass limit, the canonical
collision chart (Q, P) generated by
W(Q, p) = p3 (Q4 + beta Q3**2 / 2) + p4 (Q4 - alpha Q3**2 / 2),
the regularized Hamiltonian L on its zero level with fictitious time
dt/dtau = alpha beta Q3**2, splitting integrators, and the elastic-bounce
extension of the equal-mass limit flow through q3 = q4.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp

from . import _kernels as _k
from ._errors import (
    CollisionApproachError,
    ConvergenceError,
    DomainError,
    LevelSetError,
    SingularityError,
)

__all__ = [
    "EQUAL_MASS_LIMIT",
    "PhysicalState",
    "MassParams",
    "RegularizedState",
    "Trajectory",
    "BounceTrajectory",
    "RegularizedTrajectory",
    "hamiltonian_full",
    "hamiltonian_limit",
    "partial_energies",
    "vector_field",
    "rho_map",
    "rho_inverse",
    "regularized_L",
    "regularized_initial",
    "integrate_physical",
    "integrate_regularized",
    "extend_with_bounce",
]


@dataclass(frozen=True)
class PhysicalState:
    """Phase point (q3, q4, p3, p4) of the two secondaries (dimensionless)."""

    q3: float
    q4: float
    p3: float
    p4: float

    def as_array(self) -> np.ndarray:
        return np.array([self.q3, self.q4, self.p3, self.p4])

    @classmethod
    def from_array(cls, y) -> "PhysicalState":
        return cls(float(y[0]), float(y[1]), float(y[2]), float(y[3]))


@dataclass(frozen=True)
class MassParams:
    """Normalized masses alpha = 1/(1+c), beta = 1 - alpha and coupling mu.

    c in (0, 1] is the secondary mass ratio; the elastic-bounce extension
    requires c = 1 (alpha = beta = 1/2).
    """

    alpha: float
    beta: float
    mu: float
    c: float

    def __post_init__(self):
        c = float(self.c)
        if not 0.0 < c <= 1.0:
            raise DomainError(f"mass ratio c={c!r} outside (0, 1]")
        mu = float(self.mu)
        if mu < 0.0:
            raise DomainError(f"coupling mu={mu!r} must be >= 0")
        alpha = float(self.alpha)
        beta = float(self.beta)
        if abs(alpha - 1.0 / (1.0 + c)) > 1e-12 or abs(beta - (1.0 - alpha)) > 1e-12:
            raise DomainError("inconsistent mass parameters: need alpha = 1/(1+c), beta = 1-alpha")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "c", c)

    @classmethod
    def from_c(cls, c: float, mu: float = 0.0) -> "MassParams":
        alpha = 1.0 / (1.0 + c)
        return cls(alpha, 1.0 - alpha, mu, c)

    @classmethod
    def from_alpha(cls, alpha: float, mu: float = 0.0) -> "MassParams":
        if not 0.0 < alpha < 1.0:
            raise DomainError(f"alpha={alpha!r} outside (0, 1)")
        c = (1.0 - alpha) / alpha
        return cls(alpha, 1.0 - alpha, mu, c)

    @property
    def equal_masses(self) -> bool:
        return self.c == 1.0


EQUAL_MASS_LIMIT = MassParams.from_c(1.0, 0.0)


@dataclass(frozen=True)
class RegularizedState:
    """Point (Q3, Q4, P3, P4) of the collision chart, with fictitious time
    tau and reconstructed physical time t carried alongside."""

    Q3: float
    Q4: float
    P3: float
    P4: float
    tau: float = 0.0
    t: float = 0.0

    def as_array(self) -> np.ndarray:
        return np.array([self.Q3, self.Q4, self.P3, self.P4])


@dataclass(frozen=True)
class Trajectory:
    """States sampled at uniform times; columns of `states` are q3, q4, p3, p4."""

    t: np.ndarray
    states: np.ndarray

    @property
    def q3(self) -> np.ndarray:
        return self.states[:, 0]

    @property
    def q4(self) -> np.ndarray:
        return self.states[:, 1]

    @property
    def p3(self) -> np.ndarray:
        return self.states[:, 2]

    @property
    def p4(self) -> np.ndarray:
        return self.states[:, 3]

    def state(self, i: int) -> PhysicalState:
        return PhysicalState.from_array(self.states[i])


@dataclass(frozen=True)
class BounceTrajectory(Trajectory):
    """Limit-flow trajectory plus the ordered elastic-bounce events.

    `bounce_states` holds the localized pre-swap states (q3, q4, p3, p4)
    at each event; the post-bounce state is the same with p3 and p4
    exchanged.
    """

    bounce_times: np.ndarray = field(default_factory=lambda: np.empty(0))
    bounce_positions: np.ndarray = field(default_factory=lambda: np.empty(0))
    bounce_states: np.ndarray = field(default_factory=lambda: np.empty((0, 4)))


@dataclass(frozen=True)
class RegularizedTrajectory:
    """Fictitious-time samples of the regularized flow; columns of `states`
    are Q3, Q4, P3, P4, and `t` is the reconstructed physical time."""

    tau: np.ndarray
    states: np.ndarray
    t: np.ndarray

    def state(self, i: int) -> RegularizedState:
        row = self.states[i]
        return RegularizedState(float(row[0]), float(row[1]), float(row[2]),
                                float(row[3]), float(self.tau[i]), float(self.t[i]))


def _check_configuration(s: PhysicalState, m: MassParams) -> None:
    if m.mu > 0.0:
        if s.q3 == s.q4:
            raise SingularityError("q3 == q4 is singular for mu > 0")
        if s.q3 < s.q4:
            raise DomainError("configuration space requires q3 > q4 for mu > 0")


def hamiltonian_full(s: PhysicalState, m: MassParams) -> float:
    """Energy of the weighted two-parameter system.

    H = p3**2/(2 alpha) + p4**2/(2 beta) - alpha/sqrt(q3**2 + 1/4)
        - beta/sqrt(q4**2 + 1/4) - mu beta/(q3 - q4)
    """
    _check_configuration(s, m)
    kin = 0.5 * (s.p3 * s.p3 / m.alpha + s.p4 * s.p4 / m.beta)
    pot = (-m.alpha / math.sqrt(s.q3 * s.q3 + 0.25)
           - m.beta / math.sqrt(s.q4 * s.q4 + 0.25))
    if m.mu != 0.0:
        pot -= m.mu * m.beta / (s.q3 - s.q4)
    return kin + pot


def hamiltonian_limit(s: PhysicalState) -> float:
    """Decoupled equal-mass limit energy; equals the sum of partial energies."""
    h3, h4 = partial_energies(s)
    return h3 + h4


def partial_energies(s: PhysicalState) -> tuple:
    """(h3, h4) with h_i = p_i**2/2 - 1/sqrt(q_i**2 + 1/4)."""
    h3 = 0.5 * s.p3 * s.p3 - 1.0 / math.sqrt(s.q3 * s.q3 + 0.25)
    h4 = 0.5 * s.p4 * s.p4 - 1.0 / math.sqrt(s.q4 * s.q4 + 0.25)
    return h3, h4


def vector_field(s: PhysicalState, m: MassParams) -> np.ndarray:
    """Canonical vector field of hamiltonian_full, ordered (q3, q4, p3, p4)."""
    _check_configuration(s, m)
    return _k.full_rhs(s.as_array(), m.alpha, m.beta, m.mu)


def rho_map(r: RegularizedState, m: MassParams) -> PhysicalState:
    """Canonical chart (Q, P) -> (q, p); collisions sit at Q3 = 0.

    Positions are q3 = Q4 + beta Q3**2/2, q4 = Q4 - alpha Q3**2/2, so
    q3 - q4 = Q3**2/2. Momenta carry a 1/Q3 factor: collision states map to
    infinite physical momenta, which is exactly why the chart regularizes.
    """
    a, b = m.alpha, m.beta
    q32 = r.Q3 * r.Q3
    q3 = r.Q4 + 0.5 * b * q32
    q4 = r.Q4 - 0.5 * a * q32
    if r.Q3 != 0.0:
        ratio = r.P3 / r.Q3
    elif r.P3 != 0.0:
        ratio = math.inf if r.P3 > 0.0 else -math.inf
    else:
        ratio = math.nan
    p3 = a * r.P4 + ratio
    p4 = b * r.P4 - ratio
    return PhysicalState(q3, q4, p3, p4)


def rho_inverse(s: PhysicalState, m: MassParams) -> RegularizedState:
    """Inverse chart on q3 >= q4, nonnegative branch Q3 = sqrt(2(q3 - q4))."""
    if s.q3 < s.q4:
        raise DomainError("rho_inverse requires q3 >= q4")
    a, b = m.alpha, m.beta
    bq3 = math.sqrt(2.0 * (s.q3 - s.q4))
    bq4 = a * s.q3 + b * s.q4
    bp3 = bq3 * (b * s.p3 - a * s.p4)
    bp4 = s.p3 + s.p4
    return RegularizedState(bq3, bq4, bp3, bp4)


def regularized_L(r: RegularizedState, m: MassParams, h: float) -> float:
    """Regularized Hamiltonian L = alpha beta Q3**2 (H - h) o rho_map.

    Regular at Q3 = 0, where it reduces to P3**2/2 - 2 alpha beta**2 mu.
    """
    return _k.regularized_l(r.Q3, r.Q4, r.P3, r.P4, m.alpha, m.beta, m.mu, float(h))


def regularized_initial(s: PhysicalState, m: MassParams) -> tuple:
    """(RegularizedState, h) for a physical state, with h = hamiltonian_full."""
    h = hamiltonian_full(s, m)
    return rho_inverse(s, m), h


def _step_count(t_end: float, dt: float) -> int:
    if dt <= 0.0:
        raise DomainError(f"dt={dt!r} must be > 0")
    if not math.isfinite(t_end):
        raise DomainError(f"t_end={t_end!r} is not finite")
    return int(round(abs(t_end) / dt))


def integrate_physical(s0: PhysicalState, m: MassParams, t_end: float, dt: float,
                       sample_every: int = 1,
                       collision_threshold: float = 1e-6) -> Trajectory:
    """Fixed-step structure-preserving integration, sampled at multiples of dt.

    With mu = 0 this integrates the decoupled equal-mass limit flow (unit
    mass matrix), the system solved by the closed-form layer. With mu > 0 it
    integrates the weighted flow of hamiltonian_full and aborts with
    CollisionApproachError once q3 - q4 < collision_threshold; from there the
    regularized chart is the honest continuation.

    A negative t_end integrates backward. t_end is rounded to a whole number
    of dt steps.
    """
    nsteps = _step_count(t_end, dt)
    stride = max(1, int(sample_every))
    step = math.copysign(dt, t_end) if t_end != 0.0 else dt
    y0 = s0.as_array()
    if m.mu == 0.0:
        states = _k.integrate_limit(y0, step, nsteps, stride)
    else:
        _check_configuration(s0, m)
        states, filled, ok = _k.integrate_full(y0, m.alpha, m.beta, m.mu,
                                               step, nsteps, stride,
                                               collision_threshold)
        if not ok:
            raise CollisionApproachError(
                f"q3 - q4 fell below {collision_threshold:g}; "
                "switch to the regularized chart (integrate_regularized)")
    nout = states.shape[0]
    ts = np.arange(nout) * (step * stride)
    return Trajectory(ts, states)


def integrate_regularized(r0: RegularizedState, m: MassParams, h: float,
                          tau_end: float, n_samples: int = 1001,
                          rtol: float = 1e-12, atol: float = 1e-13,
                          level_tol: float = 1e-9) -> RegularizedTrajectory:
    """Integrate the fictitious-time flow of L on its zero level.

    The initial condition must satisfy |L(r0)| <= level_tol (otherwise the
    supplied h is inconsistent with r0). Physical time is reconstructed
    alongside from dt/dtau = alpha beta Q3**2. The flow passes smoothly
    through collisions Q3 = 0.
    """
    l0 = regularized_L(r0, m, h)
    if abs(l0) > level_tol:
        raise LevelSetError(
            f"|L(r0)| = {abs(l0):.3e} exceeds level_tol={level_tol:g}; "
            "h is inconsistent with the initial state")
    if n_samples < 2:
        raise DomainError("n_samples must be >= 2")
    y0 = np.array([r0.Q3, r0.Q4, r0.P3, r0.P4, r0.t])
    alpha, beta, mu = m.alpha, m.beta, m.mu
    hh = float(h)

    def rhs(tau, y):
        return _k.regularized_rhs(y, alpha, beta, mu, hh)

    taus = np.linspace(0.0, tau_end, n_samples)
    sol = solve_ivp(rhs, (0.0, tau_end), y0, t_eval=taus, method="DOP853",
                    rtol=rtol, atol=atol, dense_output=False)
    if not sol.success:
        raise ConvergenceError(f"regularized integration failed: {sol.message}")
    states = sol.y[:4].T.copy()
    ts = sol.y[4].copy()
    return RegularizedTrajectory(taus + r0.tau, states, ts)


def extend_with_bounce(s0: PhysicalState, t_end: float, dt: float = 1e-3,
                       sample_every: int = 1,
                       loc_tol: float = 1e-10) -> BounceTrajectory:
    """Equal-mass limit flow extended through q3 = q4 by elastic bounces.

    At each crossing the momenta are exchanged (p3 <-> p4), the unique rule
    conserving total energy and linear momentum for equal masses in one
    dimension; it coincides with relabeling the decoupled trajectories, so
    the extended flow is continuous in position. Returns the sampled
    trajectory plus the ordered bounce events.
    """
    nsteps = _step_count(t_end, dt)
    stride = max(1, int(sample_every))
    step = math.copysign(dt, t_end) if t_end != 0.0 else dt
    max_events = max(16, nsteps + 1)
    states, ev_t, ev_q, ev_s, nev, status = _k.integrate_bounce(
        s0.as_array(), step, nsteps, stride, loc_tol, max_events)
    if status == 2:
        raise ConvergenceError(
            f"bounce crossing bracketed but not localized to {loc_tol:g} in time")
    if status == 1:
        raise ConvergenceError("bounce event buffer overflow")
    nout = states.shape[0]
    ts = np.arange(nout) * (step * stride)
    return BounceTrajectory(ts, states, bounce_times=ev_t.copy(),
                            bounce_positions=ev_q.copy(),
                            bounce_states=ev_s.copy())
