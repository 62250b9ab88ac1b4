"""Catalog of resonant tori and the energy surfaces carrying periodic orbits.

An admissible triplet (p, q, n) of positive integers has gcd(p, q, n) = 1
and satisfies p > q/(2 sqrt(2)) and p > n/(2 sqrt(2)); it encodes a common
period tau = 2 pi p = q T(h1) = n T(h2), hence an energy surface at
h* = T^{-1}(2 pi p / q) + T^{-1}(2 pi p / n). The inequality is evaluated in
exact integer arithmetic as 8 p**2 > q**2 (8 p**2 is never a perfect square,
so no boundary ties exist). Enumeration counts stay strictly below the
totient bound 8 p phi(p) + sum of phi(q) over q < 2 sqrt(2) p.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._errors import ConvergenceError, DomainError
from . import closedform

__all__ = [
    "ResonanceTriplet",
    "CatalogEntry",
    "Catalog",
    "DensityReport",
    "gcd3",
    "totient",
    "is_admissible",
    "enumerate_triplets",
    "count_bound",
    "invert_period",
    "energy_surface",
    "rational_to_triplet",
    "build_catalog",
    "density_report",
    "minimality_report",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ResonanceTriplet:
    """Positive integer triple (p, q, n); admissibility is checked separately."""

    p: int
    q: int
    n: int

    def __post_init__(self):
        for name in ("p", "q", "n"):
            v = getattr(self, name)
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or v < 1:
                raise DomainError(f"triplet component {name}={v!r} must be a positive integer")
            object.__setattr__(self, name, int(v))


@dataclass(frozen=True)
class CatalogEntry:
    """One resonant torus: the triplet, partial energies with
    T(h1) = 2 pi p / q and T(h2) = 2 pi p / n, the energy surface
    h* = h1 + h2, and the common period tau = 2 pi p."""

    triplet: ResonanceTriplet
    h1: float
    h2: float
    h_star: float
    tau: float


@dataclass(frozen=True)
class Catalog:
    """All admissible triplets with first component <= p_max.

    `entries` has one row per triplet in deterministic (p, q, n) order;
    `surfaces` holds the distinct h* values (deduplicated at `dedup_tol`);
    `counts` and `bounds` give, per p, the enumeration count and the
    totient upper bound.
    """

    p_max: int
    entries: tuple
    surfaces: np.ndarray
    counts: dict
    bounds: dict
    dedup_tol: float


@dataclass(frozen=True)
class DensityReport:
    """Histogram of distinct h* over (-4, 0) plus the maximum gap between
    adjacent distinct values."""

    p_max: int
    bins: int
    edges: np.ndarray
    counts: np.ndarray
    n_distinct: int
    max_gap: float


def _check_positive(name: str, v) -> int:
    if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or v < 1:
        raise DomainError(f"{name}={v!r} must be a positive integer")
    return int(v)


def gcd3(p: int, q: int, n: int) -> int:
    """Greatest common divisor of three positive integers."""
    p = _check_positive("p", p)
    q = _check_positive("q", q)
    n = _check_positive("n", n)
    return math.gcd(math.gcd(p, q), n)


def totient(p: int) -> int:
    """Euler's phi by trial-division factorization."""
    p = _check_positive("p", p)
    result = p
    rem = p
    f = 2
    while f * f <= rem:
        if rem % f == 0:
            result -= result // f
            while rem % f == 0:
                rem //= f
        f += 1 if f == 2 else 2
    if rem > 1:
        result -= result // rem
    return result


def _q_limit(p: int) -> int:
    # largest integer strictly below 2 sqrt(2) p, exactly: isqrt(8 p^2)
    return math.isqrt(8 * p * p)


def is_admissible(t) -> bool:
    """True iff gcd(p, q, n) = 1 and 8 p**2 > q**2, 8 p**2 > n**2."""
    t = t if isinstance(t, ResonanceTriplet) else ResonanceTriplet(*t)
    p2_8 = 8 * t.p * t.p
    if t.q * t.q >= p2_8 or t.n * t.n >= p2_8:
        return False
    return gcd3(t.p, t.q, t.n) == 1


def enumerate_triplets(p: int):
    """All admissible triplets with first component exactly p, in
    lexicographic (q, n) order."""
    p = _check_positive("p", p)
    qmax = _q_limit(p)
    out = []
    for q in range(1, qmax + 1):
        gpq = math.gcd(p, q)
        for n in range(1, qmax + 1):
            if math.gcd(gpq, n) == 1:
                out.append(ResonanceTriplet(p, q, n))
    return out


def count_bound(p: int) -> int:
    """Totient upper bound 8 p phi(p) + sum_{q < 2 sqrt(2) p} phi(q)."""
    p = _check_positive("p", p)
    qmax = _q_limit(p)
    # phi sieve up to qmax
    phi = np.arange(qmax + 1)
    for i in range(2, qmax + 1):
        if phi[i] == i:  # i is prime
            phi[i::i] -= phi[i::i] // i
    return 8 * p * totient(p) + int(phi[1:].sum())


# ---------------------------------------------------------------------------
# period inversion
# ---------------------------------------------------------------------------

_MONOTONE_CHECKED = False
_INVERT_CACHE: dict = {}
_RATIO_CACHE: dict = {}


def _ensure_monotone(grid_points: int = 10_000) -> None:
    """One-time numerical check that T(h) is strictly increasing on (-2, 0)."""
    global _MONOTONE_CHECKED
    if _MONOTONE_CHECKED:
        return
    hs = np.linspace(-2.0 + 1e-6, -1e-6, grid_points)
    prev = -math.inf
    for h in hs:
        cur = closedform.period_T(float(h))
        if cur <= prev:
            raise ConvergenceError(
                f"period T(h) is not strictly increasing near h={h!r}; "
                "the inversion assumption is violated")
        prev = cur
    _MONOTONE_CHECKED = True


def invert_period(T_target: float, tol: float = 1e-11) -> float:
    """The unique h in (-2, 0) with period_T(h) = T_target, by bisection.

    Requires T_target > pi/sqrt(2), the infimum of the period.
    """
    T_target = float(T_target)
    if not T_target > closedform.T_MIN:
        raise DomainError(
            f"T_target={T_target!r} must exceed the period infimum {closedform.T_MIN!r}")
    key = (T_target, tol)
    hit = _INVERT_CACHE.get(key)
    if hit is not None:
        return hit
    _ensure_monotone()
    lo = -2.0            # T -> pi/sqrt(2) < T_target
    hi = -0.5
    while closedform.period_T(hi) < T_target:
        hi *= 0.25
        if hi > -1e-14:
            raise ConvergenceError(f"failed to bracket T_target={T_target!r}")
    h = 0.5 * (lo + hi)
    resid = math.inf
    for _ in range(500):
        h = 0.5 * (lo + hi)
        cur = closedform.period_T(h)
        resid = abs(cur - T_target)
        if resid <= tol:
            break
        if cur < T_target:
            lo = h
        else:
            hi = h
        if hi - lo <= 5e-17 * max(1.0, abs(h)):
            resid = abs(closedform.period_T(h) - T_target)
            break
    if resid > tol:
        raise ConvergenceError(
            f"period inversion residual {resid:.3e} exceeds {tol:g} at T={T_target!r}")
    _INVERT_CACHE[key] = h
    return h


def _invert_ratio(p: int, q: int) -> float:
    # h with T(h) = 2 pi p / q, cached by the reduced fraction so that equal
    # ratios share bitwise-identical energies
    frac = Fraction(p, q)
    hit = _RATIO_CACHE.get(frac)
    if hit is None:
        hit = invert_period(_TWO_PI * frac.numerator / frac.denominator)
        _RATIO_CACHE[frac] = hit
    return hit


def energy_surface(t) -> CatalogEntry:
    """Partial energies and energy surface of an admissible triplet."""
    t = t if isinstance(t, ResonanceTriplet) else ResonanceTriplet(*t)
    if not is_admissible(t):
        raise DomainError(f"triplet {(t.p, t.q, t.n)} is not admissible")
    h1 = _invert_ratio(t.p, t.q)
    h2 = _invert_ratio(t.p, t.n)
    return CatalogEntry(t, h1, h2, h1 + h2, _TWO_PI * t.p)


def rational_to_triplet(r: int, s: int, u: int, v: int) -> ResonanceTriplet:
    """Admissible triplet (ru/g, su/g, rv/g), g = gcd, from a rational point
    (r/s, u/v) of the scaled period map; requires coprime pairs and
    r/s, u/v > 1/(2 sqrt(2))."""
    r = _check_positive("r", r)
    s = _check_positive("s", s)
    u = _check_positive("u", u)
    v = _check_positive("v", v)
    if math.gcd(r, s) != 1:
        raise DomainError(f"(r, s) = {(r, s)} must be coprime")
    if math.gcd(u, v) != 1:
        raise DomainError(f"(u, v) = {(u, v)} must be coprime")
    if 8 * r * r <= s * s:
        raise DomainError(f"r/s = {r}/{s} is not above 1/(2 sqrt(2))")
    if 8 * u * u <= v * v:
        raise DomainError(f"u/v = {u}/{v} is not above 1/(2 sqrt(2))")
    g = gcd3(r * u, s * u, r * v)
    return ResonanceTriplet(r * u // g, s * u // g, r * v // g)


def build_catalog(p_max: int, dedup_tol: float = 1e-9) -> Catalog:
    """All catalog entries for p = 1..p_max, in deterministic order, with
    the distinct energy surfaces deduplicated at dedup_tol."""
    p_max = _check_positive("p_max", p_max)
    entries = []
    counts = {}
    bounds = {}
    for p in range(1, p_max + 1):
        triplets = enumerate_triplets(p)
        counts[p] = len(triplets)
        bounds[p] = count_bound(p)
        for t in triplets:
            entries.append(energy_surface(t))
    hs = np.sort(np.array([e.h_star for e in entries]))
    distinct = []
    for h in hs:
        if not distinct or h - distinct[-1] > dedup_tol:
            distinct.append(float(h))
    return Catalog(p_max, tuple(entries), np.array(distinct), counts, bounds,
                   dedup_tol)


def density_report(p_max: int, bins: int) -> DensityReport:
    """Histogram of distinct h* over (-4, 0) and the maximum gap between
    adjacent distinct values (a desk-scale density illustration)."""
    p_max = _check_positive("p_max", p_max)
    bins = _check_positive("bins", bins)
    cat = build_catalog(p_max)
    vals = cat.surfaces
    counts, edges = np.histogram(vals, bins=bins, range=(-4.0, 0.0))
    max_gap = float(np.max(np.diff(vals))) if vals.size >= 2 else 0.0
    return DensityReport(p_max, bins, edges, counts, int(vals.size), max_gap)


def minimality_report(entry: CatalogEntry, tol: float = 1e-8,
                      nu0_3: float = 0.37, nu0_4: float = 1.91) -> dict:
    """Measure whether tau = 2 pi p is the minimum period of the combined
    closed-form solution.

    For each candidate prime divisor d (of p, and of gcd(q, n), the only
    sources of sub-periodicity), reports the state-return residual at tau/d.
    Results are reported, never asserted: the admissibility conditions alone
    do not certify minimality.
    """
    t = entry.triplet
    primes = set()
    for base in (t.p, math.gcd(t.q, t.n)):
        rem = base
        f = 2
        while f * f <= rem:
            if rem % f == 0:
                primes.add(f)
                while rem % f == 0:
                    rem //= f
            f += 1 if f == 2 else 2
        if rem > 1:
            primes.add(rem)
    o3 = closedform.make_orbit(entry.h1, nu0_3)
    o4 = closedform.make_orbit(entry.h2, nu0_4)
    s0 = closedform.eval_double_state(0.0, o3, o4).as_array()
    out = {}
    for d in sorted(primes):
        st = closedform.eval_double_state(entry.tau / d, o3, o4).as_array()
        resid = float(np.max(np.abs(st - s0)))
        out[d] = {"residual": resid, "periodic": resid <= tol}
    return {"tau": entry.tau, "divisors": out}
