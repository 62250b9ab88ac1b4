"""Low-level numerical kernels.

Every hot inner loop of the package lives here, written in a scalar style
that numba can compile.  By default the functions are wrapped with
``numba.njit``; setting the environment variable ``DSITNIKOV_NO_NUMBA=1``
(or running without numba installed) selects the uncompiled NumPy/Python
fallback of the very same source.  ``benchmarks/bench_kernels.py`` compares
the two paths.

Conventions: the elliptic modulus is k (parameter m = k**2); incomplete
integrals are taken along the Jacobi argument u, not the amplitude angle.
"""

import math
import os

import numpy as np


def _numba_disabled() -> bool:
    return os.environ.get("DSITNIKOV_NO_NUMBA", "").strip().lower() in (
        "1", "true", "yes", "on",
    )


HAVE_NUMBA = False
if not _numba_disabled():
    try:
        from numba import njit as _njit

        HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a hard dep, but stay usable
        HAVE_NUMBA = False

if HAVE_NUMBA:
    def _jit(func):
        return _njit(cache=True)(func)
else:
    def _jit(func):
        return func

BACKEND = "numba" if HAVE_NUMBA else "numpy"

_SQRT2 = math.sqrt(2.0)

# Carlson duplication: quarter the deviations each pass until the tail series
# (error O(eps**6)) is far below double precision.
_CARLSON_TOL = 1.0e-5


# ---------------------------------------------------------------------------
# complete integrals: arithmetic-geometric mean
# ---------------------------------------------------------------------------

@_jit
def agm_ke(k):
    """Complete elliptic integrals (K(k), E(k)) by the AGM iteration."""
    if k == 0.0:
        return 0.5 * math.pi, 0.5 * math.pi
    if k == 1.0:
        return np.inf, 1.0
    a = 1.0
    b = math.sqrt((1.0 - k) * (1.0 + k))
    c = k
    csum = 0.5 * c * c          # sum of 2**(n-1) c_n**2, n = 0 term
    pw = 1.0
    n = 0
    while abs(c) > 1e-17 * a and n < 60:
        an = 0.5 * (a + b)
        bn = math.sqrt(a * b)
        c = 0.5 * (a - b)
        a = an
        b = bn
        csum += pw * c * c      # pw = 2**(n-1) for the (n+1)-th c
        pw *= 2.0
        n += 1
    kk = 0.5 * math.pi / a
    return kk, kk * (1.0 - csum)


# ---------------------------------------------------------------------------
# Carlson symmetric forms (duplication theorem)
# ---------------------------------------------------------------------------

@_jit
def carlson_rf(x, y, z):
    """Carlson R_F(x, y, z), x,y,z >= 0 with at most one zero."""
    xt = x
    yt = y
    zt = z
    ave = (xt + yt + zt) / 3.0
    dx = 0.0
    dy = 0.0
    dz = 0.0
    for _ in range(200):
        sx = math.sqrt(xt)
        sy = math.sqrt(yt)
        sz = math.sqrt(zt)
        lam = sx * (sy + sz) + sy * sz
        xt = 0.25 * (xt + lam)
        yt = 0.25 * (yt + lam)
        zt = 0.25 * (zt + lam)
        ave = (xt + yt + zt) / 3.0
        dx = (ave - xt) / ave
        dy = (ave - yt) / ave
        dz = (ave - zt) / ave
        if max(abs(dx), abs(dy), abs(dz)) < _CARLSON_TOL:
            break
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / math.sqrt(ave)


@_jit
def carlson_rc(x, y):
    """Carlson R_C(x, y) for x >= 0, y > 0."""
    xt = x
    yt = y
    ave = (xt + 2.0 * yt) / 3.0
    s = 0.0
    for _ in range(200):
        lam = 2.0 * math.sqrt(xt) * math.sqrt(yt) + yt
        xt = 0.25 * (xt + lam)
        yt = 0.25 * (yt + lam)
        ave = (xt + 2.0 * yt) / 3.0
        s = (yt - ave) / ave
        if abs(s) < _CARLSON_TOL:
            break
    return (1.0 + s * s * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * 9.0 / 22.0)))) / math.sqrt(ave)


@_jit
def carlson_rj(x, y, z, p):
    """Carlson R_J(x, y, z, p) for nonnegative x,y,z and p > 0."""
    xt = x
    yt = y
    zt = z
    pt = p
    ssum = 0.0
    fac = 1.0
    ave = (xt + yt + zt + 2.0 * pt) / 5.0
    dx = 0.0
    dy = 0.0
    dz = 0.0
    dp = 0.0
    for _ in range(200):
        sx = math.sqrt(xt)
        sy = math.sqrt(yt)
        sz = math.sqrt(zt)
        lam = sx * (sy + sz) + sy * sz
        alpha = pt * (sx + sy + sz) + sx * sy * sz
        alpha = alpha * alpha
        beta = pt * (pt + lam) * (pt + lam)
        ssum += fac * carlson_rc(alpha, beta)
        fac *= 0.25
        xt = 0.25 * (xt + lam)
        yt = 0.25 * (yt + lam)
        zt = 0.25 * (zt + lam)
        pt = 0.25 * (pt + lam)
        ave = (xt + yt + zt + 2.0 * pt) / 5.0
        dx = (ave - xt) / ave
        dy = (ave - yt) / ave
        dz = (ave - zt) / ave
        dp = (ave - pt) / ave
        if max(abs(dx), abs(dy), abs(dz), abs(dp)) < _CARLSON_TOL:
            break
    ea = dx * (dy + dz) + dy * dz
    eb = dx * dy * dz
    ec = dp * dp
    ed = ea - 3.0 * ec
    ee = eb + 2.0 * dp * (ea - ec)
    series = (1.0
              + ed * (-3.0 / 14.0 + 9.0 / 88.0 * ed - 9.0 / 52.0 * ee)
              + eb * (1.0 / 6.0 + dp * (-3.0 / 11.0 + dp * 3.0 / 26.0))
              + dp * ea * (1.0 / 3.0 - dp * 3.0 / 22.0)
              - dp * ec / 3.0)
    return 3.0 * ssum + fac * series / (ave * math.sqrt(ave))


@_jit
def complete_pi(n, k):
    """Complete third-kind integral Pi(n, k), characteristic n < 1."""
    kc2 = (1.0 - k) * (1.0 + k)
    if n == 0.0:
        return carlson_rf(0.0, kc2, 1.0)
    return carlson_rf(0.0, kc2, 1.0) + n / 3.0 * carlson_rj(0.0, kc2, 1.0, 1.0 - n)


# ---------------------------------------------------------------------------
# Jacobi elliptic functions: AGM descending transformation
# ---------------------------------------------------------------------------

@_jit
def jacobi_sncndn(u, k):
    """(sn, cn, dn) at argument u, modulus k in [0, 1).

    AGM sequence with amplitude back-recursion; u is reduced modulo the
    4K period first so long-orbit arguments keep full accuracy.
    """
    if k == 0.0:
        return math.sin(u), math.cos(u), 1.0
    aa = np.empty(34)
    cc = np.empty(34)
    a = 1.0
    b = math.sqrt((1.0 - k) * (1.0 + k))
    c = k
    aa[0] = a
    cc[0] = c
    n = 0
    while abs(c) > 1e-16 * a and n < 32:
        an = 0.5 * (a + b)
        bn = math.sqrt(a * b)
        c = 0.5 * (a - b)
        a = an
        b = bn
        n += 1
        aa[n] = a
        cc[n] = c
    period = 2.0 * math.pi / a          # 4K
    ur = u % period                     # representative in [0, 4K)
    phi = (2.0 ** n) * a * ur
    for j in range(n, 0, -1):
        t = cc[j] / aa[j] * math.sin(phi)
        if t > 1.0:
            t = 1.0
        elif t < -1.0:
            t = -1.0
        phi = 0.5 * (math.asin(t) + phi)
    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = math.sqrt(1.0 - (k * sn) * (k * sn))
    return sn, cn, dn


@_jit
def _epsilon_base(u, k):
    # incomplete second kind E(am(u,k), k) for u in [0, K]
    sn, cn, dn = jacobi_sncndn(u, k)
    if sn == 0.0:
        return 0.0
    c2 = cn * cn
    d2 = dn * dn
    rd = carlson_rj(c2, d2, 1.0, 1.0)   # R_D(x,y,z) = R_J(x,y,z,z)
    return sn * (carlson_rf(c2, d2, 1.0) - (k * sn) * (k * sn) * rd / 3.0)


@_jit
def epsilon_inc(u, k, kk, ee):
    """Jacobi epsilon: integral of dn**2 from 0 to u (kk = K(k), ee = E(k))."""
    if k == 0.0:
        return u
    two_k = 2.0 * kk
    n2 = math.floor(u / two_k)
    r = u - n2 * two_k
    if r < 0.0:
        r = 0.0
    if r <= kk:
        base = _epsilon_base(r, k)
    else:
        base = 2.0 * ee - _epsilon_base(two_k - r, k)
    return base + 2.0 * ee * n2


@_jit
def _pi_inc_base(n, u, k):
    # incomplete third kind along the Jacobi argument for u in [0, K]
    sn, cn, dn = jacobi_sncndn(u, k)
    if sn == 0.0:
        return 0.0
    c2 = cn * cn
    d2 = dn * dn
    s2 = sn * sn
    return sn * (carlson_rf(c2, d2, 1.0)
                 + n * s2 * carlson_rj(c2, d2, 1.0, 1.0 - n * s2) / 3.0)


@_jit
def pi_inc(n, u, k, kk, pic):
    """Incomplete Pi(n; u, k): integral of 1/(1 - n sn**2) from 0 to u.

    kk = K(k), pic = Pi(n, k) complete; used for the quasi-periodic shift.
    """
    if n == 0.0:
        return u
    two_k = 2.0 * kk
    n2 = math.floor(u / two_k)
    r = u - n2 * two_k
    if r < 0.0:
        r = 0.0
    if r <= kk:
        base = _pi_inc_base(n, r, k)
    else:
        base = 2.0 * pic - _pi_inc_base(n, two_k - r, k)
    return base + 2.0 * pic * n2


# ---------------------------------------------------------------------------
# closed-form time function and its inversion
# ---------------------------------------------------------------------------

@_jit
def time_raw(nu, k, kk, ee, pic):
    """Antiderivative of dt/dnu = sqrt(2)/(4 (1 - 2 k**2 sn**2)**2), no constant."""
    n = 2.0 * k * k
    sn, cn, dn = jacobi_sncndn(nu, k)
    w = 1.0 - n * sn * sn
    g = (2.0 * epsilon_inc(nu, k, kk, ee) - nu + pi_inc(n, nu, k, kk, pic)
         - 2.0 * n * sn * cn * dn / w)
    return _SQRT2 / (8.0 * (1.0 - n)) * g


@_jit
def dtime_dnu(nu, k):
    """dt/dnu along an orbit of partial energy 4k**2 - 2."""
    sn, cn, dn = jacobi_sncndn(nu, k)
    w = 1.0 - 2.0 * k * k * sn * sn
    return _SQRT2 / (4.0 * w * w)


@_jit
def invert_time(t_target, k, nu_lo, raw_lo, kk, ee, pic, guess):
    """Solve time_raw(nu) - raw_lo = t_target for nu in [nu_lo, nu_lo + 4K].

    Bracketed Newton with bisection fallback on the strictly increasing time
    function. Returns (nu, ok).
    """
    four_k = 4.0 * kk
    a = nu_lo
    b = nu_lo + four_k
    nu = guess
    if nu <= a or nu >= b:
        nu = 0.5 * (a + b)
    f = 0.0
    for _ in range(120):
        f = time_raw(nu, k, kk, ee, pic) - raw_lo - t_target
        if abs(f) <= 1e-14 * (1.0 + abs(t_target)):
            return nu, True
        if f > 0.0:
            b = nu
        else:
            a = nu
        d = dtime_dnu(nu, k)
        nun = nu - f / d
        if nun <= a or nun >= b:
            nun = 0.5 * (a + b)
        if nun == nu:
            break
        nu = nun
    return nu, abs(f) <= 1e-12 * (1.0 + abs(t_target))


@_jit
def orbit_eval(ts, k, nu0, raw0, kk, ee, pic, period):
    """Evaluate (q, p, nu) of a closed-form orbit on an array of times."""
    m = ts.shape[0]
    qs = np.empty(m)
    ps = np.empty(m)
    nus = np.empty(m)
    four_k = 4.0 * kk
    two_k2 = 2.0 * k * k
    amp = 2.0 * _SQRT2 * k
    ok_all = True
    for i in range(m):
        t = ts[i]
        ncyc = math.floor(t / period)
        tr = t - ncyc * period
        guess = nu0 + tr / period * four_k
        nu_r, ok = invert_time(tr, k, nu0, raw0, kk, ee, pic, guess)
        if not ok:
            ok_all = False
        nus[i] = nu_r + ncyc * four_k
        sn, cn, dn = jacobi_sncndn(nu_r, k)
        w = 1.0 - two_k2 * sn * sn
        qs[i] = k * sn * dn / w
        ps[i] = amp * cn
    return qs, ps, nus, ok_all


# ---------------------------------------------------------------------------
# splitting integrators (Yoshida composition of leapfrog)
# ---------------------------------------------------------------------------

_Y6_W1 = -1.17767998417887
_Y6_W2 = 0.235573213359357
_Y6_W3 = 0.784513610477560
_Y6_W0 = 1.0 - 2.0 * (_Y6_W1 + _Y6_W2 + _Y6_W3)
_Y6 = np.array([_Y6_W3, _Y6_W2, _Y6_W1, _Y6_W0, _Y6_W1, _Y6_W2, _Y6_W3])


@_jit
def _accel_one(q):
    # -dV/dq for V(q) = -1/sqrt(q**2 + 1/4)
    r = q * q + 0.25
    return -q / (r * math.sqrt(r))


@_jit
def step_limit(q3, q4, p3, p4, dt):
    """One 6th-order step of the decoupled equal-mass limit flow."""
    for i in range(7):
        h = _Y6[i] * dt
        p3 += 0.5 * h * _accel_one(q3)
        p4 += 0.5 * h * _accel_one(q4)
        q3 += h * p3
        q4 += h * p4
        p3 += 0.5 * h * _accel_one(q3)
        p4 += 0.5 * h * _accel_one(q4)
    return q3, q4, p3, p4


@_jit
def integrate_limit(y0, dt, nsteps, stride):
    """Fixed-step integration of the limit flow; samples every `stride` steps."""
    nout = nsteps // stride + 1
    out = np.empty((nout, 4))
    q3 = y0[0]
    q4 = y0[1]
    p3 = y0[2]
    p4 = y0[3]
    out[0, 0] = q3
    out[0, 1] = q4
    out[0, 2] = p3
    out[0, 3] = p4
    j = 1
    for s in range(1, nsteps + 1):
        q3, q4, p3, p4 = step_limit(q3, q4, p3, p4, dt)
        if s % stride == 0:
            out[j, 0] = q3
            out[j, 1] = q4
            out[j, 2] = p3
            out[j, 3] = p4
            j += 1
    return out


@_jit
def _forces_full(q3, q4, alpha, beta, mu):
    r3 = q3 * q3 + 0.25
    r4 = q4 * q4 + 0.25
    f3 = -alpha * q3 / (r3 * math.sqrt(r3))
    f4 = -beta * q4 / (r4 * math.sqrt(r4))
    if mu != 0.0:
        d = q3 - q4
        g = mu * beta / (d * d)
        f3 -= g
        f4 += g
    return f3, f4


@_jit
def step_full(q3, q4, p3, p4, alpha, beta, mu, dt):
    """One 6th-order step of the weighted two-parameter flow."""
    for i in range(7):
        h = _Y6[i] * dt
        f3, f4 = _forces_full(q3, q4, alpha, beta, mu)
        p3 += 0.5 * h * f3
        p4 += 0.5 * h * f4
        q3 += h * p3 / alpha
        q4 += h * p4 / beta
        f3, f4 = _forces_full(q3, q4, alpha, beta, mu)
        p3 += 0.5 * h * f3
        p4 += 0.5 * h * f4
    return q3, q4, p3, p4


@_jit
def integrate_full(y0, alpha, beta, mu, dt, nsteps, stride, min_sep):
    """Weighted-flow integration with a collision-approach guard for mu > 0.

    Returns (samples, filled_rows, ok); ok is False when q3 - q4 fell below
    min_sep, with filled_rows counting the samples recorded up to the abort.
    """
    nout = nsteps // stride + 1
    out = np.empty((nout, 4))
    q3 = y0[0]
    q4 = y0[1]
    p3 = y0[2]
    p4 = y0[3]
    out[0, 0] = q3
    out[0, 1] = q4
    out[0, 2] = p3
    out[0, 3] = p4
    j = 1
    for s in range(1, nsteps + 1):
        q3, q4, p3, p4 = step_full(q3, q4, p3, p4, alpha, beta, mu, dt)
        if mu != 0.0 and q3 - q4 < min_sep:
            return out, j, False
        if s % stride == 0:
            out[j, 0] = q3
            out[j, 1] = q4
            out[j, 2] = p3
            out[j, 3] = p4
            j += 1
    return out, j, True


@_jit
def integrate_bounce(y0, dt, nsteps, stride, loc_tol, max_events):
    """Limit flow extended through q3 = q4 by elastic equal-mass exchange.

    Crossings inside a step are localized by bisection on the substep length
    (same one-step method), the momenta are swapped, and the step is finished
    from the bounced state. Returns (samples, event_times, event_positions,
    event_states (pre-swap), n_events, status) with status 0 = ok,
    1 = event buffer full, 2 = localization failed.
    """
    nout = nsteps // stride + 1
    out = np.empty((nout, 4))
    ev_t = np.empty(max_events)
    ev_q = np.empty(max_events)
    ev_s = np.empty((max_events, 4))
    nev = 0
    status = 0
    q3 = y0[0]
    q4 = y0[1]
    p3 = y0[2]
    p4 = y0[3]
    out[0, 0] = q3
    out[0, 1] = q4
    out[0, 2] = p3
    out[0, 3] = p4
    j = 1
    t = 0.0
    for s in range(1, nsteps + 1):
        a3 = q3
        a4 = q4
        b3 = p3
        b4 = p4
        q3, q4, p3, p4 = step_limit(q3, q4, p3, p4, dt)
        g0 = a3 - a4
        g1 = q3 - q4
        crossed = (g0 > 0.0 and g1 < 0.0) or (g0 < 0.0 and g1 > 0.0) or (g1 == 0.0 and g0 != 0.0)
        if crossed:
            lo = 0.0
            hi = dt
            for _ in range(100):
                mid = 0.5 * (lo + hi)
                c3, c4, d3, d4 = step_limit(a3, a4, b3, b4, mid)
                gm = c3 - c4
                if gm == 0.0:
                    lo = mid
                    hi = mid
                    break
                if (gm > 0.0) == (g0 > 0.0):
                    lo = mid
                else:
                    hi = mid
                if hi - lo <= loc_tol:
                    break
            if hi - lo > loc_tol:
                status = 2
                return out[:j], ev_t[:nev], ev_q[:nev], ev_s[:nev], nev, status
            off = 0.5 * (lo + hi)
            c3, c4, d3, d4 = step_limit(a3, a4, b3, b4, off)
            if nev >= max_events:
                status = 1
                return out[:j], ev_t[:nev], ev_q[:nev], ev_s[:nev], nev, status
            ev_t[nev] = t + off
            ev_q[nev] = 0.5 * (c3 + c4)
            ev_s[nev, 0] = c3
            ev_s[nev, 1] = c4
            ev_s[nev, 2] = d3
            ev_s[nev, 3] = d4
            nev += 1
            # elastic equal-mass exchange, then finish the step
            q3, q4, p3, p4 = step_limit(c3, c4, d4, d3, dt - off)
        t += dt
        if s % stride == 0:
            out[j, 0] = q3
            out[j, 1] = q4
            out[j, 2] = p3
            out[j, 3] = p4
            j += 1
    return out, ev_t[:nev], ev_q[:nev], ev_s[:nev], nev, status


# ---------------------------------------------------------------------------
# regularized chart
# ---------------------------------------------------------------------------

@_jit
def regularized_l(bq3, bq4, bp3, bp4, alpha, beta, mu, h):
    """Regularized Hamiltonian L at (Q3, Q4, P3, P4)."""
    ab = alpha * beta
    q32 = bq3 * bq3
    aa = 2.0 * bq4 + beta * q32
    bb = 2.0 * bq4 - alpha * q32
    sa = math.sqrt(aa * aa + 1.0)
    sb = math.sqrt(bb * bb + 1.0)
    return (0.5 * (ab * bp4 * bp4 * q32 + bp3 * bp3)
            - 2.0 * alpha * beta * beta * mu
            - ab * q32 * (2.0 * alpha / sa + 2.0 * beta / sb + h))


@_jit
def regularized_rhs(y, alpha, beta, mu, h):
    """Fictitious-time field of L, with dt/dtau = alpha beta Q3**2 appended."""
    bq3 = y[0]
    bq4 = y[1]
    bp3 = y[2]
    bp4 = y[3]
    ab = alpha * beta
    q32 = bq3 * bq3
    aa = 2.0 * bq4 + beta * q32
    bb = 2.0 * bq4 - alpha * q32
    sa2 = aa * aa + 1.0
    sb2 = bb * bb + 1.0
    sa = math.sqrt(sa2)
    sb = math.sqrt(sb2)
    u = 2.0 * alpha / sa + 2.0 * beta / sb + h
    du_dq3 = (-2.0 * alpha * aa / (sa2 * sa) * (2.0 * beta * bq3)
              - 2.0 * beta * bb / (sb2 * sb) * (-2.0 * alpha * bq3))
    du_dq4 = (-2.0 * alpha * aa / (sa2 * sa) - 2.0 * beta * bb / (sb2 * sb)) * 2.0
    out = np.empty(5)
    out[0] = bp3
    out[1] = ab * q32 * bp4
    out[2] = -(ab * bp4 * bp4 * bq3 - 2.0 * ab * bq3 * u - ab * q32 * du_dq3)
    out[3] = ab * q32 * du_dq4
    out[4] = ab * q32
    return out


@_jit
def full_rhs(y, alpha, beta, mu):
    """Canonical field of the weighted Hamiltonian (q3, q4, p3, p4 order)."""
    q3 = y[0]
    q4 = y[1]
    p3 = y[2]
    p4 = y[3]
    f3, f4 = _forces_full(q3, q4, alpha, beta, mu)
    out = np.empty(4)
    out[0] = p3 / alpha
    out[1] = p4 / beta
    out[2] = f3
    out[3] = f4
    return out


def warmup():
    """Touch every kernel once so later timings exclude JIT compilation."""
    agm_ke(0.5)
    carlson_rf(0.0, 0.75, 1.0)
    carlson_rc(1.0, 2.0)
    carlson_rj(0.0, 0.75, 1.0, 0.5)
    complete_pi(0.5, 0.5)
    jacobi_sncndn(0.8, 0.6)
    kk, ee = agm_ke(0.5)
    pic = complete_pi(0.5, 0.5)
    epsilon_inc(1.0, 0.5, kk, ee)
    pi_inc(0.5, 1.0, 0.5, kk, pic)
    time_raw(1.0, 0.5, kk, ee, pic)
    dtime_dnu(1.0, 0.5)
    invert_time(0.3, 0.5, 0.0, time_raw(0.0, 0.5, kk, ee, pic), kk, ee, pic, 0.5)
    orbit_eval(np.array([0.0, 0.1]), 0.5, 0.0,
               time_raw(0.0, 0.5, kk, ee, pic), kk, ee, pic, 5.18)
    y0 = np.array([0.1, -0.2, 0.3, -0.4])
    step_limit(0.1, -0.2, 0.3, -0.4, 1e-3)
    integrate_limit(y0, 1e-3, 4, 2)
    step_full(0.3, -0.3, 0.1, -0.1, 0.5, 0.5, 0.01, 1e-3)
    integrate_full(np.array([0.3, -0.3, 0.1, -0.1]), 0.5, 0.5, 0.01, 1e-3, 4, 2, 1e-6)
    integrate_bounce(np.array([0.3, -0.3, -0.2, 0.2]), 1e-3, 4, 2, 1e-10, 8)
    regularized_l(0.5, 0.1, 0.2, 0.3, 0.5, 0.5, 0.01, -2.0)
    regularized_rhs(np.array([0.5, 0.1, 0.2, 0.3, 0.0]), 0.5, 0.5, 0.01, -2.0)
    full_rhs(np.array([0.3, -0.3, 0.1, -0.1]), 0.5, 0.5, 0.01)
