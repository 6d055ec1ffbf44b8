"""Numerical integration over the half-space, its boundary, the ball and sphere.

Two engines:

* TENSOR (deterministic, n = 1 only).  Volume integrals are pulled back to
  the unit disc through the Cayley transform, whose Jacobian is exact, and
  integrated in polar coordinates anchored at xi = -1 (the image of the
  point at infinity, where every pulled-back integrand concentrates its
  singularity).  Gauss-Jacobi absorbs both the (1-|xi|^2)^lambda weight and
  the anchor power exactly when the integrand's decay exponent is supplied,
  giving spectral accuracy.  Boundary integrals split R into a Gauss-Legendre
  core and two decay-matched Gauss-Jacobi tails.

* MC (any n).  Scrambled-Sobol quasi-Monte Carlo with replicate-based
  standard errors.  Boundary integrals map (z', t) to a compact box through
  tangent substitutions; volume integrals are fibered into boundary slices,
  int_U F dV_lam = c_lam int_0^inf t^lam { int_bU F(u + t i) dbeta } dt,
  with deterministic Gauss-Jacobi nodes in t and QMC slices inside.

Integrands are vectorized callables F(zp, zn) (volume) or G(zp, t)
(boundary, the point being (zp, t + i|zp|^2)); HoloFun trees are accepted
anywhere a callable is.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, replace

import numpy as np
from scipy.special import ndtri, roots_jacobi, roots_legendre
from scipy.stats import qmc

from .errors import DecayError, DomainError
from .holofun import HoloFun
from .special import c_lambda

DEFAULT_SEED = 0xC0FFEE

# Convergence thresholds for the deterministic refinement flag.
_CONV_REL = 1e-3
_CONV_ABS = 1e-9


class Engine(enum.Enum):
    TENSOR = "tensor"
    MC = "mc"


@dataclass(frozen=True)
class QuadratureSpec:
    """Engine choice and resolution parameters.

    ``decay`` is the asserted decay exponent of the integrand at infinity
    (|F(w)| ~ |w|^-decay); when given, the anchored Jacobi exponent and the
    boundary tails match it exactly.  When omitted the engines assume the
    critical-plus-integer decay that all kernel integrands of the toolkit
    satisfy.
    """

    engine: Engine = Engine.TENSOR
    radial_order: int = 128
    angular_order: int = 128
    sample_count: int = 1 << 18
    seed: int = DEFAULT_SEED
    lambda_weight: float | None = None
    truncation: float = 4.0
    decay: float | None = None
    replicates: int = 8
    outer_order: int = 32
    levels: int = 12

    def with_(self, **kw) -> "QuadratureSpec":
        return replace(self, **kw)


@dataclass(frozen=True)
class IntegralResult:
    """Value plus always-accumulated absolute integral and error estimates."""

    value: complex
    abs_integral: float
    stderr_estimate: float = 0.0
    richardson_delta: float = 0.0
    n_evals: int = 0

    @property
    def converged(self) -> bool:
        if not np.isfinite(self.abs_integral) or not np.isfinite(abs(self.value)):
            return False
        scale = max(abs(self.value), self.abs_integral, _CONV_ABS / _CONV_REL)
        if self.stderr_estimate and self.stderr_estimate > 0.25 * scale:
            return False
        return self.richardson_delta <= _CONV_REL * scale


def _as_volume_fn(F):
    if isinstance(F, HoloFun):
        return F.eval, F.n
    return F, None


def _resolve_n(n, inferred):
    if n is None:
        n = inferred
    if n is None:
        raise DomainError("ambient dimension n is required for a raw callable")
    return int(n)


# ---------------------------------------------------------------------------
# TENSOR engine: anchored polar nodes on the disc


def _anchor_nodes(lam: float, kphi: int, ktau: int, beta: float):
    """Nodes and weights for int_B g(xi) (1-|xi|^2)^lam dA on the unit disc.

    Polar coordinates at xi = -1: xi = -1 + 2 cos(phi) tau e^{i phi}.  The
    Jacobi rule carries weight tau^beta (1-tau)^lam; the leftover factor
    tau^(lam+1-beta) multiplies the integrand values.
    """
    if beta <= -1:
        raise DomainError("anchored Jacobi exponent must exceed -1; "
                          "integrand decays too slowly")
    xphi, wphi = roots_legendre(kphi)
    phi = xphi * (math.pi / 2)
    wphi = wphi * (math.pi / 2)
    xtau, wtau = roots_jacobi(ktau, lam, beta)
    tau = (xtau + 1.0) / 2.0
    wtau = wtau * 2.0 ** (-(lam + beta + 1.0)) * tau ** (lam + 1.0 - beta)
    c = 2.0 * np.cos(phi)
    xi = -1.0 + (c[:, None] * tau[None, :]) * np.exp(1j * phi)[:, None]
    W = (wphi * c ** (2.0 * lam + 2.0))[:, None] * wtau[None, :]
    return xi.ravel(), W.ravel()


def _disc_integral(g, lam: float, kphi: int, ktau: int, beta: float):
    """(value, abs_value) of int_B g (1-|xi|^2)^lam dA with anchored nodes."""
    xi, W = _anchor_nodes(lam, kphi, ktau, beta)
    vals = g(xi)
    return complex(np.sum(W * vals)), float(np.sum(W * np.abs(vals)))


def _integrate_U_tensor(F, lam: float, spec: QuadratureSpec) -> IntegralResult:
    beta = 0.0 if spec.decay is None else spec.decay - (3.0 + lam)

    def g(xi):
        zp, zn = np.empty((xi.size, 0), dtype=complex), 1j * (1 - xi) / (1 + xi)
        return F(zp, zn) * np.abs(1 + xi) ** (-2.0 * (2.0 + lam))

    scale = 4.0 * c_lambda(1, lam)
    v1, a1 = _disc_integral(g, lam, spec.angular_order, spec.radial_order, beta)
    v0, _ = _disc_integral(g, lam, max(spec.angular_order // 2, 4),
                           max(spec.radial_order // 2, 4), beta)
    return IntegralResult(
        value=scale * v1,
        abs_integral=scale * a1,
        richardson_delta=scale * abs(v1 - v0),
        n_evals=spec.angular_order * spec.radial_order * 5 // 4,
    )


# ---------------------------------------------------------------------------
# Boundary parametrization helpers


def _boundary_decay_probe(G, n: int, T: float) -> None:
    """Reject integrands that do not decay like |u|^-(2n-1+delta)."""
    scales = T * 4.0 ** np.arange(1, 5)
    mags = []
    for R in scales:
        t = np.array([R, -R, 0.0])
        if n == 1:
            zp = np.zeros((3, 0), dtype=complex)
            t = np.array([R, -R, 0.7 * R])
        else:
            zp = np.zeros((3, n - 1), dtype=complex)
            zp[2, 0] = math.sqrt(R)
        mags.append(float(np.max(np.abs(G(zp, t)))))
    weighted = [m * R ** (2 * n - 1 + 0.01) for m, R in zip(mags, scales)]
    if weighted[-1] > 4.0 * weighted[0] + 1e-300:
        raise DecayError(
            "boundary integrand does not decay fast enough to integrate")


def _integrate_bU_tensor(G, spec: QuadratureSpec) -> IntegralResult:
    """n = 1 boundary integral: GL core on [-T, T] plus Jacobi-matched tails."""
    T = spec.truncation
    d = 2.0 if spec.decay is None else spec.decay
    btail = d - 2.0
    if btail <= -1:
        raise DecayError("boundary decay exponent must exceed 1")
    _boundary_decay_probe(G, 1, T)

    def run(k: int) -> tuple[complex, float]:
        xc, wc = roots_legendre(2 * k)
        tc = xc * T
        vc = G(np.zeros((tc.size, 0), dtype=complex), tc)
        val = complex(np.sum(wc * T * vc))
        av = float(np.sum(wc * T * np.abs(vc)))
        xs, ws = roots_jacobi(k, 0.0, btail)
        s = (xs + 1.0) / 2.0
        ws = ws * 2.0 ** (-(btail + 1.0))
        for sign in (+1.0, -1.0):
            vt = G(np.zeros((s.size, 0), dtype=complex), sign * T / s)
            h = vt * (T / s ** 2) * s ** -btail
            val += complex(np.sum(ws * h))
            av += float(np.sum(ws * np.abs(h)))
        return val, av

    k = spec.radial_order
    v1, a1 = run(k)
    v0, _ = run(max(k // 2, 4))
    return IntegralResult(value=v1, abs_integral=a1,
                          richardson_delta=abs(v1 - v0), n_evals=6 * k)


def _sobol_block(dim: int, m: int, seed: int) -> np.ndarray:
    eng = qmc.Sobol(d=dim, scramble=True, seed=seed)
    mexp = max(int(math.log2(max(m, 4))), 2)
    return np.clip(eng.random_base2(mexp), 1e-15, 1 - 1e-15)


def _boundary_block(u01: np.ndarray, n: int, T: float):
    """Map uniform cube points to boundary coordinates with QMC weight.

    Returns (zp, t, w, vol) with int_bU G dbeta = vol * E[G(zp, t) w].
    """
    phi = (u01[:, 0] - 0.5) * math.pi
    t = T * np.tan(phi)
    w = T / np.cos(phi) ** 2
    if n == 1:
        return np.zeros((len(t), 0), dtype=complex), t, w, math.pi
    psi = u01[:, 1] * (math.pi / 2)
    v = T * np.tan(psi)
    w = w * T / np.cos(psi) ** 2 * v ** (n - 2)
    g = ndtri(u01[:, 2:])
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    zp = np.sqrt(v)[:, None] * (g[:, 0::2] + 1j * g[:, 1::2])
    vol = math.pi * (math.pi / 2) * (2 * math.pi) ** (n - 1) * 0.5
    return zp, t, w, vol


def _integrate_bU_mc(G, n: int, spec: QuadratureSpec) -> IntegralResult:
    T = spec.truncation
    _boundary_decay_probe(G, n, T)
    dim = 1 if n == 1 else 2 * n
    mrep = max(spec.sample_count // spec.replicates, 256)
    means, amean = [], []
    for r in range(spec.replicates):
        u01 = _sobol_block(dim, mrep, spec.seed + r)
        zp, t, w, vol = _boundary_block(u01, n, T)
        vals = G(zp, t) * w
        means.append(vol * np.mean(vals))
        amean.append(vol * float(np.mean(np.abs(vals))))
    means = np.array(means)
    val = complex(means.mean())
    se = math.sqrt(np.var(means.real) + np.var(means.imag)) / math.sqrt(len(means))
    return IntegralResult(value=val, abs_integral=float(np.mean(amean)),
                          stderr_estimate=se,
                          n_evals=spec.replicates * mrep)


def _integrate_U_mc(F, lam: float, n: int, spec: QuadratureSpec) -> IntegralResult:
    """Slice-fibered volume integral with Jacobi nodes in the height t."""
    d = spec.decay
    alpha_outer = 0.0 if d is None else max(d - lam - n - 2.0, 0.0)
    n_outer = spec.outer_order
    xg, wg = roots_jacobi(n_outer, alpha_outer, lam)
    theta = (xg + 1.0) * (math.pi / 4)
    T_outer = 2.0
    tvals = T_outer * np.tan(theta)
    jac = (math.pi / 4) * T_outer / np.cos(theta) ** 2
    resid = tvals ** lam * jac / ((1 - xg) ** alpha_outer * (1 + xg) ** lam)
    dim = 1 if n == 1 else 2 * n
    mrep = max(spec.sample_count // (spec.replicates * n_outer), 128)
    cl = c_lambda(n, lam)
    rep_vals, rep_abs = [], []
    for r in range(spec.replicates):
        tot = 0j
        tota = 0.0
        for k in range(n_outer):
            u01 = _sobol_block(dim, mrep, spec.seed + 7919 * r + k)
            zp, t, w, vol = _boundary_block(u01, n, spec.truncation)
            zn = t + 1j * np.sum(np.abs(zp) ** 2, axis=1) + 1j * tvals[k]
            vals = F(zp, zn) * w
            tot += wg[k] * resid[k] * vol * np.mean(vals)
            tota += wg[k] * resid[k] * vol * float(np.mean(np.abs(vals)))
        rep_vals.append(cl * tot)
        rep_abs.append(cl * tota)
    rv = np.array(rep_vals)
    val = complex(rv.mean())
    se = math.sqrt(np.var(rv.real) + np.var(rv.imag)) / math.sqrt(len(rv))
    return IntegralResult(value=val, abs_integral=float(np.mean(rep_abs)),
                          stderr_estimate=se,
                          n_evals=spec.replicates * n_outer * mrep)


# ---------------------------------------------------------------------------
# Public integrators


def integrate_U(F, lam: float, spec: QuadratureSpec, n: int | None = None) -> IntegralResult:
    """Approximate int_U F dV_lam.

    F is a HoloFun or a vectorized callable F(zp, zn).  Absolute
    integrability is the caller's lookout; a divergent integrand shows up
    as ``converged == False`` under refinement.
    """
    fn, inferred = _as_volume_fn(F)
    n = _resolve_n(n, inferred)
    if not lam > -1:
        raise DomainError("lambda must exceed -1")
    if spec.engine is Engine.TENSOR:
        if n != 1:
            raise DomainError("the TENSOR engine supports n = 1 only")
        return _integrate_U_tensor(fn, lam, spec)
    return _integrate_U_mc(fn, lam, n, spec)


def integrate_bU(G, spec: QuadratureSpec, n: int | None = None) -> IntegralResult:
    """Approximate int_bU G dbeta in Heisenberg coordinates.

    G(zp, t) is evaluated at the boundary point (zp, t + i|zp|^2) and must
    decay at least like |u|^-(2n-1+delta); non-decay raises DecayError.
    """
    n = _resolve_n(n, getattr(G, "n", None))
    if spec.engine is Engine.TENSOR:
        if n != 1:
            raise DomainError("the TENSOR engine supports n = 1 only")
        return _integrate_bU_tensor(G, spec)
    return _integrate_bU_mc(G, n, spec)


def boundary_restriction(f, eps: float = 0.0, n: int | None = None):
    """Turn a function on U into boundary coordinates: G(zp, t) = f(u + eps i)."""
    fn, inferred = _as_volume_fn(f)
    n = _resolve_n(n, inferred)

    def G(zp, t):
        zn = t + 1j * np.sum(np.abs(zp) ** 2, axis=1) + 1j * eps
        return fn(zp, zn)

    G.n = n
    return G


# ---------------------------------------------------------------------------
# Norms


def hardy_norm_U(f, p: float, spec: QuadratureSpec, n: int | None = None,
                 f_decay: float | None = None) -> float:
    """Hardy norm sup_eps ( int_bU |f(u + eps i)|^p dbeta )^(1/p).

    Evaluated on the dyadic grid eps = 1, 1/2, ..., 2^-levels; the means
    must be nondecreasing as eps decreases (they are, by subharmonicity),
    and the last value is taken as the supremum.
    """
    fn, inferred = _as_volume_fn(f)
    n = _resolve_n(n, inferred)
    ispec = spec if f_decay is None else spec.with_(decay=f_decay * p)
    vals = []
    errs = []
    for k in range(spec.levels + 1):
        eps = 2.0 ** -k

        def G(zp, t, _e=eps):
            zn = t + 1j * np.sum(np.abs(zp) ** 2, axis=1) + 1j * _e
            return np.abs(fn(zp, zn)) ** p

        res = integrate_bU(G, ispec, n=n)
        vals.append(res.value.real)
        errs.append(3 * res.stderr_estimate + res.richardson_delta)
    arr = np.array(vals)
    slack = np.array(errs[1:]) + np.array(errs[:-1]) + 1e-9 * np.abs(arr[1:])
    if np.any(np.diff(arr) < -slack):
        warnings.warn("Hardy means are not monotone in eps beyond tolerance; "
                      "quadrature error is likely dominating", stacklevel=2)
    return float(arr[-1]) ** (1.0 / p)


def _sphere_points(n: int, m: int, seed: int) -> np.ndarray:
    u01 = _sobol_block(2 * n, m, seed)
    g = ndtri(u01)
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    return g[:, 0::2] + 1j * g[:, 1::2]


def hardy_norm_B(F, p: float, spec: QuadratureSpec, n: int = 1) -> float:
    """Hardy norm on the ball: sup over r = 1 - 2^-k of the sphere p-means.

    F is a vectorized callable on (m, n) complex arrays.  The circle uses
    the trapezoid rule (spectral); higher-dimensional spheres use
    quasi-Monte Carlo points.
    """
    best = 0.0
    if n == 1:
        M = max(spec.angular_order, 64)
        zeta = np.exp(2j * math.pi * np.arange(M) / M)[:, None]
    else:
        m = max(spec.sample_count // spec.levels, 1 << 12)
        zeta = _sphere_points(n, m, spec.seed)
    for k in range(1, spec.levels + 1):
        r = 1.0 - 2.0 ** -k
        vals = np.abs(F(r * zeta)) ** p
        best = max(best, float(np.mean(vals)))
    return best ** (1.0 / p)


def _ball_samples(n: int, m: int, lam: float, seed: int) -> np.ndarray:
    """Scrambled-Sobol samples of the probability measure dv_lam on the ball:
    radius via the Beta(n, lam+1) inverse CDF of r^2, direction uniform."""
    from scipy.special import betaincinv
    u01 = _sobol_block(2 * n + 1, m, seed)
    u = betaincinv(n, lam + 1.0, u01[:, 0])
    r = np.sqrt(u)
    g = ndtri(u01[:, 1:])
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    pts = r[:, None] * g
    return pts[:, 0::2] + 1j * pts[:, 1::2]


def ball_probability_integral(F, lam: float, spec: QuadratureSpec,
                              n: int = 1) -> IntegralResult:
    """int_B F dv_lam against the probability measure dv_lam.

    TENSOR (n = 1) uses the anchored disc nodes; MC uses Beta-radial
    importance sampling, which cancels the boundary weight exactly.
    """
    if spec.engine is Engine.TENSOR:
        if n != 1:
            raise DomainError("the TENSOR engine supports n = 1 only")
        beta = 0.0 if spec.decay is None else spec.decay
        scale = 4.0 * c_lambda(1, lam)

        def g(xi):
            return F(xi[:, None])

        v1, a1 = _disc_integral(g, lam, spec.angular_order, spec.radial_order, beta)
        v0, _ = _disc_integral(g, lam, max(spec.angular_order // 2, 4),
                               max(spec.radial_order // 2, 4), beta)
        return IntegralResult(value=scale * v1, abs_integral=scale * a1,
                              richardson_delta=scale * abs(v1 - v0))
    mrep = max(spec.sample_count // spec.replicates, 256)
    means, amean = [], []
    for r in range(spec.replicates):
        xi = _ball_samples(n, mrep, lam, spec.seed + r)
        vals = F(xi)
        means.append(np.mean(vals))
        amean.append(float(np.mean(np.abs(vals))))
    means = np.array(means)
    se = math.sqrt(np.var(means.real) + np.var(means.imag)) / math.sqrt(len(means))
    return IntegralResult(value=complex(means.mean()),
                          abs_integral=float(np.mean(amean)),
                          stderr_estimate=se)


def bergman_norm_B(F, p: float, lam: float, spec: QuadratureSpec,
                   n: int = 1) -> float:
    """Weighted Bergman norm on the ball, ( int_B |F|^p dv_lam )^(1/p)."""
    res = ball_probability_integral(lambda xi: np.abs(F(xi)) ** p, lam, spec, n=n)
    return float(res.value.real) ** (1.0 / p)


def bergman_norm_U(f, p: float, lam: float, spec: QuadratureSpec,
                   n: int | None = None, f_decay: float | None = None) -> float:
    """Weighted Bergman norm on the half-space, ( int_U |f|^p dV_lam )^(1/p)."""
    fn, inferred = _as_volume_fn(f)
    n = _resolve_n(n, inferred)
    ispec = spec if f_decay is None else spec.with_(decay=f_decay * p)
    res = integrate_U(lambda zp, zn: np.abs(fn(zp, zn)) ** p, lam, ispec, n=n)
    return float(res.value.real) ** (1.0 / p)
