"""Bergman kernels, projections, the reproducing formula, duality pairing,
measure embedding, and the Hardy transfer map between the half-space and
the ball."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .geometry import Point, base_point, cayley_arr, rho, rho_arr, rho2_arr
from .holofun import HoloFun, MultiIndex, apply_L, apply_L_alpha
from .quadrature import IntegralResult, QuadratureSpec, integrate_U
from .special import b_coeff, cpow_principal, hardy_constant


@dataclass(frozen=True)
class KernelSpec:
    """Which kernel: dimension, weight, plain K_lam or the modified variant
    that subtracts the value anchored at the point i."""

    n: int
    lam: float
    modified: bool = False

    def __post_init__(self):
        if not self.lam > -1:
            raise DomainError("lambda must exceed -1")
        if self.n < 1:
            raise DomainError("dimension n must be >= 1")

    @property
    def exponent(self) -> float:
        return self.n + 1.0 + self.lam

    @property
    def decay(self) -> float:
        """Decay exponent in w at infinity (one order better when modified)."""
        return self.exponent + (1.0 if self.modified else 0.0)


def kernel_arr(spec: KernelSpec, z: Point, wp: np.ndarray, wn: np.ndarray) -> np.ndarray:
    """Kernel values K(z, w) for a batch of w."""
    zp0, zn0 = z.as_arrays()
    base = rho2_arr(zp0[0], zn0[0], wp, wn)
    out = cpow_principal(base, -spec.exponent)
    if spec.modified:
        ip, inn = base_point(spec.n).as_arrays()
        out = out - cpow_principal(rho2_arr(ip[0], inn[0], wp, wn), -spec.exponent)
    return out


def kernel(spec: KernelSpec, z: Point, w: Point) -> complex:
    """K_lam(z, w) = rho2(z, w)^-(n+1+lam), or its i-anchored modification."""
    wp, wn = w.as_arrays()
    return complex(kernel_arr(spec, z, wp, wn)[0])


def _as_fn(g):
    return g.eval if isinstance(g, HoloFun) else g


def project(spec: KernelSpec, g, z: Point, quad: QuadratureSpec,
            g_decay: float = 0.0) -> complex:
    """Projection value int_U K(z, w) g(w) dV_lam(w) by quadrature.

    ``g_decay`` is the decay exponent of g at infinity (0 for bounded g);
    it sharpens the deterministic engine's node placement.
    """
    gfn = _as_fn(g)

    def F(wp, wn):
        return kernel_arr(spec, z, wp, wn) * gfn(wp, wn)

    q = quad.with_(decay=spec.decay + g_decay)
    return integrate_U(F, spec.lam, q, n=spec.n).value


def reproduce(f: HoloFun, N: int, lam: float, z: Point,
              quad: QuadratureSpec) -> complex:
    """b_N * (modified projection of rho^N L_n^N f) at z.

    For f in the vanish-at-i Bloch class this reproduces f(z) for every
    N >= 0 and lam > -1; the N-th tangential derivative is exact symbolic.
    """
    n = f.n
    fi = f.at(base_point(n))
    if abs(fi) > 1e-10:
        raise DomainError(f"reproduce requires f(i) = 0, got |f(i)| = {abs(fi):.2e}")
    if N < 0:
        raise DomainError("N must be a nonnegative integer")
    spec = KernelSpec(n, lam, modified=True)
    g = apply_L_alpha(f, MultiIndex((0,) * (n - 1) + (N,)))
    gfn = g.eval

    def F(wp, wn):
        return kernel_arr(spec, z, wp, wn) * rho_arr(wp, wn) ** N * gfn(wp, wn)

    q = quad.with_(decay=spec.decay)
    return b_coeff(N, lam) * integrate_U(F, lam, q, n=n).value


def pairing(f: HoloFun, g, lam: float, quad: QuadratureSpec,
            g_decay: float | None = None) -> complex:
    """Duality pairing <f, g> = int_U rho d_n f conj(g) dV_lam.

    Bounded by ||rho d_n f||_inf ||g||_{A^1_lam}; both factors are
    computable in the toolkit, and the slack is worth reporting.
    """
    n = f.n
    dnf = apply_L(f, n).eval
    gfn = _as_fn(g)

    def F(wp, wn):
        return rho_arr(wp, wn) * dnf(wp, wn) * np.conj(gfn(wp, wn))

    q = quad if g_decay is None else quad.with_(decay=g_decay)
    return integrate_U(F, lam, q, n=n).value


@dataclass(frozen=True)
class DiscreteMeasure:
    """Finite atomic measure sum_k weight_k delta_{z_k} with interior atoms."""

    atoms: tuple[tuple[Point, complex], ...]

    def __post_init__(self):
        for z, _ in self.atoms:
            if rho(z) <= 0:
                raise DomainError("measure atoms must be interior points")

    @property
    def n(self) -> int:
        return self.atoms[0][0].n

    def total_variation(self) -> float:
        return float(sum(abs(c) for _, c in self.atoms))


def measure_embed_fn(mu: DiscreteMeasure, lam: float):
    """Vectorized w -> g(w) = sum_k c_k rho(z_k) / rho2(w, z_k)^(n+2+lam)."""
    n = mu.n
    s = n + 2.0 + lam

    def g(wp, wn):
        acc = np.zeros(np.shape(wn), dtype=complex)
        for zk, ck in mu.atoms:
            zkp, zkn = zk.as_arrays()
            base = rho2_arr(wp, wn, zkp[0], zkn[0])
            acc = acc + ck * rho(zk) * cpow_principal(base, -s)
        return acc

    g.n = n
    return g


def measure_embed(mu: DiscreteMeasure, lam: float, w: Point) -> complex:
    """Embedded function of the measure evaluated at one point."""
    wp, wn = w.as_arrays()
    return complex(measure_embed_fn(mu, lam)(wp, wn)[0])


def hardy_transfer(f, p: float, xi) -> complex:
    """Transfer map value c_{n,p} (1+xi_n)^(-2n/p) f(Phi(xi)) at a ball point."""
    fn = _as_fn(f)
    arr = np.asarray(getattr(xi, "xi", xi), dtype=complex).reshape(1, -1)
    return complex(hardy_transfer_fn(f, p, n=arr.shape[1])(arr)[0])


def hardy_transfer_fn(f, p: float, n: int | None = None):
    """Vectorized transfer map on (m, n) complex ball points."""
    fn = _as_fn(f)
    n = n if n is not None else getattr(f, "n", None)
    if n is None:
        raise DomainError("ambient dimension n is required for a raw callable")
    c = hardy_constant(n, p)

    def Tf(xi):
        xi = np.asarray(xi, dtype=complex)
        xin = xi[:, -1]
        if np.any(np.abs(1 + xin) == 0):
            raise DomainError("transfer map undefined at xi = -e_n")
        zp, zn = cayley_arr(xi[:, :-1], xin)
        return c * cpow_principal(1 + xin, -2.0 * n / p) * fn(zp, zn)

    Tf.n = n
    return Tf


def ktilde_l1_log_ratio(spec: KernelSpec, z: Point,
                        quad: QuadratureSpec) -> tuple[float, float]:
    """(L^1 mass of the modified kernel at z, its log majorant).

    The ratio of the two stays below a fixed constant as z escapes to the
    boundary or infinity; the frozen regression bound lives in the
    constants file.
    """
    if not spec.modified:
        raise DomainError("the L^1 log bound concerns the modified kernel")

    def F(wp, wn):
        return np.abs(kernel_arr(spec, z, wp, wn))

    q = quad.with_(decay=spec.decay)
    mass = integrate_U(F, spec.lam, q, n=spec.n).value.real
    from .geometry import rho2
    r2 = abs(rho2(z, base_point(spec.n)))
    majorant = 1.0 + math.log(r2 ** 2 / rho(z))
    return mass, majorant
