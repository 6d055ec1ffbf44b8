"""Special functions and explicit constants of the toolkit.

Gamma is a Lanczos approximation (g = 7, 9 terms) accurate to better than
1e-13 relative on the positive axis; no reflection is needed because every
argument in the package is positive.  Complex powers are principal-branch
and restricted to bases with positive real part, which is exactly the
range the kernel geometry guarantees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .geometry import Point, rho

# Lanczos coefficients, g = 7.
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_fn(x: float) -> float:
    """Gamma(x) for x > 0, relative error below 1e-12 on [1e-3, 50]."""
    if not x > 0:
        raise DomainError(f"gamma_fn requires a positive argument, got {x}")
    if x < 0.5:
        # recurrence, not reflection: arguments stay positive
        return gamma_fn(x + 1.0) / x
    z = x - 1.0
    acc = _LANCZOS_C[0]
    for i, c in enumerate(_LANCZOS_C[1:], start=1):
        acc += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * acc


def cpow_principal(base, s: float):
    """base**s via the principal logarithm, requiring Re base > 0.

    Accepts a scalar or an ndarray.  A base with nonpositive real part
    signals a point outside U or a geometry bug and raises DomainError.
    """
    b = np.asarray(base, dtype=complex)
    if np.any(b.real <= 0):
        bad = b.real.min() if b.ndim else b.real
        raise DomainError(f"cpow_principal needs Re base > 0 (min Re = {bad})")
    out = np.exp(s * np.log(b))
    if np.ndim(base) == 0:
        return complex(out)
    return out


@dataclass(frozen=True)
class WeightParams:
    """Parameter bundle (n, lambda, theta, gamma, p, N, t) with range checks."""

    n: int = 1
    lam: float = 0.0
    theta: float = 1.0
    gamma_exp: float = 0.0
    p: float = 2.0
    N: int = 0
    t_exp: float = 0.0

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("dimension n must be >= 1")
        if not self.lam > -1:
            raise DomainError("lambda must exceed -1")
        if not self.theta > 0:
            raise DomainError("theta must be positive")
        if not self.gamma_exp > -1:
            raise DomainError("gamma must exceed -1")
        if not self.p > 0:
            raise DomainError("p must be positive")
        if self.N < 0:
            raise DomainError("N must be a nonnegative integer")


def c_lambda(n: int, lam: float) -> float:
    """Normalizing constant Gamma(n+1+lam) / (4 pi^n Gamma(1+lam)) of dV_lam."""
    if not lam > -1:
        raise DomainError("lambda must exceed -1")
    return gamma_fn(n + 1 + lam) / (4.0 * math.pi ** n * gamma_fn(1.0 + lam))


def b_coeff(N: int, lam: float) -> complex:
    """Representation constant (-2i)^N Gamma(1+lam) / Gamma(1+lam+N).

    Evaluated through the recurrence b_0 = 1, b_{N+1} = b_N (-2i)/(1+lam+N),
    which is exact where the Gamma quotient would round.
    """
    if N < 0:
        raise DomainError("N must be a nonnegative integer")
    if not lam > -1:
        raise DomainError("lambda must exceed -1")
    b = 1.0 + 0j
    for k in range(N):
        b *= -2j / (1.0 + lam + k)
    return b


def identity_rhs_boundary(n: int, theta: float, z: Point) -> float:
    """Closed form 4 pi^n Gamma(theta) / Gamma((n+theta)/2)^2 * rho(z)^(-theta)."""
    if not theta > 0:
        raise DomainError("theta must be positive")
    r = rho(z)
    if r <= 0:
        raise DomainError("z must be interior")
    return (4.0 * math.pi ** n * gamma_fn(theta)
            / gamma_fn((n + theta) / 2.0) ** 2 * r ** -theta)


def identity_rhs_volume(n: int, theta: float, gamma_exp: float, z: Point) -> float:
    """Closed form of the weighted volume integral:

    4 pi^n Gamma(1+gamma) Gamma(theta) / Gamma((n+1+theta+gamma)/2)^2 * rho(z)^(-theta).
    """
    if not theta > 0:
        raise DomainError("theta must be positive")
    if not gamma_exp > -1:
        raise DomainError("gamma must exceed -1")
    r = rho(z)
    if r <= 0:
        raise DomainError("z must be interior")
    return (4.0 * math.pi ** n * gamma_fn(1.0 + gamma_exp) * gamma_fn(theta)
            / gamma_fn((n + 1 + theta + gamma_exp) / 2.0) ** 2 * r ** -theta)


def hardy_constant(n: int, p: float) -> float:
    """Isometry constant c_{n,p} = (4 pi^n / (n-1)!)^(1/p) of the transfer map."""
    if not p > 0:
        raise DomainError("p must be positive")
    return (4.0 * math.pi ** n / math.factorial(n - 1)) ** (1.0 / p)
