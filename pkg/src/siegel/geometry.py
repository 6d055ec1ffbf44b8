"""Points and elementary geometry of the Siegel upper half-space.

The half-space is U = {z in C^n : Im z_n > |z'|^2} with defining function
rho(z) = Im z_n - |z'|^2 and its sesquiholomorphic polarization
rho2(z, w) = (i/2)(conj(w_n) - z_n) - z' . conj(w').  The module also
provides the Cayley transform between U and the unit ball, the Heisenberg
group acting on U, nonisotropic dilations, the normalizing affine maps
sigma_z, and the Bergman metric.

Everything is a pure function of immutable values.  Array variants
(suffix ``_arr``) operate on batches: ``zp`` has shape (m, n-1) and
``zn`` shape (m,).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, DomainError

# Relative tolerance for deciding that rho(z) vanishes.  The boundary is a
# measure-zero set, so exact hits never happen in floating point.
BOUNDARY_RTOL = 1e-12


class PointClass(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


@dataclass(frozen=True)
class Point:
    """A point of C^n split as (z', z_n)."""

    zprime: tuple[complex, ...]
    zn: complex

    @property
    def n(self) -> int:
        return len(self.zprime) + 1

    def classify(self) -> PointClass:
        r = rho(self)
        scale = 1.0 + abs(self.zn) ** 2 + sum(abs(c) ** 2 for c in self.zprime)
        if abs(r) <= BOUNDARY_RTOL * scale:
            return PointClass.BOUNDARY
        return PointClass.INTERIOR if r > 0 else PointClass.EXTERIOR

    def as_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """(1, n-1) and (1,) arrays for use with the batch helpers."""
        return (np.asarray(self.zprime, dtype=complex).reshape(1, -1),
                np.asarray([self.zn], dtype=complex))


def point(zprime, zn) -> Point:
    """Build a Point from any complex sequence and a scalar."""
    return Point(tuple(complex(c) for c in zprime), complex(zn))


def base_point(n: int) -> Point:
    """The distinguished point i = (0', i)."""
    return Point((0j,) * (n - 1), 1j)


def _check_same_n(a, b) -> None:
    if a.n != b.n:
        raise DimensionMismatch(f"dimension mismatch: {a.n} != {b.n}")


@dataclass(frozen=True)
class BallPoint:
    """A point of the unit ball of C^n."""

    xi: tuple[complex, ...]

    @property
    def n(self) -> int:
        return len(self.xi)

    def norm(self) -> float:
        return math.sqrt(sum(abs(c) ** 2 for c in self.xi))


def ball_point(xi) -> BallPoint:
    return BallPoint(tuple(complex(c) for c in xi))


@dataclass(frozen=True)
class HeisenbergElement:
    """An element [zeta, t] of the Heisenberg group C^(n-1) x R."""

    zeta: tuple[complex, ...]
    t: float

    @property
    def n(self) -> int:
        return len(self.zeta) + 1


# ---------------------------------------------------------------------------
# Defining functions


def rho(z: Point) -> float:
    """rho(z) = Im z_n - |z'|^2."""
    return float(z.zn.imag - sum(abs(c) ** 2 for c in z.zprime))


def rho2(z: Point, w: Point) -> complex:
    """rho2(z, w) = (i/2)(conj(w_n) - z_n) - z' . conj(w').

    Sesquiholomorphic in (z, w); rho2(z, z) = rho(z), and
    Re rho2(z, w) > 0 whenever both points lie in U.
    """
    _check_same_n(z, w)
    dot = sum(a * b.conjugate() for a, b in zip(z.zprime, w.zprime))
    return 0.5j * (w.zn.conjugate() - z.zn) - dot


def rho_arr(zp: np.ndarray, zn: np.ndarray) -> np.ndarray:
    return zn.imag - np.sum(np.abs(zp) ** 2, axis=-1)


def rho2_arr(zp, zn, wp, wn) -> np.ndarray:
    dot = np.sum(zp * np.conj(wp), axis=-1)
    return 0.5j * (np.conj(wn) - zn) - dot


# ---------------------------------------------------------------------------
# Cayley transform


def cayley(xi: BallPoint) -> Point:
    """Biholomorphism B -> U, (xi', xi_n) -> (xi'/(1+xi_n), i(1-xi_n)/(1+xi_n))."""
    den = 1 + xi.xi[-1]
    if den == 0:
        raise DomainError("Cayley transform undefined at xi_n = -1")
    zp = tuple(c / den for c in xi.xi[:-1])
    return Point(zp, 1j * (1 - xi.xi[-1]) / den)


def cayley_inv(z: Point) -> BallPoint:
    """Inverse map U -> B, (z', z_n) -> (2i z'/(i+z_n), (i-z_n)/(i+z_n))."""
    den = 1j + z.zn
    if den == 0:
        raise DomainError("inverse Cayley transform undefined at z_n = -i")
    xip = tuple(2j * c / den for c in z.zprime)
    return BallPoint(xip + ((1j - z.zn) / den,))


def cayley_arr(xip: np.ndarray, xin: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    den = 1 + xin
    return xip / den[..., None], 1j * (1 - xin) / den


def jacobian_phi(xi: BallPoint) -> float:
    """Real Jacobian of the Cayley transform: 4 / |1+xi_n|^(2(n+1))."""
    den = abs(1 + xi.xi[-1])
    if den == 0:
        raise DomainError("Jacobian undefined at xi_n = -1")
    return 4.0 / den ** (2 * (xi.n + 1))


def jacobian_phi_inv(z: Point) -> float:
    """Real Jacobian of the inverse map: 1 / (4 |rho2(z, i)|^(2(n+1)))."""
    r = abs(rho2(z, base_point(z.n)))
    return 1.0 / (4.0 * r ** (2 * (z.n + 1)))


# ---------------------------------------------------------------------------
# Heisenberg group


def heis_mul(h1: HeisenbergElement, h2: HeisenbergElement) -> HeisenbergElement:
    """[zeta, t] . [eta, s] = [zeta + eta, t + s + 2 Im(zeta . conj(eta))]."""
    _check_same_n(h1, h2)
    dot = sum(a * b.conjugate() for a, b in zip(h1.zeta, h2.zeta))
    zeta = tuple(a + b for a, b in zip(h1.zeta, h2.zeta))
    return HeisenbergElement(zeta, h1.t + h2.t + 2.0 * dot.imag)


def heis_identity(n: int) -> HeisenbergElement:
    return HeisenbergElement((0j,) * (n - 1), 0.0)


def heis_inv(h: HeisenbergElement) -> HeisenbergElement:
    return HeisenbergElement(tuple(-c for c in h.zeta), -h.t)


def heis_act(h: HeisenbergElement, z: Point) -> Point:
    """Affine action (z', z_n) -> (z' + zeta, z_n + t + 2i z'.conj(zeta) + i|zeta|^2).

    Preserves rho, hence maps U to U and bU to bU.
    """
    _check_same_n(h, z)
    dot = sum(a * b.conjugate() for a, b in zip(z.zprime, h.zeta))
    norm2 = sum(abs(c) ** 2 for c in h.zeta)
    zp = tuple(a + b for a, b in zip(z.zprime, h.zeta))
    return Point(zp, z.zn + h.t + 2j * dot + 1j * norm2)


def heis_from_point(z: Point) -> HeisenbergElement:
    """h_z = [-z', -Re z_n]; moves z onto the vertical axis: h_z(z) = rho(z) i."""
    return HeisenbergElement(tuple(-c for c in z.zprime), -z.zn.real)


# ---------------------------------------------------------------------------
# Dilations and the normalizing maps sigma_z


def dilate(r: float, z: Point) -> Point:
    """Nonisotropic dilation delta_r(z) = (r z', r^2 z_n); rho scales by r^2."""
    if r <= 0:
        raise DomainError("dilation factor must be positive")
    return Point(tuple(r * c for c in z.zprime), r * r * z.zn)


@dataclass(frozen=True)
class AffineMap:
    """Holomorphic affine self-map of C^n in closed form.

    z' -> a z' + b,  z_n -> c z_n + d . z' + e  with a, c real positive.
    Compositions of Heisenberg translations and dilations all have this
    shape, so Jacobians are exact.
    """

    a: float
    b: tuple[complex, ...]
    c: float
    d: tuple[complex, ...]
    e: complex

    @property
    def n(self) -> int:
        return len(self.b) + 1

    def __call__(self, z: Point) -> Point:
        _check_same_n(self, z)
        zp = tuple(self.a * u + v for u, v in zip(z.zprime, self.b))
        dot = sum(u * v for u, v in zip(self.d, z.zprime))
        return Point(zp, self.c * z.zn + dot + self.e)

    def boundary_jacobian(self) -> float:
        """Jacobian of the induced map on (z', t) coordinates of bU."""
        return self.a ** (2 * (self.n - 1)) * self.c


def sigma(z0: Point) -> AffineMap:
    """sigma_z0 = delta_{rho(z0)^(-1/2)} o h_z0; maps z0 to the point i."""
    r0 = rho(z0)
    if r0 <= 0:
        raise DomainError("sigma requires an interior point")
    r = r0 ** -0.5
    norm2 = sum(abs(c) ** 2 for c in z0.zprime)
    return AffineMap(
        a=r,
        b=tuple(-r * c for c in z0.zprime),
        c=r * r,
        d=tuple(-2j * r * r * c.conjugate() for c in z0.zprime),
        e=r * r * (-z0.zn.real + 1j * norm2),
    )


def sigma_inv(z0: Point) -> AffineMap:
    """Inverse of sigma(z0): h_z0^(-1) o delta_{rho(z0)^(1/2)}."""
    r0 = rho(z0)
    if r0 <= 0:
        raise DomainError("sigma requires an interior point")
    s = r0 ** 0.5
    norm2 = sum(abs(c) ** 2 for c in z0.zprime)
    return AffineMap(
        a=s,
        b=z0.zprime,
        c=s * s,
        d=tuple(2j * s * c.conjugate() for c in z0.zprime),
        e=z0.zn.real + 1j * norm2,
    )


# ---------------------------------------------------------------------------
# Bergman metric


def bergman_metric(u: Point, v: Point) -> float:
    """beta(u, v) = atanh sqrt(1 - rho(u) rho(v) / |rho2(u, v)|^2).

    The sqrt argument lies in [0, 1] analytically; round-off may push it
    out by ~1e-12, so it is clamped.
    """
    ru, rv = rho(u), rho(v)
    if ru <= 0 or rv <= 0:
        raise DomainError("Bergman metric requires interior points")
    arg = 1.0 - ru * rv / abs(rho2(u, v)) ** 2
    arg = min(max(arg, 0.0), 1.0)
    s = math.sqrt(arg)
    if s >= 1.0:
        return math.inf
    return math.atanh(s)
