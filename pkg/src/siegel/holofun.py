"""Symbolic test functions on the half-space with exact tangential derivatives.

The catalog is a closed expression language over {constants, coordinates,
kernel powers rho2(., w0)^s, log rho2(., w0), sums, products}.  It is closed
under the operators L_j = d/dz_j + 2i conj(z_j) d/dz_n (j < n) and
L_n = d/dz_n: differentiating any member produces another member, possibly
with coefficients that are polynomials in conj(z').  Those conjugate
coordinates are constants for the L_j (Wirtinger calculus), which keeps the
derivatives exact; evaluation treats them as the conjugate of the point.

A trapezoid Cauchy-integral differentiator is included as an independent
numerical oracle for the symbolic derivatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import ndtri
from scipy.stats import qmc

from .errors import DimensionMismatch, DomainError
from .geometry import Point, base_point, cayley_arr, rho, rho_arr, rho2, rho2_arr
from .special import cpow_principal

GRID_SEED = 0xC0FFEE


# ---------------------------------------------------------------------------
# Multi-indices


@dataclass(frozen=True)
class MultiIndex:
    """alpha in N_0^n with |alpha|, alpha' and <alpha> = |alpha'|/2 + alpha_n."""

    alpha: tuple[int, ...]

    def __post_init__(self):
        if len(self.alpha) < 1 or any(a < 0 for a in self.alpha):
            raise ValueError("multi-index entries must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def order(self) -> int:
        return sum(self.alpha)

    @property
    def aprime(self) -> tuple[int, ...]:
        return self.alpha[:-1]

    @property
    def bracket(self) -> float:
        return sum(self.aprime) / 2.0 + self.alpha[-1]

    def __add__(self, other: "MultiIndex") -> "MultiIndex":
        if self.n != other.n:
            raise DimensionMismatch("multi-index length mismatch")
        return MultiIndex(tuple(a + b for a, b in zip(self.alpha, other.alpha)))


def multi_index(*alpha: int) -> MultiIndex:
    return MultiIndex(tuple(alpha))


# ---------------------------------------------------------------------------
# Expression nodes


class HoloFun:
    """Base node.  Trees are immutable and evaluation is pure."""

    n: int

    # -- evaluation ---------------------------------------------------------
    def eval(self, zp: np.ndarray, zn: np.ndarray) -> np.ndarray:
        """Evaluate on a batch; zp has shape (m, n-1), zn shape (m,)."""
        zp = np.asarray(zp, dtype=complex)
        zn = np.asarray(zn, dtype=complex)
        if zp.ndim != 2 or zp.shape[1] != self.n - 1:
            raise DimensionMismatch(
                f"zp must have shape (m, {self.n - 1}), got {zp.shape}")
        out = self._eval(zp, zn)
        return np.broadcast_to(out, zn.shape).astype(complex)

    def at(self, z: Point) -> complex:
        if z.n != self.n:
            raise DimensionMismatch(f"point dimension {z.n} != {self.n}")
        zp, zn = z.as_arrays()
        return complex(self.eval(zp, zn)[0])

    def _eval(self, zp, zn):  # pragma: no cover - abstract
        raise NotImplementedError

    # -- algebra ------------------------------------------------------------
    def _coerce(self, other) -> "HoloFun":
        if isinstance(other, HoloFun):
            return other
        return Const(complex(other), self.n)

    def __add__(self, other):
        return hsum(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return hsum(self, hprod(Const(-1.0 + 0j, self.n), self._coerce(other)))

    def __rsub__(self, other):
        return hsum(self._coerce(other), hprod(Const(-1.0 + 0j, self.n), self))

    def __mul__(self, other):
        return hprod(self, self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return hprod(Const(-1.0 + 0j, self.n), self)


@dataclass(frozen=True)
class Const(HoloFun):
    value: complex
    n: int

    def _eval(self, zp, zn):
        return np.full(zn.shape, self.value, dtype=complex)


@dataclass(frozen=True)
class Coord(HoloFun):
    """Coordinate z_j, 1-based; j = n is the distinguished last coordinate."""

    j: int
    n: int

    def __post_init__(self):
        if not 1 <= self.j <= self.n:
            raise DimensionMismatch(f"coordinate index {self.j} out of range")

    def _eval(self, zp, zn):
        return zn if self.j == self.n else zp[:, self.j - 1]


@dataclass(frozen=True)
class ConjCoord(HoloFun):
    """conj(z_j) for j < n; appears only as a derivative coefficient."""

    j: int
    n: int

    def __post_init__(self):
        if not 1 <= self.j <= self.n - 1:
            raise DimensionMismatch(f"conjugate index {self.j} out of range")

    def _eval(self, zp, zn):
        return np.conj(zp[:, self.j - 1])


@dataclass(frozen=True)
class KernelPow(HoloFun):
    """rho2(., w0)^s for a fixed reference point w0 and real exponent s."""

    w0: Point
    s: float
    n: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "n", self.w0.n)

    def _eval(self, zp, zn):
        w0p, w0n = self.w0.as_arrays()
        base = rho2_arr(zp, zn, w0p[0], w0n[0])
        return cpow_principal(base, self.s)


@dataclass(frozen=True)
class LogKernel(HoloFun):
    """log rho2(., w0), principal branch (Re rho2 > 0 on U)."""

    w0: Point
    n: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "n", self.w0.n)

    def _eval(self, zp, zn):
        w0p, w0n = self.w0.as_arrays()
        base = rho2_arr(zp, zn, w0p[0], w0n[0])
        if np.any(base.real <= 0):
            raise DomainError("log kernel base has nonpositive real part")
        return np.log(base)


@dataclass(frozen=True)
class Sum(HoloFun):
    terms: tuple[HoloFun, ...]
    n: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "n", self.terms[0].n)

    def _eval(self, zp, zn):
        acc = np.zeros(zn.shape, dtype=complex)
        for t in self.terms:
            acc = acc + t._eval(zp, zn)
        return acc


@dataclass(frozen=True)
class Product(HoloFun):
    factors: tuple[HoloFun, ...]
    n: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "n", self.factors[0].n)

    def _eval(self, zp, zn):
        acc = np.ones(zn.shape, dtype=complex)
        for f in self.factors:
            acc = acc * f._eval(zp, zn)
        return acc


# ---------------------------------------------------------------------------
# Smart constructors


def const(value, n: int) -> Const:
    return Const(complex(value), n)


def coord(j: int, n: int) -> Coord:
    return Coord(j, n)


def conj_coord(j: int, n: int) -> ConjCoord:
    return ConjCoord(j, n)


def kernel_pow(w0: Point, s: float) -> HoloFun:
    if s == 0:
        return Const(1.0 + 0j, w0.n)
    return KernelPow(w0, float(s))


def log_kernel(w0: Point) -> LogKernel:
    return LogKernel(w0)


def _same_n(funs) -> int:
    n = funs[0].n
    for f in funs[1:]:
        if f.n != n:
            raise DimensionMismatch("mixed ambient dimensions in expression")
    return n


def hsum(*terms: HoloFun) -> HoloFun:
    flat: list[HoloFun] = []
    for t in terms:
        flat.extend(t.terms if isinstance(t, Sum) else (t,))
    n = _same_n(flat)
    cval = sum((t.value for t in flat if isinstance(t, Const)), 0j)
    rest = [t for t in flat if not isinstance(t, Const)]
    if cval != 0:
        rest.append(Const(cval, n))
    if not rest:
        return Const(0j, n)
    if len(rest) == 1:
        return rest[0]
    return Sum(tuple(rest))


def hprod(*factors: HoloFun) -> HoloFun:
    flat: list[HoloFun] = []
    for f in factors:
        flat.extend(f.factors if isinstance(f, Product) else (f,))
    n = _same_n(flat)
    cval = 1.0 + 0j
    rest: list[HoloFun] = []
    for f in flat:
        if isinstance(f, Const):
            cval *= f.value
        else:
            rest.append(f)
    if cval == 0:
        return Const(0j, n)
    # merge kernel powers sharing the reference point
    merged: list[HoloFun] = []
    kp: dict[Point, float] = {}
    for f in rest:
        if isinstance(f, KernelPow):
            kp[f.w0] = kp.get(f.w0, 0.0) + f.s
        else:
            merged.append(f)
    for w0, s in kp.items():
        if s != 0:
            merged.append(KernelPow(w0, s))
    if cval != 1:
        merged.insert(0, Const(cval, n))
    if not merged:
        return Const(1.0 + 0j, n)
    if len(merged) == 1:
        return merged[0]
    return Product(tuple(merged))


def anchored(f: HoloFun) -> HoloFun:
    """f - f(i): forces the vanishing-at-i normalization."""
    return hsum(f, Const(-f.at(base_point(f.n)), f.n))


# ---------------------------------------------------------------------------
# Exact differentiation


def _conj_linear(j: int, w0: Point) -> HoloFun:
    """conj(z_j) - conj(w0_j), the coefficient produced by L_j on kernels."""
    n = w0.n
    c = -w0.zprime[j - 1].conjugate()
    if c == 0:
        return ConjCoord(j, n)
    return Sum((ConjCoord(j, n), Const(c, n)))


def apply_L(f: HoloFun, j: int) -> HoloFun:
    """Exact L_j derivative of a catalog expression (j is 1-based)."""
    n = f.n
    if not 1 <= j <= n:
        raise DimensionMismatch(f"operator index {j} out of range for n={n}")
    zero = Const(0j, n)
    if isinstance(f, (Const, ConjCoord)):
        return zero
    if isinstance(f, Coord):
        if f.j == n:
            # L_j z_n = 2i conj(z_j) for j < n, and L_n z_n = 1
            return Const(1.0 + 0j, n) if j == n else hprod(Const(2j, n), ConjCoord(j, n))
        return Const(1.0 + 0j, n) if f.j == j else zero
    if isinstance(f, KernelPow):
        lead = Const(-0.5j * f.s, n) if j == n else \
            hprod(Const(f.s, n), _conj_linear(j, f.w0))
        return hprod(lead, kernel_pow(f.w0, f.s - 1.0))
    if isinstance(f, LogKernel):
        lead = Const(-0.5j, n) if j == n else _conj_linear(j, f.w0)
        return hprod(lead, kernel_pow(f.w0, -1.0))
    if isinstance(f, Sum):
        return hsum(*(apply_L(t, j) for t in f.terms))
    if isinstance(f, Product):
        terms = []
        for k, fk in enumerate(f.factors):
            dk = apply_L(fk, j)
            if isinstance(dk, Const) and dk.value == 0:
                continue
            terms.append(hprod(*f.factors[:k], dk, *f.factors[k + 1:]))
        return hsum(*terms) if terms else zero
    raise TypeError(f"not a catalog expression: {type(f).__name__}")


def apply_L_alpha(f: HoloFun, alpha: MultiIndex) -> HoloFun:
    """L^alpha = L_1^a1 ... L_n^an (the L_j commute on holomorphic functions)."""
    if alpha.n != f.n:
        raise DimensionMismatch("multi-index length != ambient dimension")
    out = f
    for j, a in enumerate(alpha.alpha, start=1):
        for _ in range(a):
            out = apply_L(out, j)
    return out


def kernel_l_alpha_coeff(n: int, lam: float, alpha: MultiIndex) -> complex:
    """Constant C with L^alpha rho2(z,w)^-(n+1+lam) =
    C (conj(z')-conj(w'))^alpha' rho2(z,w)^-(n+1+lam+|alpha|).

    Computed by the one-operator-at-a-time recurrence, never a closed form.
    """
    if alpha.n != n:
        raise DimensionMismatch("multi-index length != ambient dimension")
    s = n + 1.0 + lam
    c = 1.0 + 0j
    for j, a in enumerate(alpha.alpha, start=1):
        for _ in range(a):
            c *= 0.5j * s if j == n else -s
            s += 1.0
    return c


def kernel_derivative_parts(f: HoloFun):
    """Decompose a derivative of a kernel power into canonical pieces.

    Returns (coeff, conj_powers, w0, s) such that f equals
    coeff * prod_j (conj(z_j) - conj(w0_j))^conj_powers[j] * rho2(., w0)^s,
    or None when f is not of that shape.
    """
    factors: tuple[HoloFun, ...]
    if isinstance(f, Product):
        factors = f.factors
    else:
        factors = (f,)
    coeff = 1.0 + 0j
    kp = None
    powers = None
    for fac in factors:
        if isinstance(fac, Const):
            coeff *= fac.value
        elif isinstance(fac, KernelPow):
            if kp is not None:
                return None
            kp = fac
        elif isinstance(fac, (ConjCoord, Sum)):
            if kp is None and powers is None:
                powers = {}
            j = _conj_linear_index(fac)
            if j is None:
                return None
            powers = powers or {}
            powers[j] = powers.get(j, 0) + 1
        else:
            return None
    if kp is None:
        return None
    cp = tuple((powers or {}).get(j, 0) for j in range(1, kp.n))
    # confirm the affine pieces match the kernel's reference point
    for fac in factors:
        if isinstance(fac, Sum):
            j = _conj_linear_index(fac)
            want = -kp.w0.zprime[j - 1].conjugate()
            got = sum(t.value for t in fac.terms if isinstance(t, Const))
            if not np.isclose(got, want):
                return None
    return coeff, cp, kp.w0, kp.s


def _conj_linear_index(f: HoloFun):
    if isinstance(f, ConjCoord):
        return f.j
    if isinstance(f, Sum) and len(f.terms) == 2:
        cc = [t for t in f.terms if isinstance(t, ConjCoord)]
        cs = [t for t in f.terms if isinstance(t, Const)]
        if len(cc) == 1 and len(cs) == 1:
            return cc[0].j
    return None


# ---------------------------------------------------------------------------
# Numerical oracle: Cauchy-integral differentiation


def cauchy_derivative(f, z: Point, j: int, m: int = 1,
                      radius: float | None = None, nodes: int = 64) -> complex:
    """m-th partial d^m/dz_j^m via the trapezoid rule on a circle.

    Spectrally accurate for f holomorphic on the circle's closed disc;
    used as an independent cross-check of the symbolic derivatives.
    Raises DomainError when the circle exits the half-space.
    """
    n = z.n
    if not 1 <= j <= n:
        raise DimensionMismatch(f"coordinate index {j} out of range")
    if radius is None:
        radius = min(0.1, rho(z) / 4.0) if j == n else 0.1
    theta = 2.0 * math.pi * np.arange(nodes) / nodes
    ring = radius * np.exp(1j * theta)
    zp = np.tile(np.asarray(z.zprime, dtype=complex), (nodes, 1))
    zn = np.full(nodes, z.zn, dtype=complex)
    if j == n:
        zn = zn + ring
    else:
        zp[:, j - 1] += ring
    if np.any(rho_arr(zp, zn) <= 0):
        raise DomainError("differentiation circle exits the half-space; shrink radius")
    vals = f.eval(zp, zn) if isinstance(f, HoloFun) else np.asarray(f(zp, zn))
    return complex(math.factorial(m) / (radius ** m * nodes)
                   * np.sum(vals * np.exp(-1j * m * theta)))


def numeric_L(f, z: Point, j: int, radius: float | None = None,
              nodes: int = 64) -> complex:
    """L_j via Cauchy partials: d_j f + 2i conj(z_j) d_n f (oracle only)."""
    if j == z.n:
        return cauchy_derivative(f, z, j, 1, radius, nodes)
    dj = cauchy_derivative(f, z, j, 1, radius, nodes)
    dn = cauchy_derivative(f, z, z.n, 1, radius, nodes)
    return dj + 2j * z.zprime[j - 1].conjugate() * dn


# ---------------------------------------------------------------------------
# Invariant gradient and semi-norm estimators


def invariant_gradient(f: HoloFun, z: Point) -> float:
    """|grad~ f(z)| = (2 rho sum_{j<n} |L_j f|^2 + 8 rho^2 |L_n f|^2)^(1/2)."""
    zp, zn = z.as_arrays()
    return float(invariant_gradient_arr(f, zp, zn)[0])


def invariant_gradient_arr(f: HoloFun, zp, zn) -> np.ndarray:
    n = f.n
    r = rho_arr(np.asarray(zp, dtype=complex), np.asarray(zn, dtype=complex))
    acc = np.zeros(np.shape(zn), dtype=float)
    for j in range(1, n):
        acc += 2.0 * r * np.abs(apply_L(f, j).eval(zp, zn)) ** 2
    acc += 8.0 * r ** 2 * np.abs(apply_L(f, n).eval(zp, zn)) ** 2
    return np.sqrt(acc)


def bloch_seminorm_estimate(f: HoloFun, grid=None) -> float:
    """max of the invariant gradient over a grid: a certified lower bound
    of the Bloch semi-norm."""
    zp, zn = grid if grid is not None else standard_grid(f.n)
    return float(np.max(invariant_gradient_arr(f, zp, zn)))


def weighted_derivative_sup(f: HoloFun, alpha: MultiIndex, grid=None) -> float:
    """max over the grid of rho(z)^<alpha> |L^alpha f(z)|."""
    zp, zn = grid if grid is not None else standard_grid(f.n)
    g = apply_L_alpha(f, alpha)
    r = rho_arr(np.asarray(zp, dtype=complex), np.asarray(zn, dtype=complex))
    return float(np.max(r ** alpha.bracket * np.abs(g.eval(zp, zn))))


# ---------------------------------------------------------------------------
# Grids


def _ball_sobol(n: int, m: int, seed: int) -> np.ndarray:
    """Quasi-uniform points of the unit ball of C^n, shape (m, n) complex."""
    eng = qmc.Sobol(d=2 * n + 1, scramble=True, seed=seed)
    u = np.clip(eng.random(m), 1e-12, 1 - 1e-12)
    r = u[:, 0] ** (1.0 / (2 * n))
    g = ndtri(u[:, 1:])
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    pts = r[:, None] * g
    return pts[:, 0::2] + 1j * pts[:, 1::2]


def escape_points(n: int, count: int = 64) -> tuple[np.ndarray, np.ndarray]:
    """Deterministic sequences approaching the boundary and infinity."""
    depth = max(count // 4, 1)
    zp_rows, zn_rows = [], []
    zeros = np.zeros(n - 1, dtype=complex)
    for k in range(depth):
        zp_rows.append(zeros)
        zn_rows.append(1j * 2.0 ** -k)          # rho -> 0
        zp_rows.append(zeros)
        zn_rows.append(1j * 2.0 ** k)           # rho -> infinity
        zp_rows.append(zeros)
        zn_rows.append(2.0 ** k + 1j)           # |z| -> infinity, rho = 1
        if n == 1:
            zp_rows.append(zeros)
            zn_rows.append(-(2.0 ** k) + 1j)
        else:
            e1 = zeros.copy()
            e1[0] = 2.0 ** (k / 2.0)
            zp_rows.append(e1)                  # |z'| -> infinity, rho = 1
            zn_rows.append(1j * (1.0 + 2.0 ** k))
    return np.array(zp_rows, dtype=complex), np.array(zn_rows, dtype=complex)


def standard_grid(n: int, n_ball: int = 512, n_escape: int = 64,
                  seed: int = GRID_SEED) -> tuple[np.ndarray, np.ndarray]:
    """Cayley image of a quasi-uniform ball set plus escape sequences.

    This is the default sample set for sup-norm estimates; it probes the
    bulk of the domain and both ends of the compactified boundary.
    """
    xi = _ball_sobol(n, n_ball, seed)
    zp, zn = cayley_arr(xi[:, :-1], xi[:, -1])
    ep, en = escape_points(n, n_escape)
    return np.vstack([zp, ep]), np.concatenate([zn, en])


def refined_grid(n: int, factor: int = 4, seed: int = GRID_SEED):
    """Grid enlarged by the given factor, for certificate stability checks."""
    return standard_grid(n, 512 * factor, 64 * 2, seed + 1)


# ---------------------------------------------------------------------------
# Membership tags


VALID_TAG_KINDS = ("S_t", "korenblum", "bloch_tilde", "bergman_a1", "hardy")


@dataclass(frozen=True)
class SpaceTag:
    """Claimed membership in a function space, with a numeric witness."""

    kind: str
    param: float | None = None

    def __post_init__(self):
        if self.kind not in VALID_TAG_KINDS:
            raise ValueError(f"unknown space tag kind {self.kind!r}")


class CertificateError(ValueError):
    """A claimed membership failed its numeric witness check."""


def membership_witness(f: HoloFun, tag: SpaceTag, grid=None) -> float:
    """Grid sup realizing the tag's defining bound."""
    zp, zn = grid if grid is not None else standard_grid(f.n)
    zp = np.asarray(zp, dtype=complex)
    zn = np.asarray(zn, dtype=complex)
    if tag.kind == "S_t":
        return float(np.max(np.abs(zn + 1j) ** tag.param * np.abs(f.eval(zp, zn))))
    if tag.kind == "korenblum":
        return float(np.max(rho_arr(zp, zn) ** tag.param * np.abs(f.eval(zp, zn))))
    if tag.kind == "bloch_tilde":
        return float(np.max(invariant_gradient_arr(f, zp, zn)))
    if tag.kind == "hardy":
        # pointwise Hardy witness: sup rho^{n/p} |f|
        return float(np.max(rho_arr(zp, zn) ** (f.n / tag.param) * np.abs(f.eval(zp, zn))))
    raise CertificateError(
        f"tag {tag.kind!r} is certified by quadrature, not by a grid witness")


def check_certificate(f: HoloFun, tag: SpaceTag, rel_growth: float = 0.05):
    """Verify a membership claim: finite witness, stable under refinement x4.

    Returns (witness, refined_witness).  Raises CertificateError otherwise.
    """
    if tag.kind == "bloch_tilde" and abs(f.at(base_point(f.n))) > 1e-12:
        raise CertificateError("bloch_tilde requires f(i) = 0")
    w = membership_witness(f, tag, standard_grid(f.n))
    w4 = membership_witness(f, tag, refined_grid(f.n))
    if not (np.isfinite(w) and np.isfinite(w4)):
        raise CertificateError(f"witness for {tag.kind} is not finite")
    if w4 > w * (1.0 + rel_growth):
        raise CertificateError(
            f"witness for {tag.kind} grew {w4 / w:.3f}x under grid refinement")
    return w, w4


def tagged(f: HoloFun, tag: SpaceTag) -> HoloFun:
    """Validate the membership certificate and hand the function back."""
    check_certificate(f, tag)
    return f


# ---------------------------------------------------------------------------
# Catalog of Bloch-type test functions


def standard_catalog(n: int) -> list[tuple[str, HoloFun]]:
    """Named vanish-at-i test functions used by the semi-norm suites."""
    i_pt = base_point(n)
    w_far = Point((0j,) * (n - 1), 2j)
    if n == 1:
        w_off = Point((), 0.5 + 2j)
    else:
        w_off = Point((0.3 + 0.1j,) + (0j,) * (n - 2), 2j)
    k_i = anchored(kernel_pow(i_pt, -1.0))
    k_far = anchored(kernel_pow(w_far, -1.0))
    cat = [
        ("log_i", log_kernel(i_pt)),
        ("kernel_inv_i", k_i),
        ("kernel_inv_far", k_far),
        ("kernel_sqrt_i", anchored(kernel_pow(i_pt, -0.5))),
        ("log_off", anchored(log_kernel(w_off))),
        ("product_mix", hprod(k_i, k_far)),
        ("sum_mix", hsum(k_i, hprod(Const(0.5j, n), k_far))),
    ]
    if n > 1:
        cat.append(("coord_kernel", hprod(coord(1, n), kernel_pow(i_pt, -1.0))))
    return cat
