"""Complex-power calculus for wave functions of the form psi = z**c.

The field value z is a positive real; the exponent c = x + iy is complex.
All operations here are pure functions over immutable values: pointwise
evaluation, analytic partial derivatives in (x, y), finite-difference
Cauchy-Riemann and Laplace checks, and contour quadrature over circles in
the c-plane.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum


class DomainError(ValueError):
    """Raised when an argument leaves the domain of an operation."""


@dataclass(frozen=True)
class CParam:
    """Complex exponent c = x + iy."""

    x: float
    y: float

    def as_complex(self) -> complex:
        return complex(self.x, self.y)

    def conjugate(self) -> "CParam":
        return CParam(self.x, -self.y)

    def modulus_sq(self) -> float:
        return self.x * self.x + self.y * self.y


@dataclass(frozen=True)
class WaveValue:
    """Point value psi = u + iv."""

    u: float
    v: float

    @classmethod
    def from_complex(cls, w: complex) -> "WaveValue":
        return cls(w.real, w.imag)

    def as_complex(self) -> complex:
        return complex(self.u, self.v)

    def magnitude(self) -> float:
        return math.hypot(self.u, self.v)

    def phase(self) -> float:
        return math.atan2(self.v, self.u)


class NormalizabilityKind(Enum):
    HALF_LINE_CONVERGENT = "half_line_convergent"
    RESTRICTED = "restricted"


@dataclass(frozen=True)
class NormalizabilityDomain:
    kind: NormalizabilityKind
    domain_bounds: tuple[float, float] | None = None


@dataclass(frozen=True)
class ContourResult:
    """Quadrature result plus an accuracy flag for under-resolved contours."""

    value: WaveValue
    accuracy_warning: bool = False


# Finite-difference steps balancing truncation against round-off at
# double precision.
STEP_FIRST = 1e-5
STEP_SECOND = 1e-4

MIN_CONTOUR_POINTS = 64


def _require_positive(z: float) -> None:
    if z <= 0.0:
        raise DomainError(f"z must be positive for the real-log branch, got {z}")


def eval_psi(z: float, c: CParam) -> WaveValue:
    """Evaluate psi = z**c = z**x * (cos(y ln z) + i sin(y ln z))."""
    _require_positive(z)
    return WaveValue.from_complex(cmath.exp(c.as_complex() * math.log(z)))


def partials_uv(z: float, c: CParam) -> tuple[float, float, float, float]:
    """Analytic partials (du/dx, dv/dy, du/dy, dv/dx) of psi in the exponent.

    du/dx = dv/dy = z**x ln(z) cos(y ln z) and du/dy = -dv/dx by
    construction, so the Cauchy-Riemann equations hold identically.
    """
    _require_positive(z)
    lnz = math.log(z)
    zx = z ** c.x
    cos_t = math.cos(c.y * lnz)
    sin_t = math.sin(c.y * lnz)
    du_dx = zx * lnz * cos_t
    dv_dy = zx * lnz * cos_t
    du_dy = -zx * lnz * sin_t
    dv_dx = zx * lnz * sin_t
    return du_dx, dv_dy, du_dy, dv_dx


def check_cauchy_riemann(z: float, c: CParam, h: float = STEP_FIRST) -> tuple[float, float]:
    """Finite-difference Cauchy-Riemann residuals (|u_x - v_y|, |u_y + v_x|).

    Central differences of eval_psi over the exponent components; both
    residuals are pure discretization error, O(h**2).
    """
    _require_positive(z)
    if not 0.0 < h < 0.1:
        raise DomainError(f"step size must lie in (0, 0.1), got {h}")
    px = eval_psi(z, CParam(c.x + h, c.y))
    mx = eval_psi(z, CParam(c.x - h, c.y))
    py = eval_psi(z, CParam(c.x, c.y + h))
    my = eval_psi(z, CParam(c.x, c.y - h))
    du_dx = (px.u - mx.u) / (2.0 * h)
    dv_dx = (px.v - mx.v) / (2.0 * h)
    du_dy = (py.u - my.u) / (2.0 * h)
    dv_dy = (py.v - my.v) / (2.0 * h)
    return abs(du_dx - dv_dy), abs(du_dy + dv_dx)


def dpsi_dc(z: float, c: CParam) -> WaveValue:
    """First derivative of psi with respect to c: (ln z) * psi."""
    _require_positive(z)
    return WaveValue.from_complex(math.log(z) * eval_psi(z, c).as_complex())


def d2psi_dc2(z: float, c: CParam) -> WaveValue:
    """Second derivative of psi with respect to c: (ln z)**2 * psi."""
    _require_positive(z)
    return WaveValue.from_complex(math.log(z) ** 2 * eval_psi(z, c).as_complex())


def laplace_residual(z0: float, c0: CParam, h: float = STEP_SECOND) -> tuple[float, float]:
    """Five-point-stencil Laplacian residuals of u and v over (x, y).

    Both components of an analytic function are harmonic, so the residuals
    vanish up to discretization error.
    """
    _require_positive(z0)
    center = eval_psi(z0, c0)
    px = eval_psi(z0, CParam(c0.x + h, c0.y))
    mx = eval_psi(z0, CParam(c0.x - h, c0.y))
    py = eval_psi(z0, CParam(c0.x, c0.y + h))
    my = eval_psi(z0, CParam(c0.x, c0.y - h))
    inv_h2 = 1.0 / (h * h)
    lap_u = (px.u + mx.u + py.u + my.u - 4.0 * center.u) * inv_h2
    lap_v = (px.v + mx.v + py.v + my.v - 4.0 * center.v) * inv_h2
    return abs(lap_u), abs(lap_v)


def contour_integral(
    z: float, center: CParam, radius: float, n_points: int = 1024
) -> ContourResult:
    """Trapezoidal quadrature of the closed contour integral of psi(c) dc.

    The contour is the circle of given radius around ``center`` in the
    c-plane. psi is entire in c for fixed z > 0, so the exact value is 0;
    the returned magnitude is quadrature error only. Uniform sampling of a
    periodic integrand makes the trapezoid rule spectrally accurate.
    """
    _require_positive(z)
    if radius <= 0.0:
        raise DomainError(f"radius must be positive, got {radius}")
    lnz = math.log(z)
    c0 = center.as_complex()
    total = 0j
    dtheta = 2.0 * math.pi / n_points
    for j in range(n_points):
        theta = j * dtheta
        offset = radius * cmath.exp(1j * theta)
        total += cmath.exp((c0 + offset) * lnz) * (1j * offset)
    total *= dtheta
    return ContourResult(
        value=WaveValue.from_complex(total),
        accuracy_warning=n_points < MIN_CONTOUR_POINTS,
    )


def cauchy_formula(
    z: float, a: CParam, center: CParam, radius: float, n_points: int = 2048
) -> WaveValue:
    """Reconstruct psi(a) from the Cauchy integral formula over a circle.

    ``a`` must lie strictly inside the contour.
    """
    _require_positive(z)
    if radius <= 0.0:
        raise DomainError(f"radius must be positive, got {radius}")
    ac = a.as_complex()
    c0 = center.as_complex()
    if abs(ac - c0) >= radius:
        raise DomainError("evaluation point must lie strictly inside the contour")
    lnz = math.log(z)
    total = 0j
    dtheta = 2.0 * math.pi / n_points
    for j in range(n_points):
        theta = j * dtheta
        offset = radius * cmath.exp(1j * theta)
        cj = c0 + offset
        total += cmath.exp(cj * lnz) / (cj - ac) * (1j * offset)
    total *= dtheta / (2j * math.pi)
    return WaveValue.from_complex(total)


def normalizability(z: float, x: float) -> NormalizabilityDomain:
    """Classify convergence of the squared-magnitude integral over x.

    The integral of exp(2 x ln z) converges on a half-line when
    (z < 1 and x > 0) or (z > 1 and x < 0); otherwise x must be restricted
    to a finite domain supplied by the caller. z = 1 makes the integrand
    constant and is treated as restricted.
    """
    _require_positive(z)
    if z != 1.0 and ((z < 1.0 and x > 0.0) or (z > 1.0 and x < 0.0)):
        return NormalizabilityDomain(NormalizabilityKind.HALF_LINE_CONVERGENT)
    return NormalizabilityDomain(NormalizabilityKind.RESTRICTED)
