"""Residuals of the Schrodinger equation for psi = z(r_x, r_y, t)**c.

Substituting psi = z**c into the time-dependent Schrodinger equation with
potential U yields a single complex residual in z,

    i hbar z_t + (hbar^2/2m) [z_xx + z_yy + ((c-1)/z) (z_x^2 + z_y^2)]
        - (z/c) U = 0,

whose real and imaginary parts separate into the (R) and (I) equations.
The residual functions here evaluate those expressions pointwise for any
candidate field; a field solves an equation exactly when the corresponding
residual vanishes.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence, TextIO

from .wavecore import CParam, DomainError, STEP_FIRST, STEP_SECOND

ScalarField = Callable[[float, float, float], float]
Point = tuple[float, float, float]


@dataclass(frozen=True)
class PhysicalParams:
    """hbar and mass; defaults are natural units hbar = m = 1."""

    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        if self.hbar <= 0.0 or self.mass <= 0.0:
            raise DomainError("hbar and mass must be positive")

    @property
    def beta(self) -> float:
        return self.hbar / self.mass


NATURAL_UNITS = PhysicalParams()


@dataclass(frozen=True)
class ZField:
    """Positive scalar field z(r_x, r_y, t) with optional analytic partials.

    When a partial derivative callable is absent it is computed by central
    finite differences of ``value`` (second order, steps ``h1``/``h2``).
    """

    value: ScalarField
    z_t: ScalarField | None = None
    z_x: ScalarField | None = None
    z_y: ScalarField | None = None
    z_xx: ScalarField | None = None
    z_yy: ScalarField | None = None
    h1: float = STEP_FIRST
    h2: float = STEP_SECOND

    def __call__(self, rx: float, ry: float, t: float) -> float:
        return self.value(rx, ry, t)

    def partials(self, point: Point) -> tuple[float, float, float, float, float, float]:
        """Return (z, z_t, z_x, z_y, z_xx, z_yy) at the point."""
        rx, ry, t = point
        z = self.value(rx, ry, t)
        if z <= 0.0:
            raise DomainError(f"field must be positive, got z={z} at {point}")
        f = self.value
        h1, h2 = self.h1, self.h2
        zt = self.z_t(rx, ry, t) if self.z_t else (
            (f(rx, ry, t + h1) - f(rx, ry, t - h1)) / (2.0 * h1))
        zx = self.z_x(rx, ry, t) if self.z_x else (
            (f(rx + h1, ry, t) - f(rx - h1, ry, t)) / (2.0 * h1))
        zy = self.z_y(rx, ry, t) if self.z_y else (
            (f(rx, ry + h1, t) - f(rx, ry - h1, t)) / (2.0 * h1))
        zxx = self.z_xx(rx, ry, t) if self.z_xx else (
            (f(rx + h2, ry, t) - 2.0 * z + f(rx - h2, ry, t)) / (h2 * h2))
        zyy = self.z_yy(rx, ry, t) if self.z_yy else (
            (f(rx, ry + h2, t) - 2.0 * z + f(rx, ry - h2, t)) / (h2 * h2))
        return z, zt, zx, zy, zxx, zyy

    def has_analytic_partials(self) -> bool:
        return all(p is not None
                   for p in (self.z_t, self.z_x, self.z_y, self.z_xx, self.z_yy))


def constant_field(z0: float = 1.0) -> ZField:
    zero = lambda rx, ry, t: 0.0
    return ZField(value=lambda rx, ry, t: z0,
                  z_t=zero, z_x=zero, z_y=zero, z_xx=zero, z_yy=zero)


def exponential_field(a_x: float, a_y: float, a_t: float, scale: float = 1.0) -> ZField:
    """z = scale * exp(a_x r_x + a_y r_y + a_t t) with analytic partials."""
    val = lambda rx, ry, t: scale * math.exp(a_x * rx + a_y * ry + a_t * t)
    return ZField(
        value=val,
        z_t=lambda rx, ry, t: a_t * val(rx, ry, t),
        z_x=lambda rx, ry, t: a_x * val(rx, ry, t),
        z_y=lambda rx, ry, t: a_y * val(rx, ry, t),
        z_xx=lambda rx, ry, t: a_x * a_x * val(rx, ry, t),
        z_yy=lambda rx, ry, t: a_y * a_y * val(rx, ry, t),
    )


def sum_field(a: ZField, b: ZField) -> ZField:
    """Pointwise sum of two fields (partials add when both are analytic)."""
    both = a.has_analytic_partials() and b.has_analytic_partials()
    add = lambda fa, fb: (lambda rx, ry, t: fa(rx, ry, t) + fb(rx, ry, t))
    return ZField(
        value=add(a.value, b.value),
        z_t=add(a.z_t, b.z_t) if both else None,
        z_x=add(a.z_x, b.z_x) if both else None,
        z_y=add(a.z_y, b.z_y) if both else None,
        z_xx=add(a.z_xx, b.z_xx) if both else None,
        z_yy=add(a.z_yy, b.z_yy) if both else None,
    )


@dataclass(frozen=True)
class Potential:
    """Potential energy term; only constant-in-space potentials are built in."""

    kind: str  # "fixed" or "energy_ladder"
    value_fixed: float

    @classmethod
    def fixed(cls, u_f: float) -> "Potential":
        return cls(kind="fixed", value_fixed=u_f)

    def at(self, rx: float, ry: float) -> float:
        return self.value_fixed


FREE = Potential.fixed(0.0)


def psi_partials(field: ZField, c: CParam, point: Point
                 ) -> tuple[complex, complex, complex, complex, complex]:
    """Chain-rule partials of psi = z**c at a point.

    Returns (psi_t, psi_x, psi_y, psi_xx, psi_yy) where, e.g.,
    psi_t = (c/z) psi z_t and
    psi_xx = (c/z) psi z_xx + c(c-1)/z^2 psi z_x^2.
    """
    z, zt, zx, zy, zxx, zyy = field.partials(point)
    cc = c.as_complex()
    psi = _psi_of_z(z, cc)
    over_z = cc / z
    quad = cc * (cc - 1.0) / (z * z)
    return (
        over_z * psi * zt,
        over_z * psi * zx,
        over_z * psi * zy,
        over_z * psi * zxx + quad * psi * zx * zx,
        over_z * psi * zyy + quad * psi * zy * zy,
    )


def _psi_of_z(z: float, cc: complex) -> complex:
    return cmath.exp(cc * math.log(z))


def complex_residual(field: ZField, c: CParam, params: PhysicalParams,
                     potential: Potential, point: Point) -> complex:
    """Complex Schrodinger residual in z at a point.

    The potential multiplier z/c is evaluated as z c* / (x^2 + y^2) to keep
    the real/imaginary split explicit.
    """
    mod2 = c.modulus_sq()
    if mod2 == 0.0:
        raise DomainError("c must be nonzero")
    rx, ry, _ = point
    z, zt, zx, zy, zxx, zyy = field.partials(point)
    cc = c.as_complex()
    kin = (params.hbar ** 2 / (2.0 * params.mass)) * (
        zxx + zyy + (cc - 1.0) / z * (zx * zx + zy * zy))
    pot = z * c.conjugate().as_complex() / mod2 * potential.at(rx, ry)
    return 1j * params.hbar * zt + kin - pot


def real_residual(field: ZField, c: CParam, params: PhysicalParams,
                  potential: Potential, point: Point, scaled: bool = False) -> float:
    """Real part (R) of the residual.

    With ``scaled`` the residual is multiplied by 2m/hbar^2, the
    presentation used for the x=1, y=2 specialization.
    """
    mod2 = c.modulus_sq()
    if mod2 == 0.0:
        raise DomainError("c must be nonzero")
    rx, ry, _ = point
    z, _, zx, zy, zxx, zyy = field.partials(point)
    r = (params.hbar ** 2 / (2.0 * params.mass)) * (
        zxx + zyy + (c.x - 1.0) / z * (zx * zx + zy * zy)
    ) - z * c.x / mod2 * potential.at(rx, ry)
    if scaled:
        r *= 2.0 * params.mass / params.hbar ** 2
    return r


def imag_residual(field: ZField, c: CParam, params: PhysicalParams,
                  potential: Potential, point: Point, scaled: bool = False) -> float:
    """Imaginary part (I) of the residual.

    With ``scaled`` the residual is multiplied by m/hbar^2.
    """
    mod2 = c.modulus_sq()
    if mod2 == 0.0:
        raise DomainError("c must be nonzero")
    rx, ry, _ = point
    z, zt, zx, zy, _, _ = field.partials(point)
    r = (params.hbar * zt
         + (params.hbar ** 2 / (2.0 * params.mass)) * c.y / z * (zx * zx + zy * zy)
         + z * c.y / mod2 * potential.at(rx, ry))
    if scaled:
        r *= params.mass / params.hbar ** 2
    return r


@dataclass(frozen=True)
class GridReport:
    """Residuals sampled on a rectangular (r_x, r_y, t) lattice."""

    points: tuple[Point, ...]
    residual_real: tuple[float, ...]
    residual_imag: tuple[float, ...]
    grid_spec: dict = field(default_factory=dict)

    @property
    def max_abs_real(self) -> float:
        return max((abs(r) for r in self.residual_real), default=0.0)

    @property
    def max_abs_imag(self) -> float:
        return max((abs(r) for r in self.residual_imag), default=0.0)

    @property
    def mean_abs_real(self) -> float:
        n = len(self.residual_real)
        return sum(abs(r) for r in self.residual_real) / n if n else 0.0

    @property
    def mean_abs_imag(self) -> float:
        n = len(self.residual_imag)
        return sum(abs(r) for r in self.residual_imag) / n if n else 0.0

    def write_csv(self, out: TextIO) -> None:
        out.write("r_x,r_y,t,residual_real,residual_imag\n")
        for (rx, ry, t), rr, ri in zip(self.points, self.residual_real,
                                       self.residual_imag):
            out.write(f"{rx:.17g},{ry:.17g},{t:.17g},{rr:.17g},{ri:.17g}\n")

    def summary(self) -> dict:
        return {
            "grid": self.grid_spec,
            "n_points": len(self.points),
            "max_abs_real": self.max_abs_real,
            "max_abs_imag": self.max_abs_imag,
            "mean_abs_real": self.mean_abs_real,
            "mean_abs_imag": self.mean_abs_imag,
        }

    def summary_json(self) -> str:
        return json.dumps(self.summary(), sort_keys=True)


def evaluate_grid(field_: ZField, c: CParam, params: PhysicalParams,
                  potential: Potential,
                  rx_values: Sequence[float], ry_values: Sequence[float],
                  t_values: Sequence[float]) -> GridReport:
    """Evaluate both residuals on the product grid and aggregate."""
    points: list[Point] = []
    rr: list[float] = []
    ri: list[float] = []
    for rx in rx_values:
        for ry in ry_values:
            for t in t_values:
                p = (rx, ry, t)
                points.append(p)
                rr.append(real_residual(field_, c, params, potential, p))
                ri.append(imag_residual(field_, c, params, potential, p))
    spec = {
        "r_x": [min(rx_values), max(rx_values), len(rx_values)],
        "r_y": [min(ry_values), max(ry_values), len(ry_values)],
        "t": [min(t_values), max(t_values), len(t_values)],
    }
    return GridReport(points=tuple(points), residual_real=tuple(rr),
                      residual_imag=tuple(ri), grid_spec=spec)
