"""Closed-form vortex solutions of the imaginary (I) equation.

For a fixed potential U_f the (I) equation with exponent c = 1 + 2i admits
the exponential family

    z(t) = exp(+/- k s - 3 k^2 beta t),    k = sqrt(2 m U_f / (5 hbar^2)),

with s = r_x + r_y and beta = hbar/m. The plus branch ("1-vortex") reaches
z = 1 at t* = s / (3 k beta), where psi collapses to 1; the minus branch
("0-vortex") decays to 0 asymptotically. This module provides those
solutions, their (u, v)-plane trajectories, collapse classification,
normalization constants, the predicted 0-to-1 population ratio, and the
gradient-map line-segment geometry.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Sequence

from .schrodinger_field import PhysicalParams, ZField, exponential_field
from .wavecore import DomainError

# The closed forms below hold for the paper-default exponent x=1, y=2.
C_X = 1.0
C_Y = 2.0


class Branch(Enum):
    ONE_VORTEX = "one_vortex"    # +k branch, collapses to psi = 1
    ZERO_VORTEX = "zero_vortex"  # -k branch, collapses to the origin

    @property
    def sign(self) -> int:
        return 1 if self is Branch.ONE_VORTEX else -1

    @property
    def other(self) -> "Branch":
        return Branch.ZERO_VORTEX if self is Branch.ONE_VORTEX else Branch.ONE_VORTEX


def k_from_potential(u_f: float, params: PhysicalParams) -> float:
    """k = sqrt(2 m U_f / (5 hbar^2))."""
    if u_f < 0.0:
        raise DomainError(f"potential must be non-negative, got {u_f}")
    return math.sqrt(2.0 * params.mass * u_f / (5.0 * params.hbar ** 2))


@dataclass(frozen=True)
class VortexSolution:
    """One member of the exponential solution family.

    Negative s is canonicalized by negating s and flipping the branch,
    which leaves the field z(t) unchanged.
    """

    branch: Branch
    k: float
    s: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        if self.k <= 0.0:
            raise DomainError(f"k must be positive, got {self.k}")
        if self.beta <= 0.0:
            raise DomainError(f"beta must be positive, got {self.beta}")
        if self.s == 0.0:
            raise DomainError("s = r_x + r_y must be nonzero")
        if self.s < 0.0:
            object.__setattr__(self, "s", -self.s)
            object.__setattr__(self, "branch", self.branch.other)

    def log_z(self, t: float) -> float:
        return self.branch.sign * self.k * self.s - 3.0 * self.k ** 2 * self.beta * t

    def z(self, t: float) -> float:
        return math.exp(self.log_z(t))

    def psi(self, t: float) -> complex:
        """psi = z**(1+2i) = z * exp(2i ln z)."""
        lz = self.log_z(t)
        return cmath.exp(complex(C_X, C_Y) * lz)

    def to_field(self) -> ZField:
        """Full z(r_x, r_y, t) field with analytic partials.

        The exponent splits s = r_x + r_y symmetrically, matching the
        closed-form family.
        """
        sk = self.branch.sign * self.k
        return exponential_field(sk, sk, -3.0 * self.k ** 2 * self.beta)

    def descriptor(self) -> dict:
        return {
            "branch": self.branch.value,
            "k": self.k,
            "s": self.s,
            "beta": self.beta,
            "collapse_time": collapse_time(self),
        }


@dataclass(frozen=True)
class TrajectoryPoint:
    t: float
    u: float
    v: float
    radius: float
    gradient_radius: float


def real_solution(u_f: float, params: PhysicalParams, sign: int = 1) -> ZField:
    """Static solution of the real (R) equation for a fixed potential.

    z = exp(+/- (1/sqrt(2)) (r_x + r_y) k), time independent.
    """
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    a = sign * k_from_potential(u_f, params) / math.sqrt(2.0)
    return exponential_field(a, a, 0.0)


def imag_solution(branch: Branch, u_f: float, params: PhysicalParams,
                  s: float = 1.0) -> VortexSolution:
    """Exponential solution of the imaginary (I) equation for a fixed U_f."""
    if u_f <= 0.0:
        raise DomainError("potential must be positive; U_f = 0 gives a static "
                          "degenerate field with k = 0")
    return VortexSolution(branch=branch, k=k_from_potential(u_f, params),
                          s=s, beta=params.beta)


def trajectory(sol: VortexSolution, s: float | None = None,
               t_grid: Iterable[float] = ()) -> list[TrajectoryPoint]:
    """Sample the (u, v)-plane motion of the vortex at the given times."""
    if s is not None and s != sol.s:
        sol = replace(sol, s=s)
    points = []
    for t in t_grid:
        z = sol.z(t)
        phase = C_Y * sol.log_z(t)
        points.append(TrajectoryPoint(
            t=t,
            u=z * math.cos(phase),
            v=z * math.sin(phase),
            radius=z,
            gradient_radius=sol.k * z * math.sqrt(2.0),
        ))
    return points


def collapse_time(sol: VortexSolution, s: float | None = None) -> float:
    """Time at which z reaches 1 (1-vortex), or +inf for a 0-vortex."""
    if s is not None and s != sol.s:
        sol = replace(sol, s=s)
    if sol.branch is Branch.ZERO_VORTEX:
        return math.inf
    return sol.s / (3.0 * sol.k * sol.beta)


def collapse_bit(sol: VortexSolution) -> int:
    """The bit a collapsing vortex emits: 1-vortex -> 1, 0-vortex -> 0."""
    return 1 if sol.branch is Branch.ONE_VORTEX else 0


def zero_vortex_lifetime(sol: VortexSolution, epsilon: float) -> float:
    """Time for a 0-vortex to shrink below threshold z = epsilon.

    Collapse to the origin is only asymptotic, so a finite lifetime needs a
    threshold: t0 = (ln(1/eps) - k s) / (3 k^2 beta).
    """
    if sol.branch is not Branch.ZERO_VORTEX:
        raise DomainError("threshold lifetime applies to 0-vortices only")
    if not 0.0 < epsilon < 1.0:
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon}")
    t0 = (math.log(1.0 / epsilon) - sol.k * sol.s) / (3.0 * sol.k ** 2 * sol.beta)
    if t0 <= 0.0:
        raise DomainError("epsilon >= e^{-ks}: threshold crossed at creation")
    return t0


def normalization_constant(sol: VortexSolution, s: float | None = None,
                           params: PhysicalParams | None = None) -> float:
    """Constant A making A^2 * integral of |psi|^2 dt equal 1.

    A0 = e^{ks} k sqrt(6 beta) over [0, inf); A1 = k sqrt(6 beta)
    (e^{2ks} - 1)^{-1/2} over [0, t*].
    """
    if s is not None and s != sol.s:
        sol = replace(sol, s=s)
    beta = params.beta if params is not None else sol.beta
    ks = sol.k * sol.s
    root = sol.k * math.sqrt(6.0 * beta)
    if sol.branch is Branch.ZERO_VORTEX:
        return math.exp(ks) * root
    em1 = math.expm1(2.0 * ks)
    if em1 <= 0.0:
        raise DomainError("e^{2ks} - 1 underflows; ks too small to normalize")
    return root / math.sqrt(em1)


def vortex_ratio(k: float, s: float) -> float:
    """Predicted 0-vortex to 1-vortex ratio e^{4ks} - e^{2ks} = (A0/A1)^2."""
    if k * s <= 0.0:
        raise DomainError("k*s must be positive")
    ks = k * s
    return math.exp(4.0 * ks) - math.exp(2.0 * ks)


Point3 = tuple[float, float, float]


def _check_branch_z(branch: Branch, z: float) -> None:
    if z <= 0.0:
        raise DomainError(f"z must be positive, got {z}")
    if branch is Branch.ONE_VORTEX and z < 1.0:
        raise DomainError("1-vortex segment lives on z >= 1")
    if branch is Branch.ZERO_VORTEX and z > 1.0:
        raise DomainError("0-vortex segment lives on 0 < z <= 1")


def gradient_map_segment(branch: Branch, k: float,
                         z_values: Sequence[float]) -> list[Point3]:
    """Sample the gradient map (z_x, z_y, z) along a branch's line segment.

    1-vortex: (kz, kz, z) for z >= 1; 0-vortex: (-kz, -kz, z) for z <= 1.
    Both meet the plane z = 1 at the boundary points (+/-k, +/-k, 1).
    """
    if k <= 0.0:
        raise DomainError(f"k must be positive, got {k}")
    points = []
    for z in z_values:
        _check_branch_z(branch, z)
        g = branch.sign * k * z
        points.append((g, g, z))
    return points


def segment_involution(point: Point3, k: float) -> Point3:
    """Map a 1-vortex line point (kz, kz, z), z > 1, onto the 0-vortex line.

    Image is (-k/z, -k/z, 1/z), which lies on (-kz', -kz', z') at z' = 1/z.
    """
    _, _, z = point
    if z <= 1.0:
        raise DomainError("involution input must have z > 1")
    return (-k / z, -k / z, 1.0 / z)


def segment_involution_inverse(point: Point3, k: float) -> Point3:
    """Inverse direction: 0-vortex line point (-kz, -kz, z), z < 1, back to
    the 1-vortex line."""
    _, _, z = point
    if not 0.0 < z < 1.0:
        raise DomainError("inverse involution input must have 0 < z < 1")
    return (k / z, k / z, 1.0 / z)


def squared_map(branch: Branch, k: float, z: float) -> Point3:
    """Quadratic map (k^2 z^2, k^2 z^2, z^2), identical for both branches."""
    _check_branch_z(branch, z)
    q = k * k * z * z
    return (q, q, z * z)
