"""Energy relation and the quantized step-function potential U(E).

The vortex solutions tie total energy to the fixed potential through
E = (12/5) U_f (equivalently E = 6 k^2 hbar^2 / m). Replacing U_f by a
step potential over an eigenvalue ladder {E_j} quantizes k: U(E) is (5/12)
times the largest eigenvalue reached by E, and k jumps by
sqrt(m / 6 hbar^2) (sqrt(E_j) - sqrt(E_{j-1})) at each level transition.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable

from .schrodinger_field import PhysicalParams
from .vortex import Branch, VortexSolution
from .wavecore import DomainError


class BelowLadderError(DomainError):
    """E lies below the ground eigenvalue E_0."""


@dataclass(frozen=True)
class EnergyLadder:
    """Strictly increasing, non-empty eigenvalue list E_0 < E_1 < ..."""

    eigenvalues: tuple[float, ...]

    def __post_init__(self):
        ev = tuple(float(e) for e in self.eigenvalues)
        if not ev:
            raise DomainError("ladder must be non-empty")
        if any(b <= a for a, b in zip(ev, ev[1:])):
            raise DomainError("eigenvalues must be strictly increasing")
        object.__setattr__(self, "eigenvalues", ev)

    def __len__(self) -> int:
        return len(self.eigenvalues)

    @classmethod
    def from_json(cls, text: str) -> "EnergyLadder":
        data = json.loads(text)
        return cls(eigenvalues=tuple(data["eigenvalues"]))


@dataclass(frozen=True)
class LevelSelection:
    """Level picked by an energy E: index, eigenvalue, potential, frequency."""

    j: int
    E_j: float
    U_of_E: float
    omega: float


def unit_step(x: float) -> float:
    """Heaviside step with the closed convention lambda(0) = 1."""
    return 1.0 if x >= 0.0 else 0.0


def energy_of_potential(u_f: float, params: PhysicalParams) -> float:
    """Total energy for a fixed potential: E = (12/5) U_f."""
    if u_f < 0.0:
        raise DomainError(f"potential must be non-negative, got {u_f}")
    return 12.0 / 5.0 * u_f


def level_index(ladder: EnergyLadder, E: float) -> int:
    """Index j of the highest eigenvalue reached by E (lambda(0) = 1)."""
    count = sum(1 for e_i in ladder.eigenvalues if unit_step(E - e_i) == 1.0)
    if count == 0:
        raise BelowLadderError(
            f"E = {E} lies below the ground eigenvalue {ladder.eigenvalues[0]}")
    return count - 1


def potential_of_energy(ladder: EnergyLadder, E: float) -> float:
    """Step potential U(E) = (5/12) E_j via the literal step-function sums.

    For j > 0 this is (5/12) [sum of eigenvalues reached by E minus the
    eigenvalues below level j], which telescopes to (5/12) E_j; the j = 0
    branch is (5/12) E_0 directly.
    """
    j = level_index(ladder, E)
    ev = ladder.eigenvalues
    if j == 0:
        return 5.0 / 12.0 * ev[0]
    reached = sum(unit_step(E - e_i) * e_i for e_i in ev)
    below = sum(ev[:j])
    return 5.0 / 12.0 * (reached - below)


def select_level(ladder: EnergyLadder, E: float,
                 params: PhysicalParams) -> LevelSelection:
    j = level_index(ladder, E)
    e_j = ladder.eigenvalues[j]
    return LevelSelection(j=j, E_j=e_j, U_of_E=potential_of_energy(ladder, E),
                          omega=e_j / params.hbar)


def quantized_k(ladder: EnergyLadder, E: float, params: PhysicalParams) -> float:
    """k = sqrt(2 m U(E) / 5 hbar^2) = sqrt(m E_j / 6 hbar^2)."""
    u = potential_of_energy(ladder, E)
    return math.sqrt(2.0 * params.mass * u / (5.0 * params.hbar ** 2))


def quantized_solution(ladder: EnergyLadder, E: float, branch: Branch,
                       params: PhysicalParams, s: float = 1.0) -> VortexSolution:
    """Vortex solution at the quantized k selected by E.

    The time exponent keeps the hbar/m factor of the fixed-potential
    solution family.
    """
    return VortexSolution(branch=branch, k=quantized_k(ladder, E, params),
                          s=s, beta=params.beta)


def delta_k(ladder: EnergyLadder, j: int, params: PhysicalParams) -> float:
    """Jump in k for the transition E_{j-1} -> E_j."""
    if not 1 <= j < len(ladder):
        raise IndexError(f"transition index must lie in [1, {len(ladder)}), got {j}")
    ev = ladder.eigenvalues
    return math.sqrt(params.mass / (6.0 * params.hbar ** 2)) * (
        math.sqrt(ev[j]) - math.sqrt(ev[j - 1]))


@dataclass(frozen=True)
class TraceStep:
    step: int
    E: float
    j: int
    k: float


def k_jump_trace(ladder: EnergyLadder, energy_schedule: Iterable[float],
                 params: PhysicalParams) -> list[TraceStep]:
    """Piecewise-constant k along an energy schedule.

    k changes only when the level index changes; each jump magnitude equals
    delta_k for the levels crossed.
    """
    trace = []
    for i, E in enumerate(energy_schedule):
        j = level_index(ladder, E)
        trace.append(TraceStep(step=i, E=E, j=j,
                               k=quantized_k(ladder, E, params)))
    return trace
