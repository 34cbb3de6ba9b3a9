"""Discrete-event simulation of 0-/1-vortex pair populations.

Vortices are produced by a Poisson process at a fixed rate and assigned a
branch independently: a 0-vortex with probability r/(1+r) for production
ratio r. A 1-vortex emits bit 1 when it collapses at creation time +
s/(3 k beta); a 0-vortex emits bit 0 when its field first drops below the
threshold epsilon, at creation time + (ln(1/eps) - k s)/(3 k^2 beta).
Everything is deterministic given the seed.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .wavecore import DomainError


@dataclass(frozen=True)
class EnsembleConfig:
    pair_production_rate: float
    ratio_zero_to_one: float
    k: float
    s: float
    beta: float
    horizon: float
    epsilon: float = 1e-6
    seed: int = 0
    digest_bits: int = 64

    def __post_init__(self):
        if self.pair_production_rate <= 0.0:
            raise DomainError("production rate must be positive")
        if self.ratio_zero_to_one < 0.0:
            raise DomainError("production ratio must be non-negative")
        if self.k <= 0.0 or self.s <= 0.0 or self.beta <= 0.0:
            raise DomainError("k, s and beta must be positive")
        if not 0.0 < self.epsilon < 1.0:
            raise DomainError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if self.horizon <= 0.0:
            raise DomainError("horizon must be positive")
        if self.zero_lifetime <= 0.0:
            raise DomainError(
                "epsilon >= e^{-ks}: 0-vortices would collapse at creation")

    @property
    def prob_zero(self) -> float:
        r = self.ratio_zero_to_one
        return r / (1.0 + r)

    @property
    def one_lifetime(self) -> float:
        return self.s / (3.0 * self.k * self.beta)

    @property
    def zero_lifetime(self) -> float:
        return (math.log(1.0 / self.epsilon) - self.k * self.s) / (
            3.0 * self.k ** 2 * self.beta)

    @classmethod
    def from_json(cls, text: str) -> "EnsembleConfig":
        data = json.loads(text)
        return cls(**data)


@dataclass(frozen=True)
class EnsembleReport:
    produced_zero: int
    produced_one: int
    emitted_zero: int
    emitted_one: int
    live_zero: int
    live_one: int
    bit_sequence_digest: str
    empirical_ratio: float

    @property
    def produced(self) -> int:
        return self.produced_zero + self.produced_one

    @property
    def emitted(self) -> int:
        return self.emitted_zero + self.emitted_one

    def to_dict(self) -> dict:
        return {
            "produced_zero": self.produced_zero,
            "produced_one": self.produced_one,
            "emitted_zero": self.emitted_zero,
            "emitted_one": self.emitted_one,
            "live_zero": self.live_zero,
            "live_one": self.live_one,
            "bit_sequence_digest": self.bit_sequence_digest,
            "empirical_ratio": self.empirical_ratio,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass(frozen=True)
class SimulationResult:
    """Report plus the full emission record for downstream analysis."""

    report: EnsembleReport
    bit_stream: str = field(repr=False, default="")


def _arrival_times(rng: np.random.Generator, rate: float,
                   horizon: float) -> np.ndarray:
    """Poisson arrival times on [0, horizon), batched exponential gaps."""
    expected = rate * horizon
    times: list[np.ndarray] = []
    t_last = 0.0
    while True:
        batch = max(int(expected * 0.1) + 64, 1024)
        gaps = rng.exponential(1.0 / rate, size=batch)
        arr = t_last + np.cumsum(gaps)
        times.append(arr)
        t_last = arr[-1]
        if t_last >= horizon:
            break
    all_times = np.concatenate(times)
    return all_times[all_times < horizon]


def simulate(config: EnsembleConfig) -> SimulationResult:
    """Run the production/collapse process to the horizon."""
    rng = np.random.default_rng(config.seed)
    arrivals = _arrival_times(rng, config.pair_production_rate, config.horizon)
    is_zero = rng.random(arrivals.size) < config.prob_zero
    lifetimes = np.where(is_zero, config.zero_lifetime, config.one_lifetime)
    emission_times = arrivals + lifetimes
    emitted_mask = emission_times <= config.horizon

    order = np.argsort(emission_times[emitted_mask], kind="stable")
    emitted_bits = np.where(is_zero[emitted_mask], 0, 1)[order]
    bit_stream = "".join("01"[b] for b in emitted_bits)

    produced_zero = int(np.count_nonzero(is_zero))
    produced_one = int(arrivals.size - produced_zero)
    emitted_zero = int(np.count_nonzero(is_zero & emitted_mask))
    emitted_one = int(np.count_nonzero(~is_zero & emitted_mask))
    emitted_total_one = emitted_one
    ratio = (emitted_zero / emitted_total_one) if emitted_total_one else math.inf

    report = EnsembleReport(
        produced_zero=produced_zero,
        produced_one=produced_one,
        emitted_zero=emitted_zero,
        emitted_one=emitted_one,
        live_zero=produced_zero - emitted_zero,
        live_one=produced_one - emitted_one,
        bit_sequence_digest=bit_stream[:config.digest_bits],
        empirical_ratio=ratio,
    )
    return SimulationResult(report=report, bit_stream=bit_stream)


def steady_state_counts(config: EnsembleConfig) -> tuple[float, float]:
    """Expected live populations: per-branch production rate x lifetime."""
    rate_zero = config.pair_production_rate * config.prob_zero
    rate_one = config.pair_production_rate * (1.0 - config.prob_zero)
    return rate_zero * config.zero_lifetime, rate_one * config.one_lifetime


def expected_emissions(config: EnsembleConfig) -> tuple[float, float]:
    """Expected emitted counts by the horizon under flow conservation.

    Every vortex born before horizon - lifetime has emitted its bit, so
    E[emitted_b] = rate_b * (horizon - lifetime_b). The later-born ones are
    still live; that truncation is what biases the raw emitted-bit ratio
    away from the production ratio on short horizons.
    """
    rate_zero = config.pair_production_rate * config.prob_zero
    rate_one = config.pair_production_rate * (1.0 - config.prob_zero)
    return (
        rate_zero * max(config.horizon - config.zero_lifetime, 0.0),
        rate_one * max(config.horizon - config.one_lifetime, 0.0),
    )


@dataclass(frozen=True)
class EqualizationReport:
    """Emission rates vs production rates, and the live-population ratio.

    In a stationary flow the per-branch bit emission rate equals the
    production rate regardless of lifetimes, so the rate-corrected emission
    ratio tracks the production ratio; only the live populations reflect
    the lifetime asymmetry. Both numbers are reported so the two effects
    stay separate.
    """

    production_ratio: float
    emitted_ratio: float
    emission_rate_ratio: float
    live_ratio: float
    expected_live_ratio: float
    within_three_sigma: bool
    stationarity_warning: bool
    report: EnsembleReport

    def to_dict(self) -> dict:
        return {
            "production_ratio": self.production_ratio,
            "emitted_ratio": self.emitted_ratio,
            "emission_rate_ratio": self.emission_rate_ratio,
            "live_ratio": self.live_ratio,
            "expected_live_ratio": self.expected_live_ratio,
            "within_three_sigma": self.within_three_sigma,
            "stationarity_warning": self.stationarity_warning,
            "report": self.report.to_dict(),
        }


def equalization_check(config: EnsembleConfig) -> EqualizationReport:
    """Check each branch's emitted count against flow conservation.

    Each count is Poisson with mean rate_b * (horizon - lifetime_b);
    within_three_sigma holds when both counts sit inside their 3 sigma
    bands, which is equivalent to the emission-rate ratio matching the
    production ratio.
    """
    result = simulate(config)
    rep = result.report
    mu_zero, mu_one = expected_emissions(config)
    within = True
    for count, mu in ((rep.emitted_zero, mu_zero), (rep.emitted_one, mu_one)):
        if mu > 0.0:
            within = within and abs(count - mu) <= 3.0 * math.sqrt(mu)
        else:
            within = within and count == 0
    window_zero = max(config.horizon - config.zero_lifetime, 0.0)
    window_one = max(config.horizon - config.one_lifetime, 0.0)
    if window_zero > 0.0 and window_one > 0.0 and rep.emitted_one:
        rate_ratio = (rep.emitted_zero / window_zero) / (
            rep.emitted_one / window_one)
    else:
        rate_ratio = math.inf if rep.emitted_zero else math.nan
    live_ratio = (rep.live_zero / rep.live_one) if rep.live_one else math.inf
    exp_zero, exp_one = steady_state_counts(config)
    max_lifetime = max(config.zero_lifetime, config.one_lifetime)
    return EqualizationReport(
        production_ratio=config.ratio_zero_to_one,
        emitted_ratio=rep.empirical_ratio,
        emission_rate_ratio=rate_ratio,
        live_ratio=live_ratio,
        expected_live_ratio=(exp_zero / exp_one) if exp_one else math.inf,
        within_three_sigma=within,
        stationarity_warning=config.horizon < 10.0 * max_lifetime,
        report=rep,
    )
