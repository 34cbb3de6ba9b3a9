import json
import math

import pytest

from zvortex import (
    DomainError,
    EnsembleConfig,
    equalization_check,
    expected_emissions,
    simulate,
    steady_state_counts,
)


def make_config(**kw):
    base = dict(pair_production_rate=500.0, ratio_zero_to_one=1.0,
                k=1.0, s=1.0, beta=1.0, horizon=20.0, epsilon=1e-6, seed=7)
    base.update(kw)
    return EnsembleConfig(**base)


class TestConfig:
    def test_lifetimes(self):
        cfg = make_config()
        assert cfg.one_lifetime == pytest.approx(1.0 / 3.0, rel=1e-15)
        # frozen: (ln 1e6 - 1)/3
        assert cfg.zero_lifetime == pytest.approx(4.27183685265, rel=1e-10)

    def test_invalid_epsilon(self):
        with pytest.raises(DomainError):
            make_config(epsilon=0.5)  # above e^{-ks}
        with pytest.raises(DomainError):
            make_config(epsilon=0.0)

    def test_branch_probability(self):
        assert make_config(ratio_zero_to_one=1.0).prob_zero == 0.5
        assert make_config(ratio_zero_to_one=3.0).prob_zero == pytest.approx(0.75)
        assert make_config(ratio_zero_to_one=0.0).prob_zero == 0.0

    def test_json_round_trip(self):
        cfg = make_config(seed=99)
        text = json.dumps({
            "pair_production_rate": cfg.pair_production_rate,
            "ratio_zero_to_one": cfg.ratio_zero_to_one,
            "k": cfg.k, "s": cfg.s, "beta": cfg.beta,
            "horizon": cfg.horizon, "epsilon": cfg.epsilon, "seed": cfg.seed,
        })
        assert EnsembleConfig.from_json(text) == cfg

    def test_lifetime_ordering_under_threshold_bound(self):
        # epsilon < e^{-2ks} forces 0-vortices to outlive 1-vortices
        for k, s in [(1.0, 1.0), (0.5, 2.0), (1.5, 0.4)]:
            eps = math.exp(-2.0 * k * s) * 0.9
            cfg = make_config(k=k, s=s, epsilon=eps)
            assert cfg.zero_lifetime > cfg.one_lifetime


class TestSimulate:
    def test_deterministic(self):
        a = simulate(make_config())
        b = simulate(make_config())
        assert a.report == b.report
        assert a.bit_stream == b.bit_stream

    def test_seed_changes_stream(self):
        a = simulate(make_config(seed=1))
        b = simulate(make_config(seed=2))
        assert a.bit_stream != b.bit_stream

    def test_conservation(self):
        rep = simulate(make_config()).report
        assert rep.emitted + rep.live_zero + rep.live_one == rep.produced
        assert rep.emitted == rep.emitted_zero + rep.emitted_one

    def test_symmetric_production_matches_flow_expectation(self):
        cfg = make_config(pair_production_rate=5000.0, horizon=50.0)
        rep = simulate(cfg).report
        mu_zero, mu_one = expected_emissions(cfg)
        assert abs(rep.emitted_zero - mu_zero) <= 3.0 * math.sqrt(mu_zero)
        assert abs(rep.emitted_one - mu_one) <= 3.0 * math.sqrt(mu_one)

    def test_long_run_bit_balance(self):
        # the raw emitted-bit ratio approaches the production ratio once the
        # horizon dwarfs both lifetimes
        rep = simulate(make_config(pair_production_rate=100.0,
                                   horizon=2000.0)).report
        n = rep.emitted
        assert abs(rep.emitted_zero / n - 0.5) < 0.01

    def test_all_ones_without_zero_production(self):
        result = simulate(make_config(ratio_zero_to_one=0.0))
        assert set(result.bit_stream) <= {"1"}
        assert result.report.emitted_zero == 0

    def test_digest_prefix(self):
        result = simulate(make_config(digest_bits=16))
        assert result.report.bit_sequence_digest == result.bit_stream[:16]

    def test_bits_ordered_by_emission_time(self):
        # early bits are dominated by 1s because 1-vortices die first
        result = simulate(make_config(pair_production_rate=2000.0))
        head = result.bit_stream[:200]
        assert head.count("1") > head.count("0")


class TestSteadyState:
    def test_little_law_counts(self):
        cfg = make_config(pair_production_rate=10000.0, horizon=30.0)
        exp_zero, exp_one = steady_state_counts(cfg)
        assert exp_zero == pytest.approx(5000.0 * cfg.zero_lifetime)
        assert exp_one == pytest.approx(5000.0 * cfg.one_lifetime)
        rep = simulate(cfg).report
        assert rep.live_zero == pytest.approx(exp_zero, rel=0.05)
        assert rep.live_one == pytest.approx(exp_one, rel=0.10)

    def test_live_ratio_is_lifetime_ratio(self):
        cfg = make_config(pair_production_rate=10000.0, horizon=30.0)
        exp_zero, exp_one = steady_state_counts(cfg)
        # frozen lifetime ratio for eps=1e-6, k=s=beta=1
        assert exp_zero / exp_one == pytest.approx(12.815510558, rel=1e-9)

    def test_marginal_threshold(self):
        # epsilon just below e^{-2ks}: 0-vortices barely outlive 1-vortices
        eps = math.exp(-2.0) * 0.99
        cfg = make_config(epsilon=eps)
        exp_zero, exp_one = steady_state_counts(cfg)
        assert exp_zero > exp_one
        assert exp_zero / exp_one < 1.1


class TestEqualization:
    def test_equal_production_equal_bits(self):
        report = equalization_check(make_config(pair_production_rate=5000.0,
                                                horizon=60.0))
        assert report.within_three_sigma
        assert not report.stationarity_warning

    def test_skewed_production_stays_skewed(self):
        # emission rates follow production, not the lifetime-driven ratio
        ratio = 47.209
        report = equalization_check(make_config(ratio_zero_to_one=ratio,
                                                pair_production_rate=5000.0,
                                                horizon=60.0))
        assert report.within_three_sigma
        assert report.emission_rate_ratio == pytest.approx(ratio, rel=0.1)
        assert report.emitted_ratio > 10.0  # nowhere near equalized to 1

    def test_live_ratio_reported_separately(self):
        report = equalization_check(make_config(pair_production_rate=5000.0,
                                                horizon=60.0))
        assert report.live_ratio == pytest.approx(report.expected_live_ratio,
                                                  rel=0.15)

    def test_short_horizon_warns(self):
        report = equalization_check(make_config(horizon=5.0))
        assert report.stationarity_warning

    def test_serializable(self):
        report = equalization_check(make_config())
        json.dumps(report.to_dict())
