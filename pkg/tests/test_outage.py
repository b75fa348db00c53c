import math

import numpy as np
import pytest

from bufrelay.channel import LinkBudget
from bufrelay.errors import InfeasibleConfigError, UnsupportedConfigError
from bufrelay.markov import p_brs_total
from bufrelay.outage import (
    MMRS_SNR_GAIN_LIMIT_DB,
    analytic_outage,
    gain_summary,
    outage_brs,
    outage_brs_asymptotic,
    outage_hrs,
    outage_hrs_asymptotic,
    outage_hrs_iid,
    outage_mmrs,
    outage_mmrs_asymptotic,
    outage_mmrs_iid,
)


def mc_oracle(mean_snr, n, threshold, trials, seed, kind):
    """Direct numpy Monte Carlo, independent of the sim module."""
    rng = np.random.default_rng(seed)
    count = 0
    chunk = 1_000_000
    left = trials
    while left:
        m = min(chunk, left)
        g = rng.exponential(mean_snr, size=(m, n))
        h = rng.exponential(mean_snr, size=(m, n))
        if kind == "brs":
            snr = np.minimum(g, h).max(axis=1)
        else:
            snr = np.minimum(g.max(axis=1), h.max(axis=1))
        count += int(np.count_nonzero(snr <= threshold))
        left -= m
    return count / trials


# -------------------------------------------------------------------- BRS

def test_brs_small_threshold_limit():
    budget = LinkBudget.iid(3, 10.0)
    assert outage_brs(budget, 1e-9) < 1e-25
    assert outage_brs(budget, 1e-30) > 0.0


def test_brs_single_relay_value():
    budget = LinkBudget.iid(1, 5.0)
    # ybar = mean/2, threshold = mean -> 1 - exp(-2)
    assert math.isclose(outage_brs(budget, 5.0), 1.0 - math.exp(-2.0), rel_tol=1e-12)


def test_brs_against_monte_carlo():
    budget = LinkBudget.iid(2, 100.0)
    exact = outage_brs(budget, 3.0)
    trials = 10_000_000
    estimate = mc_oracle(100.0, 2, 3.0, trials, 424242, "brs")
    assert abs(estimate - exact) <= 3.0 * math.sqrt(exact * (1 - exact) / trials)


def test_brs_non_identical_links():
    budget = LinkBudget((50.0, 200.0), (100.0, 25.0))
    ybar = [1 / (1 / 50 + 1 / 100), 1 / (1 / 200 + 1 / 25)]
    expected = math.prod(1.0 - math.exp(-3.0 / y) for y in ybar)
    assert math.isclose(outage_brs(budget, 3.0), expected, rel_tol=1e-12)


def test_brs_asymptotic():
    assert math.isclose(outage_brs_asymptotic(2, 100.0, 1.0), 4e-4, rel_tol=1e-12)
    exact = outage_brs(LinkBudget.iid(3, 3.0e4), 3.0)
    approx = outage_brs_asymptotic(3, 3.0e4, 3.0)
    assert abs(exact / approx - 1.0) < 0.01
    g = gain_summary("brs", 4)
    assert g.diversity_gain == 4 and g.coding_gain == 0.5 and g.snr_gain_db_vs_brs == 0.0


# ------------------------------------------------------------------- MMRS

def test_mmrs_single_relay_reduces_to_brs():
    budget = LinkBudget.iid(1, 7.0)
    assert math.isclose(outage_mmrs(budget, 3.0), outage_brs(budget, 3.0), rel_tol=1e-12)


def test_mmrs_iid_arithmetic():
    # u = 1 - exp(-x) = 0.5  ->  1 - (1 - 0.25)^2 = 0.4375
    mean = 1.0 / math.log(2.0)
    assert math.isclose(outage_mmrs_iid(2, mean, 1.0), 0.4375, rel_tol=1e-12)
    assert outage_mmrs_iid(2, 1.0, 200.0) == pytest.approx(1.0)
    assert outage_mmrs_iid(2, 1e9, 1e-6) < 1e-25


def test_mmrs_iid_known_value_and_monte_carlo():
    # threshold/mean = 0.01 -> about 1.9801e-4
    exact = outage_mmrs_iid(2, 300.0, 3.0)
    assert math.isclose(exact, 1.9801e-4, rel_tol=1e-4)
    trials = 10_000_000
    estimate = mc_oracle(300.0, 2, 3.0, trials, 3434, "mmrs")
    assert abs(estimate - exact) <= 3.0 * math.sqrt(exact * (1 - exact) / trials)


def test_mmrs_matches_iid_form_on_iid_budget():
    for n in (1, 2, 3, 5):
        for mean in (2.0, 31.6, 100.0, 1e4):
            budget = LinkBudget.iid(n, mean)
            assert math.isclose(
                outage_mmrs(budget, 3.0), outage_mmrs_iid(n, mean, 3.0), rel_tol=1e-13
            )


def test_mmrs_never_worse_than_brs():
    for n in (2, 3, 5):
        for mean in (1.0, 10.0, 100.0, 1e4):
            budget = LinkBudget.iid(n, mean)
            assert outage_mmrs(budget, 3.0) <= outage_brs(budget, 3.0)


def test_mmrs_asymptotic_and_gains():
    assert math.isclose(outage_mmrs_asymptotic(2, 100.0, 1.0), 2e-4, rel_tol=1e-12)
    gains = {n: gain_summary("mmrs", n).snr_gain_db_vs_brs for n in (2, 3, 5)}
    assert math.isclose(gains[2], 1.505, abs_tol=5e-4)
    assert math.isclose(gains[3], 2.007, abs_tol=5e-4)
    assert math.isclose(gains[5], 2.408, abs_tol=5e-4)
    assert math.isclose(MMRS_SNR_GAIN_LIMIT_DB, 3.0103, abs_tol=1e-4)
    assert math.isclose(
        gain_summary("mmrs", 10**6).snr_gain_db_vs_brs, MMRS_SNR_GAIN_LIMIT_DB, abs_tol=1e-5
    )


# -------------------------------------------------------------------- HRS

def test_hrs_capacity_one_equals_brs_exactly():
    budget = LinkBudget.iid(2, 100.0)
    assert outage_hrs(budget, 1, 0, 3.0) == outage_brs(budget, 3.0)


def test_hrs_example_combination():
    budget = LinkBudget.iid(2, 100.0)
    expected = (1.0 / 3.0) * outage_brs(budget, 3.0) + (2.0 / 3.0) * outage_mmrs(budget, 3.0)
    assert math.isclose(outage_hrs(budget, 4, 4, 3.0), expected, rel_tol=1e-12)


def test_hrs_rejects_non_iid_budget():
    with pytest.raises(UnsupportedConfigError):
        outage_hrs(LinkBudget((1.0, 2.0), (1.0, 1.0)), 4, 4, 3.0)


def test_hrs_rejects_infeasible_total():
    with pytest.raises(InfeasibleConfigError):
        outage_hrs_iid(2, 4, 7, 100.0, 3.0)


def test_hrs_sandwiched_between_mmrs_and_brs():
    # analytic sandwich, allowing ulp-scale float slack (exact at N = 1
    # where the two bounds coincide mathematically but round differently)
    for n in (1, 2, 3, 5):
        for capacity in (1, 2, 4, 8):
            total = min(math.ceil(n * capacity / 2), n * (capacity - 1))
            for snr_db in range(-10, 31, 5):
                mean = 10.0 ** (snr_db / 10.0)
                hrs = outage_hrs_iid(n, capacity, total, mean, 3.0)
                assert outage_mmrs_iid(n, mean, 3.0) <= hrs * (1 + 1e-12)
                assert hrs <= outage_brs(LinkBudget.iid(n, mean), 3.0) * (1 + 1e-12)


def test_outage_monotonic_in_threshold_and_snr():
    budget = LinkBudget.iid(3, 50.0)
    thresholds = [0.5, 1.0, 3.0, 7.0, 15.0]
    for lo, hi in zip(thresholds, thresholds[1:]):
        assert outage_brs(budget, lo) < outage_brs(budget, hi)
        assert outage_mmrs(budget, lo) < outage_mmrs(budget, hi)
        assert outage_hrs(budget, 4, 3, lo) < outage_hrs(budget, 4, 3, hi)
    means = [1.0, 5.0, 50.0, 500.0]
    for lo, hi in zip(means, means[1:]):
        assert outage_mmrs_iid(3, hi, 3.0) < outage_mmrs_iid(3, lo, 3.0)
        assert outage_hrs_iid(3, 4, 5, hi, 3.0) < outage_hrs_iid(3, 4, 5, lo, 3.0)


def test_hrs_asymptotic_limits():
    assert outage_hrs_asymptotic(2, 1.0, 100.0, 3.0) == outage_brs_asymptotic(2, 100.0, 3.0)
    assert outage_hrs_asymptotic(2, 0.0, 100.0, 3.0) == outage_mmrs_asymptotic(2, 100.0, 3.0)
    # p_brs = 1/3, N = 2: (4/3 + 4/3) * ratio^2 = (8/3) ratio^2
    assert math.isclose(
        outage_hrs_asymptotic(2, 1.0 / 3.0, 300.0, 3.0), (8.0 / 3.0) * 1e-4, rel_tol=1e-12
    )


def test_hrs_asymptotic_tracks_exact_at_high_snr():
    pb = float(p_brs_total(2, 4, 4))
    mean = 3.0e4  # mean/threshold = 1e4
    exact = outage_hrs_iid(2, 4, 4, mean, 3.0)
    approx = outage_hrs_asymptotic(2, pb, mean, 3.0)
    assert abs(exact / approx - 1.0) < 0.01


def test_hrs_asymptotic_rejects_bad_p():
    with pytest.raises(ValueError):
        outage_hrs_asymptotic(2, 1.5, 100.0, 3.0)


def test_gain_summary_hrs():
    pb = p_brs_total(2, 4, 4)
    g = gain_summary("hrs", 2, pb)
    expected_gc = (2.0 * (2.0 / 3.0) + 4.0 * (1.0 / 3.0)) ** -0.5
    assert math.isclose(g.coding_gain, expected_gc, rel_tol=1e-12)
    with pytest.raises(ValueError):
        gain_summary("hrs", 2)
    with pytest.raises(ValueError):
        gain_summary("nope", 2)


def test_deep_outage_no_underflow_to_zero():
    # 80 dB, N = 5: far below 1e-30 but still a positive, finite float
    value = outage_brs(LinkBudget.iid(5, 1e8), 3.0)
    assert 0.0 < value < 1e-30
    value = outage_mmrs_iid(5, 1e8, 3.0)
    assert 0.0 < value < 1e-30


def test_analytic_outage_dispatch():
    budget = LinkBudget.iid(2, 100.0)
    assert analytic_outage("brs", budget, 3.0) == outage_brs(budget, 3.0)
    assert analytic_outage("mmrs", budget, 3.0) == outage_mmrs(budget, 3.0)
    assert analytic_outage("hrs", budget, 3.0, 4, 4) == outage_hrs(budget, 4, 4, 3.0)
    with pytest.raises(ValueError):
        analytic_outage("hrs", budget, 3.0)
    with pytest.raises(ValueError):
        analytic_outage("xyz", budget, 3.0)


def test_threshold_validation():
    budget = LinkBudget.iid(2, 100.0)
    for bad in (0.0, -1.0, math.inf):
        with pytest.raises(ValueError):
            outage_brs(budget, bad)
