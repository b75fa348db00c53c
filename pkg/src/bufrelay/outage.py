"""Closed-form outage probabilities and high-SNR gain figures.

Outage is the event that the end-to-end bottleneck SNR is at or below the
threshold gamma = 2**(2R) - 1.  Products of (1 - exp(-x)) factors are
evaluated in log space with an accurate log(1 - exp(-x)) kernel so that
deep-outage values (well below 1e-10) keep full relative precision.

All three schemes have diversity order N; they differ in coding gain:
1/2 for BRS, 2**(-1/N) for MMRS, and a BRS/MMRS mixture for HRS weighted by
the fallback probability from the buffer-state chain (i.i.d. fading only).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .channel import LinkBudget
from .errors import UnsupportedConfigError
from .markov import p_brs_total

__all__ = [
    "outage_brs",
    "outage_brs_asymptotic",
    "outage_mmrs",
    "outage_mmrs_iid",
    "outage_mmrs_asymptotic",
    "outage_hrs",
    "outage_hrs_iid",
    "outage_hrs_asymptotic",
    "analytic_outage",
    "GainSummary",
    "gain_summary",
    "MMRS_SNR_GAIN_LIMIT_DB",
    "OutagePoint",
    "OutageCurve",
]

_LN2 = math.log(2.0)

# SNR gain of MMRS over BRS as N -> infinity: 10*log10(2) dB.
MMRS_SNR_GAIN_LIMIT_DB = 10.0 * math.log10(2.0)


def _log1mexp(x: np.ndarray) -> np.ndarray:
    """log(1 - exp(-x)) for x > 0, accurate at both ends."""
    x = np.asarray(x, dtype=np.float64)
    out = np.empty_like(x)
    big = x > _LN2
    out[big] = np.log1p(-np.exp(-x[big]))
    out[~big] = np.log(-np.expm1(-x[~big]))
    return out


def _cdf_product(ratios: np.ndarray) -> float:
    """prod_i (1 - exp(-ratios_i)), evaluated in log space."""
    return float(np.exp(np.sum(_log1mexp(np.asarray(ratios, dtype=np.float64)))))


def _check_threshold(threshold: float) -> None:
    if not (threshold > 0 and math.isfinite(threshold)):
        raise ValueError(f"threshold must be positive and finite, got {threshold}")


def outage_brs(budget: LinkBudget, threshold: float) -> float:
    """prod_i (1 - exp(-gamma / ybar_i)) with ybar_i = (1/gbar_g_i + 1/gbar_h_i)^-1."""
    _check_threshold(threshold)
    g = np.asarray(budget.mean_snr_sr)
    h = np.asarray(budget.mean_snr_rd)
    ybar = 1.0 / (1.0 / g + 1.0 / h)
    return _cdf_product(threshold / ybar)


def outage_brs_asymptotic(n_relays: int, mean_snr: float, threshold: float) -> float:
    """High-SNR i.i.d. approximation (2 gamma / gbar)^N."""
    return (2.0 * threshold / mean_snr) ** n_relays


def outage_mmrs(budget: LinkBudget, threshold: float) -> float:
    """1 - [1 - prod(1-e^{-g/gbar_g_i})][1 - prod(1-e^{-g/gbar_h_i})].

    Computed as a + b - a*b where a and b are the two hop-maximum CDFs; all
    terms are non-negative, so there is no cancellation at deep outage.
    """
    _check_threshold(threshold)
    a = _cdf_product(threshold / np.asarray(budget.mean_snr_sr))
    b = _cdf_product(threshold / np.asarray(budget.mean_snr_rd))
    return a + b - a * b


def outage_mmrs_iid(n_relays: int, mean_snr: float, threshold: float) -> float:
    """i.i.d. form 1 - [1 - (1 - e^{-gamma/gbar})^N]^2."""
    _check_threshold(threshold)
    a = float(np.exp(n_relays * _log1mexp(np.asarray(threshold / mean_snr))))
    return a + a - a * a


def outage_mmrs_asymptotic(n_relays: int, mean_snr: float, threshold: float) -> float:
    """High-SNR i.i.d. approximation (2^{1/N} gamma / gbar)^N."""
    return 2.0 * (threshold / mean_snr) ** n_relays


def _outage_brs_iid(n_relays: int, mean_snr: float, threshold: float) -> float:
    return _cdf_product(np.full(n_relays, 2.0 * threshold / mean_snr))


def outage_hrs_iid(
    n_relays: int, capacity: int, total_full: int, mean_snr: float, threshold: float
) -> float:
    """P_BRS * P_out_BRS + (1 - P_BRS) * P_out_MMRS with the exact fallback
    probability of the buffer chain (converted to float only here)."""
    _check_threshold(threshold)
    pb = p_brs_total(n_relays, capacity, total_full)
    brs = _outage_brs_iid(n_relays, mean_snr, threshold)
    mmrs = outage_mmrs_iid(n_relays, mean_snr, threshold)
    return float(pb) * brs + float(1 - pb) * mmrs


def outage_hrs(budget: LinkBudget, capacity: int, total_full: int, threshold: float) -> float:
    """HRS outage for an i.i.d. budget; non-identical means are not supported
    analytically (the uniform-selection argument behind the chain needs
    i.i.d. links) and are served by the simulator instead."""
    if not budget.is_iid:
        raise UnsupportedConfigError(
            "analytic HRS outage requires i.i.d. link means; use the simulator"
        )
    return outage_hrs_iid(
        budget.n_relays, capacity, total_full, budget.mean_snr_sr[0], threshold
    )


def outage_hrs_asymptotic(
    n_relays: int, p_brs: float, mean_snr: float, threshold: float
) -> float:
    """High-SNR form ((2 P_MMRS + 2^N P_BRS)^{1/N} gamma / gbar)^N."""
    if not 0.0 <= p_brs <= 1.0:
        raise ValueError(f"p_brs must be in [0, 1], got {p_brs}")
    scale = 2.0 * (1.0 - p_brs) + 2.0**n_relays * p_brs
    return scale * (threshold / mean_snr) ** n_relays


def analytic_outage(
    scheme: str,
    budget: LinkBudget,
    threshold: float,
    capacity: int | None = None,
    total_full: int | None = None,
) -> float:
    """Dispatch on scheme name ('brs' | 'mmrs' | 'hrs')."""
    if scheme == "brs":
        return outage_brs(budget, threshold)
    if scheme == "mmrs":
        return outage_mmrs(budget, threshold)
    if scheme == "hrs":
        if capacity is None or total_full is None:
            raise ValueError("hrs requires capacity and total_full")
        return outage_hrs(budget, capacity, total_full, threshold)
    raise ValueError(f"unknown scheme {scheme!r}")


@dataclass(frozen=True)
class GainSummary:
    """Diversity order, coding gain, and SNR gain over BRS of one scheme."""

    scheme: str
    n_relays: int
    diversity_gain: int
    coding_gain: float
    snr_gain_db_vs_brs: float


def gain_summary(
    scheme: str, n_relays: int, p_brs: float | Fraction | None = None
) -> GainSummary:
    """High-SNR gain figures; HRS needs the fallback probability p_brs."""
    if n_relays < 1:
        raise ValueError(f"n_relays must be >= 1, got {n_relays}")
    if scheme == "brs":
        gc = 0.5
    elif scheme == "mmrs":
        gc = 2.0 ** (-1.0 / n_relays)
    elif scheme == "hrs":
        if p_brs is None:
            raise ValueError("hrs gain requires p_brs")
        pb = float(p_brs)
        gc = (2.0 * (1.0 - pb) + 2.0**n_relays * pb) ** (-1.0 / n_relays)
    else:
        raise ValueError(f"unknown scheme {scheme!r}")
    return GainSummary(
        scheme=scheme,
        n_relays=n_relays,
        diversity_gain=n_relays,
        coding_gain=gc,
        snr_gain_db_vs_brs=10.0 * math.log10(gc / 0.5),
    )


@dataclass(frozen=True)
class OutagePoint:
    scheme: str
    n_relays: int
    mean_snr_db: float
    threshold: float
    probability: float
    capacity: int | None = None
    total_full: int | None = None


@dataclass(frozen=True)
class OutageCurve:
    """Ordered analytic outage points plus the configuration that produced them."""

    points: tuple[OutagePoint, ...]
    metadata: dict = field(default_factory=dict)
