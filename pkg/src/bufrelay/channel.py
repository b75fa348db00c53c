"""Rayleigh block-fading two-hop channel model.

One transmission interval carries one packet over two hops: source -> relay
in the first slot, relay -> destination in the second.  Per-link
instantaneous SNRs are exponentially distributed with the configured means
and are redrawn independently for every interval (block fading).  Everything
is kept in linear SNR scale; decibels appear only at the CLI boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "LinkBudget",
    "ChannelRealization",
    "RateConfig",
    "snr_threshold",
    "db_to_linear",
    "linear_to_db",
    "sample_block",
    "sample_realization",
]


def snr_threshold(rate: float) -> float:
    """SNR below which a packet at `rate` bit/sec/Hz cannot be decoded.

    The packet occupies two slots, hence the threshold is 2**(2*rate) - 1.
    """
    if rate <= 0:
        raise ValueError(f"rate must be positive, got {rate}")
    return 2.0 ** (2.0 * rate) - 1.0


def db_to_linear(x_db: float) -> float:
    return 10.0 ** (x_db / 10.0)


def linear_to_db(x: float) -> float:
    if x <= 0:
        raise ValueError(f"linear value must be positive, got {x}")
    return 10.0 * math.log10(x)


def _check_positive_vector(name: str, values: tuple[float, ...]) -> None:
    if len(values) == 0:
        raise ValueError(f"{name} must not be empty")
    for v in values:
        if not (v > 0.0 and math.isfinite(v)):
            raise ValueError(f"{name} entries must be positive and finite, got {v}")


@dataclass(frozen=True)
class LinkBudget:
    """Mean linear SNRs of the N source-relay and N relay-destination links."""

    mean_snr_sr: tuple[float, ...]
    mean_snr_rd: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mean_snr_sr", tuple(float(v) for v in self.mean_snr_sr))
        object.__setattr__(self, "mean_snr_rd", tuple(float(v) for v in self.mean_snr_rd))
        _check_positive_vector("mean_snr_sr", self.mean_snr_sr)
        _check_positive_vector("mean_snr_rd", self.mean_snr_rd)
        if len(self.mean_snr_sr) != len(self.mean_snr_rd):
            raise ValueError("mean_snr_sr and mean_snr_rd must have the same length")

    @property
    def n_relays(self) -> int:
        return len(self.mean_snr_sr)

    @property
    def is_iid(self) -> bool:
        """True iff all 2N links share one mean SNR."""
        ref = self.mean_snr_sr[0]
        return all(v == ref for v in self.mean_snr_sr + self.mean_snr_rd)

    @classmethod
    def iid(cls, n_relays: int, mean_snr: float) -> "LinkBudget":
        if n_relays < 1:
            raise ValueError(f"n_relays must be >= 1, got {n_relays}")
        return cls((float(mean_snr),) * n_relays, (float(mean_snr),) * n_relays)


@dataclass(frozen=True)
class ChannelRealization:
    """Instantaneous linear SNRs of all 2N links for one transmission interval."""

    snr_sr: tuple[float, ...]
    snr_rd: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "snr_sr", tuple(float(v) for v in self.snr_sr))
        object.__setattr__(self, "snr_rd", tuple(float(v) for v in self.snr_rd))
        if len(self.snr_sr) == 0 or len(self.snr_sr) != len(self.snr_rd):
            raise ValueError("snr_sr and snr_rd must be non-empty and equally long")
        for v in self.snr_sr + self.snr_rd:
            if not (v >= 0.0 and math.isfinite(v)):
                raise ValueError(f"SNR entries must be non-negative and finite, got {v}")

    @property
    def n_relays(self) -> int:
        return len(self.snr_sr)


@dataclass(frozen=True)
class RateConfig:
    """Target rate in bit/sec/Hz and the outage SNR threshold it implies."""

    rate: float

    def __post_init__(self) -> None:
        if self.rate <= 0:
            raise ValueError(f"rate must be positive, got {self.rate}")

    @property
    def threshold(self) -> float:
        return snr_threshold(self.rate)


def sample_block(
    budget: LinkBudget, rng: np.random.Generator, count: int
) -> tuple[np.ndarray, np.ndarray]:
    """Draw `count` independent realizations as two (count, N) float arrays.

    The draw order (full source-relay block, then full relay-destination
    block) is fixed: it is part of the reproducibility contract.
    """
    n = budget.n_relays
    g = rng.standard_exponential((count, n)) * np.asarray(budget.mean_snr_sr)
    h = rng.standard_exponential((count, n)) * np.asarray(budget.mean_snr_rd)
    return g, h


def sample_realization(budget: LinkBudget, rng: np.random.Generator) -> ChannelRealization:
    """Draw a single block-fading realization."""
    g, h = sample_block(budget, rng, 1)
    return ChannelRealization(tuple(g[0]), tuple(h[0]))
