"""Seeded Monte Carlo engine for the three selection policies.

Concurrency contract: BRS/MMRS trials are memoryless, so they are chunked
and may run on any number of worker threads; every chunk owns a private
generator derived from (seed, chunk index) and the merged statistics are
integer sums, so reports are byte-identical for any worker count.  The HRS
buffer chain is path-dependent and always runs as a single ordered sequence
over the same chunked draw stream; parallelism across HRS runs comes from
independent seeds, not from splitting one chain.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..channel import LinkBudget, RateConfig, sample_block
from ..errors import InfeasibleConfigError, UnsupportedConfigError
from ..selection import BufferState
from ._backend import backend_name, kernels
from ._streams import chunk_rng, chunk_sizes, derive_seed

__all__ = [
    "SimConfig",
    "SimReport",
    "initial_buffer_fill",
    "run_outage_sim",
    "empirical_p_brs",
    "run_delay_sim",
    "backend_name",
    "derive_seed",
]

POLICIES = ("brs", "mmrs", "hrs")
BUFFER_MODES = ("analysis_matched", "outage_aware")

# State histograms are dense over the capacity**N mixed-radix space.
MAX_TRACKED_STATES = 1 << 22


def initial_buffer_fill(n_relays: int, capacity: int, total_full: int) -> BufferState:
    """Spread total_full packets as evenly as possible, extras at low indices."""
    if not 0 <= total_full <= n_relays * (capacity - 1):
        raise InfeasibleConfigError(
            f"total_full={total_full} infeasible for N={n_relays}, capacity={capacity}"
        )
    base, extra = divmod(total_full, n_relays)
    occupancy = tuple(base + 1 if i < extra else base for i in range(n_relays))
    return BufferState(occupancy, capacity)


@dataclass(frozen=True)
class SimConfig:
    """One simulation run.  `trials` counts measured intervals; `burn_in`
    (delay and mode-statistics runs) is simulated first and not measured.
    MMRS ignores the buffer fields: its buffers are idealized as never full
    and never empty."""

    policy: str
    budget: LinkBudget
    rate: RateConfig = field(default_factory=lambda: RateConfig(1.0))
    capacity: int | None = None
    total_full: int | None = None
    trials: int = 1_000_000
    seed: int = 0
    workers: int = 1
    buffer_mode: str = "analysis_matched"
    burn_in: int | None = None

    def __post_init__(self) -> None:
        if self.policy not in POLICIES:
            raise ValueError(f"policy must be one of {POLICIES}, got {self.policy!r}")
        if self.buffer_mode not in BUFFER_MODES:
            raise ValueError(
                f"buffer_mode must be one of {BUFFER_MODES}, got {self.buffer_mode!r}"
            )
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.burn_in is not None and self.burn_in < 0:
            raise ValueError("burn_in must be >= 0")
        if self.policy == "hrs":
            if self.capacity is None or self.capacity < 1:
                raise ValueError("hrs requires a buffer capacity >= 1")
            n = self.budget.n_relays
            if self.total_full is None:
                # half full by default, clamped so capacity 1 stays feasible
                ne = min(math.ceil(n * self.capacity / 2), n * (self.capacity - 1))
                object.__setattr__(self, "total_full", ne)
            if not 0 <= self.total_full <= n * (self.capacity - 1):
                raise InfeasibleConfigError(
                    f"total_full={self.total_full} outside [0, {n * (self.capacity - 1)}]"
                )

    def default_burn_in(self) -> int:
        lb = self.capacity if self.capacity is not None else 1
        return 10 * self.budget.n_relays * lb

    def echo(self, burn_in: int | None) -> dict:
        """Resolved configuration embedded in reports.  The worker count is
        deliberately omitted: it must not affect any result."""
        hrs = self.policy == "hrs"
        return {
            "policy": self.policy,
            "n_relays": self.budget.n_relays,
            "mean_snr_sr": list(self.budget.mean_snr_sr),
            "mean_snr_rd": list(self.budget.mean_snr_rd),
            "rate": self.rate.rate,
            "threshold": self.rate.threshold,
            "capacity": self.capacity if hrs else None,
            "total_full": self.total_full if hrs else None,
            "buffer_mode": self.buffer_mode if hrs else None,
            "burn_in": burn_in,
            "trials": self.trials,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class SimReport:
    """Results plus the resolved configuration (self-describing)."""

    config: dict
    outage_count: int | None = None
    outage_estimate: float | None = None
    outage_stderr: float | None = None
    brs_mode_count: int | None = None
    p_brs_empirical: float | None = None
    state_histogram: dict[tuple[int, ...], int] | None = None
    delay_sum: int | None = None
    delivered: int | None = None
    average_delay: float | None = None

    def to_dict(self) -> dict:
        doc: dict = {"config": self.config, "results": {}}
        res = doc["results"]
        if self.outage_count is not None:
            res["outage"] = {
                "count": self.outage_count,
                "estimate": self.outage_estimate,
                "stderr": self.outage_stderr,
            }
        if self.brs_mode_count is not None:
            res["mode"] = {
                "brs_count": self.brs_mode_count,
                "p_brs": self.p_brs_empirical,
            }
        if self.state_histogram is not None:
            res["states"] = [
                {"state": list(state), "count": count}
                for state, count in sorted(self.state_histogram.items())
            ]
        if self.delivered is not None:
            res["delay"] = {
                "delay_sum": self.delay_sum,
                "delivered": self.delivered,
                "average": self.average_delay,
            }
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _binomial_stderr(estimate: float, trials: int) -> float:
    return math.sqrt(estimate * (1.0 - estimate) / trials)


def _run_memoryless(config: SimConfig) -> SimReport:
    count_fn = kernels.count_brs_outages if config.policy == "brs" else kernels.count_mmrs_outages
    threshold = config.rate.threshold
    sizes = chunk_sizes(config.trials)

    def one_chunk(idx: int) -> int:
        rng = chunk_rng(config.seed, idx)
        g, h = sample_block(config.budget, rng, sizes[idx])
        return count_fn(g, h, threshold)

    if config.workers > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            outages = sum(pool.map(one_chunk, range(len(sizes))))
    else:
        outages = sum(one_chunk(i) for i in range(len(sizes)))

    estimate = outages / config.trials
    return SimReport(
        config=config.echo(None),
        outage_count=outages,
        outage_estimate=estimate,
        outage_stderr=_binomial_stderr(estimate, config.trials),
    )


def _decode_histogram(visits: np.ndarray, n_relays: int, capacity: int) -> dict:
    hist: dict[tuple[int, ...], int] = {}
    for idx in np.flatnonzero(visits):
        idx = int(idx)
        state = tuple((idx // capacity**i) % capacity for i in range(n_relays))
        hist[state] = int(visits[idx])
    return hist


def _run_hrs(
    config: SimConfig, *, burn_in: int, track_states: bool, measure_delays: bool
) -> SimReport:
    n = config.budget.n_relays
    capacity = config.capacity
    assert capacity is not None
    if track_states and capacity**n > MAX_TRACKED_STATES:
        raise UnsupportedConfigError(
            f"state histogram needs a dense table of {capacity**n} cells "
            f"(limit {MAX_TRACKED_STATES}); rerun without state tracking"
        )
    threshold = config.rate.threshold
    outage_aware = config.buffer_mode == "outage_aware"

    fill = initial_buffer_fill(n, capacity, config.total_full)
    occupancy = np.array(fill.occupancy, dtype=np.int64)
    queue = np.zeros((n, capacity), dtype=np.int64)
    qhead = np.zeros(n, dtype=np.int64)
    for i, k in enumerate(fill.occupancy):
        queue[i, :k] = -1  # pre-filled packets: never delay-measured
    visits = np.zeros(capacity**n if track_states else 1, dtype=np.int64)
    measure_from = burn_in if measure_delays else 1 << 62

    total = burn_in + config.trials
    outages = brs_modes = delay_sum = delivered = 0
    done = 0
    for idx, size in enumerate(chunk_sizes(total)):
        rng = chunk_rng(config.seed, idx)
        g, h = sample_block(config.budget, rng, size)
        lo = 0
        if done < burn_in:
            lo = min(burn_in - done, size)  # burn-in slice: not measured
            kernels.hrs_block(
                g[:lo], h[:lo], threshold, capacity, occupancy, queue, qhead,
                done, outage_aware, visits, False, measure_from,
            )
        if lo < size:
            o, b, d, k = kernels.hrs_block(
                g[lo:], h[lo:], threshold, capacity, occupancy, queue, qhead,
                done + lo, outage_aware, visits, track_states, measure_from,
            )
            outages += o
            brs_modes += b
            delay_sum += d
            delivered += k
        done += size

    estimate = outages / config.trials
    return SimReport(
        config=config.echo(burn_in),
        outage_count=outages,
        outage_estimate=estimate,
        outage_stderr=_binomial_stderr(estimate, config.trials),
        brs_mode_count=brs_modes,
        p_brs_empirical=brs_modes / config.trials,
        state_histogram=_decode_histogram(visits, n, capacity) if track_states else None,
        delay_sum=delay_sum if measure_delays else None,
        delivered=delivered if measure_delays else None,
        average_delay=(delay_sum / delivered if delivered else None)
        if measure_delays
        else None,
    )


def run_outage_sim(config: SimConfig) -> SimReport:
    """Estimate outage probability over `trials` intervals."""
    if config.policy in ("brs", "mmrs"):
        return _run_memoryless(config)
    burn_in = config.burn_in if config.burn_in is not None else 0
    return _run_hrs(config, burn_in=burn_in, track_states=False, measure_delays=False)


def empirical_p_brs(config: SimConfig) -> SimReport:
    """Fraction of HRS intervals operating in the BRS fallback, plus the
    histogram of visited occupancy states (measured after burn-in)."""
    if config.policy != "hrs":
        raise UnsupportedConfigError("mode statistics are defined for the hrs policy only")
    if config.buffer_mode != "analysis_matched":
        raise UnsupportedConfigError(
            "mode statistics compare against the exact chain, which assumes "
            "analysis_matched buffer dynamics"
        )
    burn_in = config.burn_in if config.burn_in is not None else config.default_burn_in()
    return _run_hrs(config, burn_in=burn_in, track_states=True, measure_delays=False)


def run_delay_sim(config: SimConfig) -> SimReport:
    """Average per-packet delay in transmission intervals.

    A packet enqueued and forwarded within the same interval has delay 0;
    BRS is pure pass-through, so its average delay is exactly 0.  MMRS delay
    is undefined under the idealized-buffer assumption.
    """
    if config.policy == "mmrs":
        raise UnsupportedConfigError(
            "delay is undefined for mmrs: its idealized buffers are never "
            "full or empty, so packet waiting times are unbounded"
        )
    if config.policy == "brs":
        return SimReport(
            config=config.echo(None),
            delay_sum=0,
            delivered=config.trials,
            average_delay=0.0,
        )
    burn_in = config.burn_in if config.burn_in is not None else config.default_burn_in()
    return _run_hrs(config, burn_in=burn_in, track_states=False, measure_delays=True)
