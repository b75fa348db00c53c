"""Relay-selection policies: BRS, MMRS, and the buffer-aware HRS hybrid.

Relays are numbered 1..N (element i of an SNR or occupancy vector belongs to
relay i+1).  All selectors are pure functions; buffer evolution is handled by
the simulator.  Ties are broken toward the lowest relay index so that every
input has exactly one output (ties have probability zero under continuous
fading but occur in tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .channel import ChannelRealization

__all__ = [
    "Mode",
    "BufferState",
    "Decision",
    "select_brs",
    "select_mmrs",
    "select_hrs",
    "end_to_end_snr",
]


class Mode(str, Enum):
    BRS = "brs"
    MMRS = "mmrs"


@dataclass(frozen=True)
class BufferState:
    """Occupancy vector of the relay buffers.

    Each buffer has `capacity` elements, one of which is permanently
    reserved so that the selected relay can always receive; occupancies
    therefore live in [0, capacity - 1].
    """

    occupancy: tuple[int, ...]
    capacity: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "occupancy", tuple(int(x) for x in self.occupancy))
        if self.capacity < 1:
            raise ValueError(f"capacity must be >= 1, got {self.capacity}")
        if len(self.occupancy) == 0:
            raise ValueError("occupancy must not be empty")
        for x in self.occupancy:
            if not 0 <= x <= self.capacity - 1:
                raise ValueError(
                    f"occupancy entries must be in [0, {self.capacity - 1}], got {x}"
                )

    @property
    def n_relays(self) -> int:
        return len(self.occupancy)

    def total(self) -> int:
        """Total number of stored packets across all relays."""
        return sum(self.occupancy)


@dataclass(frozen=True)
class Decision:
    """Relays chosen for reception and transmission in one interval (1-based)."""

    receive: int
    transmit: int
    mode: Mode

    def __post_init__(self) -> None:
        if self.receive < 1 or self.transmit < 1:
            raise ValueError("relay indices are 1-based and must be >= 1")
        if self.mode is Mode.BRS and self.receive != self.transmit:
            raise ValueError("BRS uses one relay for both reception and transmission")


def select_brs(realization: ChannelRealization) -> int:
    """Relay with the best bottleneck link, argmax_i min(g_i, h_i)."""
    g, h = realization.snr_sr, realization.snr_rd
    best = max(range(realization.n_relays), key=lambda i: min(g[i], h[i]))
    return best + 1


def select_mmrs(realization: ChannelRealization) -> tuple[int, int]:
    """Best relay for reception (argmax g) and for transmission (argmax h).

    The two indices may coincide.
    """
    g, h = realization.snr_sr, realization.snr_rd
    n = realization.n_relays
    rx = max(range(n), key=lambda i: g[i])
    tx = max(range(n), key=lambda i: h[i])
    return rx + 1, tx + 1


def select_hrs(realization: ChannelRealization, buffers: BufferState) -> Decision:
    """MMRS unless its receive buffer is full or its transmit buffer is empty.

    "Full" means occupancy == capacity - 1: the reserved element keeps the
    relay able to receive when the fallback single-relay mode picks it.
    """
    if buffers.n_relays != realization.n_relays:
        raise ValueError(
            f"buffer count {buffers.n_relays} does not match realization "
            f"with {realization.n_relays} relays"
        )
    rx, tx = select_mmrs(realization)
    occ = buffers.occupancy
    if occ[rx - 1] == buffers.capacity - 1 or occ[tx - 1] == 0:
        b = select_brs(realization)
        return Decision(b, b, Mode.BRS)
    return Decision(rx, tx, Mode.MMRS)


def end_to_end_snr(realization: ChannelRealization, decision: Decision) -> float:
    """Bottleneck SNR of the selected two-hop route."""
    n = realization.n_relays
    if not (1 <= decision.receive <= n and 1 <= decision.transmit <= n):
        raise IndexError(
            f"decision {decision.receive, decision.transmit} out of range for N={n}"
        )
    return min(realization.snr_sr[decision.receive - 1], realization.snr_rd[decision.transmit - 1])
