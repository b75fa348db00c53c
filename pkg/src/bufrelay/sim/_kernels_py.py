"""Pure-Python/numpy fallback kernels.

Same signatures and bit-identical results as the compiled versions in
``_kernels_cy``: selection uses first-maximum tie-breaking (numpy argmax),
outage is counted on exactly the same float comparisons, and the buffer
chain applies identical update rules.  The per-interval state loop runs on
plain Python lists after vectorizing the per-interval selection, which keeps
the fallback usable (roughly 1e6 intervals per second).
"""

from __future__ import annotations

import numpy as np


def count_brs_outages(g: np.ndarray, h: np.ndarray, threshold: float) -> int:
    """Outages of the best-bottleneck relay over a (T, N) block."""
    return int(np.count_nonzero(np.minimum(g, h).max(axis=1) <= threshold))


def count_mmrs_outages(g: np.ndarray, h: np.ndarray, threshold: float) -> int:
    """Outages of the max-max selection (idealized buffers) over a (T, N) block."""
    return int(
        np.count_nonzero(np.minimum(g.max(axis=1), h.max(axis=1)) <= threshold)
    )


def hrs_block(
    g: np.ndarray,
    h: np.ndarray,
    threshold: float,
    capacity: int,
    occupancy: np.ndarray,
    queue: np.ndarray,
    qhead: np.ndarray,
    start_interval: int,
    outage_aware: bool,
    visits: np.ndarray,
    track_visits: bool,
    measure_from: int,
) -> tuple[int, int, int, int]:
    """Advance the HRS buffer chain over one block of draws.

    occupancy/queue/qhead carry the chain state across blocks and are updated
    in place; queue is an (N, capacity) ring buffer of enqueue intervals with
    qhead the per-relay head slot.  The pre-decision state of every interval
    is recorded into `visits` (mixed-radix index, base `capacity`) when
    track_visits is set.  Delays are accumulated for packets enqueued at or
    after `measure_from`.  Returns (outages, brs_modes, delay_sum, delivered).
    """
    t_count, n = g.shape
    mins = np.minimum(g, h)
    b_arr = mins.argmax(axis=1)
    snr_b = mins[np.arange(t_count), b_arr].tolist()
    br_arr = g.argmax(axis=1)
    bt_arr = h.argmax(axis=1)
    g_br = g[np.arange(t_count), br_arr].tolist()
    h_bt = h[np.arange(t_count), bt_arr].tolist()
    g_b = g[np.arange(t_count), b_arr].tolist()
    h_b = h[np.arange(t_count), b_arr].tolist()
    b_l = b_arr.tolist()
    br_l = br_arr.tolist()
    bt_l = bt_arr.tolist()

    occ = occupancy.tolist()
    heads = qhead.tolist()
    rings = [list(row) for row in queue]
    powers = [capacity**i for i in range(n)]
    state_idx = sum(o * p for o, p in zip(occ, powers))
    full = capacity - 1

    outages = 0
    brs_modes = 0
    delay_sum = 0
    delivered = 0

    for t in range(t_count):
        if track_visits:
            visits[state_idx] += 1
        now = start_interval + t
        if occ[br_l[t]] == full or occ[bt_l[t]] == 0:
            brs_modes += 1
            rx = tx = b_l[t]
            snr = snr_b[t]
            succ_g = g_b[t] > threshold
            succ_h = h_b[t] > threshold
        else:
            rx, tx = br_l[t], bt_l[t]
            snr = g_br[t] if g_br[t] < h_bt[t] else h_bt[t]
            succ_g = g_br[t] > threshold
            succ_h = h_bt[t] > threshold
        if snr <= threshold:
            outages += 1

        if outage_aware:
            enqueue = succ_g and (occ[rx] < full or (rx == tx and succ_h))
        else:
            enqueue = True
        if enqueue:
            rings[rx][(heads[rx] + occ[rx]) % capacity] = now
            occ[rx] += 1
            state_idx += powers[rx]
        if outage_aware:
            dequeue = succ_h and occ[tx] > 0
        else:
            dequeue = True
        if dequeue:
            ts = rings[tx][heads[tx]]
            heads[tx] = (heads[tx] + 1) % capacity
            occ[tx] -= 1
            state_idx -= powers[tx]
            if ts >= measure_from:
                delay_sum += now - ts
                delivered += 1

    occupancy[:] = occ
    qhead[:] = heads
    for i in range(n):
        queue[i, :] = rings[i]
    return outages, brs_modes, delay_sum, delivered
