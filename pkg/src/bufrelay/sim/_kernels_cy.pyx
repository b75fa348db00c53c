# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled simulation kernels (hot inner loops).

Bit-identical to ``_kernels_py``: same tie-breaking (first maximum), same
float comparisons, same buffer update rules.  The pure loops make the
per-interval HRS chain and the per-trial outage counts run at C speed.
"""


def count_brs_outages(double[:, ::1] g, double[:, ::1] h, double threshold):
    """Outages of the best-bottleneck relay over a (T, N) block."""
    cdef Py_ssize_t t, i, tn = g.shape[0], n = g.shape[1]
    cdef double best, v
    cdef long long count = 0
    for t in range(tn):
        best = -1.0
        for i in range(n):
            v = g[t, i] if g[t, i] < h[t, i] else h[t, i]
            if v > best:
                best = v
        if best <= threshold:
            count += 1
    return int(count)


def count_mmrs_outages(double[:, ::1] g, double[:, ::1] h, double threshold):
    """Outages of the max-max selection (idealized buffers) over a (T, N) block."""
    cdef Py_ssize_t t, i, tn = g.shape[0], n = g.shape[1]
    cdef double gmax, hmax, v
    cdef long long count = 0
    for t in range(tn):
        gmax = g[t, 0]
        hmax = h[t, 0]
        for i in range(1, n):
            if g[t, i] > gmax:
                gmax = g[t, i]
            if h[t, i] > hmax:
                hmax = h[t, i]
        v = gmax if gmax < hmax else hmax
        if v <= threshold:
            count += 1
    return int(count)


def hrs_block(
    double[:, ::1] g,
    double[:, ::1] h,
    double threshold,
    Py_ssize_t capacity,
    long long[::1] occupancy,
    long long[:, ::1] queue,
    long long[::1] qhead,
    long long start_interval,
    bint outage_aware,
    long long[::1] visits,
    bint track_visits,
    long long measure_from,
):
    """Advance the HRS buffer chain over one block of draws.

    See the Python fallback for the full contract; state arrays are updated
    in place and (outages, brs_modes, delay_sum, delivered) is returned.
    """
    cdef Py_ssize_t t, i, rx, tx, br, bt, b, tn = g.shape[0], n = g.shape[1]
    cdef double gmax, hmax, bmax, v, snr, s_g, s_h
    cdef long long outages = 0, brs_modes = 0, delay_sum = 0, delivered = 0
    cdef long long now, ts, state_idx = 0, power
    cdef long long full = capacity - 1
    cdef bint succ_g, succ_h, enqueue, dequeue

    power = 1
    for i in range(n):
        state_idx += occupancy[i] * power
        power *= capacity

    cdef long long[::1] powers_v = occupancy.copy()
    power = 1
    for i in range(n):
        powers_v[i] = power
        power *= capacity

    for t in range(tn):
        if track_visits:
            visits[state_idx] += 1
        now = start_interval + t

        br = 0
        bt = 0
        b = 0
        gmax = g[t, 0]
        hmax = h[t, 0]
        bmax = gmax if gmax < hmax else hmax
        for i in range(1, n):
            if g[t, i] > gmax:
                gmax = g[t, i]
                br = i
            if h[t, i] > hmax:
                hmax = h[t, i]
                bt = i
            v = g[t, i] if g[t, i] < h[t, i] else h[t, i]
            if v > bmax:
                bmax = v
                b = i

        if occupancy[br] == full or occupancy[bt] == 0:
            brs_modes += 1
            rx = b
            tx = b
            snr = bmax
            s_g = g[t, b]
            s_h = h[t, b]
        else:
            rx = br
            tx = bt
            snr = gmax if gmax < hmax else hmax
            s_g = gmax
            s_h = hmax
        if snr <= threshold:
            outages += 1

        succ_g = s_g > threshold
        succ_h = s_h > threshold
        if outage_aware:
            enqueue = succ_g and (occupancy[rx] < full or (rx == tx and succ_h))
        else:
            enqueue = True
        if enqueue:
            queue[rx, (qhead[rx] + occupancy[rx]) % capacity] = now
            occupancy[rx] += 1
            state_idx += powers_v[rx]
        if outage_aware:
            dequeue = succ_h and occupancy[tx] > 0
        else:
            dequeue = True
        if dequeue:
            ts = queue[tx, qhead[tx]]
            qhead[tx] = (qhead[tx] + 1) % capacity
            occupancy[tx] -= 1
            state_idx -= powers_v[tx]
            if ts >= measure_from:
                delay_sum += now - ts
                delivered += 1

    return int(outages), int(brs_modes), int(delay_sum), int(delivered)
