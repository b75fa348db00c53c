import numpy as np
import pytest

from bufrelay.channel import ChannelRealization, LinkBudget, sample_block
from bufrelay.selection import (
    BufferState,
    Decision,
    Mode,
    end_to_end_snr,
    select_brs,
    select_hrs,
    select_mmrs,
)


def real(g, h):
    return ChannelRealization(tuple(g), tuple(h))


def test_select_brs_examples():
    assert select_brs(real((5, 2), (1, 4))) == 2  # bottlenecks 1 vs 2
    assert select_brs(real((7,), (0.5,))) == 1
    assert select_brs(real((3, 3), (3, 3))) == 1  # tie -> lowest index


def test_select_mmrs_examples():
    assert select_mmrs(real((5, 2), (1, 4))) == (1, 2)
    assert select_mmrs(real((5, 2), (4, 1))) == (1, 1)
    assert select_mmrs(real((9,), (2,))) == (1, 1)
    assert select_mmrs(real((4, 4), (1, 1))) == (1, 1)  # ties -> lowest index


def test_select_hrs_example_modes():
    channels = real((5, 2), (1, 4))
    d = select_hrs(channels, BufferState((1, 3), capacity=4))
    assert (d.receive, d.transmit, d.mode) == (1, 2, Mode.MMRS)
    # receive candidate (relay 1? no: br=1 has occupancy 3 = capacity-1) -> fallback
    d = select_hrs(channels, BufferState((3, 3), capacity=4))
    assert d.mode is Mode.BRS
    assert d.receive == d.transmit == select_brs(channels)


def test_select_hrs_capacity_one_always_brs():
    rng = np.random.default_rng(3)
    buffers = BufferState((0, 0, 0), capacity=1)
    for _ in range(200):
        channels = real(rng.exponential(size=3), rng.exponential(size=3))
        d = select_hrs(channels, buffers)
        assert d.mode is Mode.BRS
        assert d.receive == d.transmit == select_brs(channels)


def test_select_hrs_interior_always_mmrs():
    rng = np.random.default_rng(4)
    buffers = BufferState((1, 2, 2), capacity=4)  # all in 1..capacity-2
    for _ in range(200):
        channels = real(rng.exponential(size=3), rng.exponential(size=3))
        d = select_hrs(channels, buffers)
        assert d.mode is Mode.MMRS
        assert (d.receive, d.transmit) == select_mmrs(channels)


def test_select_hrs_dimension_mismatch():
    with pytest.raises(ValueError):
        select_hrs(real((1, 2), (3, 4)), BufferState((1,), capacity=4))


def test_end_to_end_snr():
    channels = real((5, 2), (1, 4))
    assert end_to_end_snr(channels, Decision(1, 2, Mode.MMRS)) == 4.0
    for i in (1, 2):
        d = Decision(i, i, Mode.BRS)
        assert end_to_end_snr(channels, d) == min(channels.snr_sr[i - 1], channels.snr_rd[i - 1])
    with pytest.raises(IndexError):
        end_to_end_snr(channels, Decision(3, 1, Mode.MMRS))


def test_outage_definition_boundary():
    # outage iff end-to-end SNR <= threshold
    channels = real((5, 2), (1, 4))
    snr = end_to_end_snr(channels, Decision(1, 2, Mode.MMRS))
    assert snr <= 4.0 and not snr <= 3.999999


def test_buffer_state_validation():
    state = BufferState((0, 3), capacity=4)
    assert state.total() == 3
    with pytest.raises(ValueError):
        BufferState((4,), capacity=4)
    with pytest.raises(ValueError):
        BufferState((-1,), capacity=4)
    with pytest.raises(ValueError):
        BufferState((), capacity=4)


def test_decision_validation():
    with pytest.raises(ValueError):
        Decision(1, 2, Mode.BRS)
    with pytest.raises(ValueError):
        Decision(0, 1, Mode.MMRS)


def test_mmrs_dominates_brs_per_realization():
    # max of bottlenecks <= min of per-hop maxima, checked on 1e5 draws
    budget = LinkBudget.iid(4, 2.0)
    g, h = sample_block(budget, np.random.default_rng(17), 100_000)
    for gi, hi in zip(g, h):
        channels = ChannelRealization(tuple(gi), tuple(hi))
        brs_snr = end_to_end_snr(channels, Decision(*(select_brs(channels),) * 2, Mode.BRS))
        rx, tx = select_mmrs(channels)
        mmrs_snr = end_to_end_snr(channels, Decision(rx, tx, Mode.MMRS))
        assert mmrs_snr >= brs_snr


def test_selectors_scale_equivariant():
    rng = np.random.default_rng(23)
    buffers = BufferState((2, 0, 3), capacity=4)
    for _ in range(500):
        g = rng.exponential(size=3)
        h = rng.exponential(size=3)
        for scale in (1e-6, 0.5, 1.0, 7.3, 1e9):
            a, b = real(g, h), real(g * scale, h * scale)
            assert select_brs(a) == select_brs(b)
            assert select_mmrs(a) == select_mmrs(b)
            assert select_hrs(a, buffers) == select_hrs(b, buffers)


def test_selectors_deterministic_on_ties():
    channels = real((2, 2, 2), (2, 2, 2))
    buffers = BufferState((1, 1, 1), capacity=3)
    results = {(select_brs(channels), select_mmrs(channels), select_hrs(channels, buffers))
               for _ in range(20)}
    assert len(results) == 1
