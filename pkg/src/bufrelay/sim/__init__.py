"""Monte Carlo simulation of buffer-aided relay selection.

The hot kernels live in a compiled extension with a pure-Python fallback
selected at import time (see ``_backend``); ``benchmarks/bench_kernels.py``
compares the two.
"""

from ._backend import backend_name
from ._streams import CHUNK, chunk_rng, chunk_sizes, derive_seed
from .engine import (
    SimConfig,
    SimReport,
    empirical_p_brs,
    initial_buffer_fill,
    run_delay_sim,
    run_outage_sim,
)

__all__ = [
    "SimConfig",
    "SimReport",
    "initial_buffer_fill",
    "run_outage_sim",
    "empirical_p_brs",
    "run_delay_sim",
    "backend_name",
    "derive_seed",
    "chunk_rng",
    "chunk_sizes",
    "CHUNK",
]
