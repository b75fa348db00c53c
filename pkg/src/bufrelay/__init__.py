"""Buffer-aided relay selection toolkit.

Exact outage analysis and seeded Monte Carlo simulation for three two-hop
decode-and-forward relay selection policies: best relay selection (BRS),
max-max relay selection (MMRS), and the buffer-aware hybrid (HRS), including
the exact Markov analysis of the HRS buffer-occupancy chain.
"""

from .channel import (
    ChannelRealization,
    LinkBudget,
    RateConfig,
    db_to_linear,
    linear_to_db,
    sample_block,
    sample_realization,
    snr_threshold,
)
from .errors import InfeasibleConfigError, InternalInconsistencyError, UnsupportedConfigError
from .outage import (
    GainSummary,
    MMRS_SNR_GAIN_LIMIT_DB,
    OutageCurve,
    OutagePoint,
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
from .selection import (
    BufferState,
    Decision,
    Mode,
    end_to_end_snr,
    select_brs,
    select_hrs,
    select_mmrs,
)
from .sim import (
    SimConfig,
    SimReport,
    backend_name,
    empirical_p_brs,
    initial_buffer_fill,
    run_delay_sim,
    run_outage_sim,
)

__version__ = "0.1.0"
