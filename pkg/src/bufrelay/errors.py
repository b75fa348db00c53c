"""Exception types shared across the package."""


class InfeasibleConfigError(ValueError):
    """A buffer configuration that cannot exist, e.g. N_e outside [0, N*(L_b-1)]."""


class UnsupportedConfigError(ValueError):
    """A request outside a function's supported domain (not a bug, a refusal)."""


class InternalInconsistencyError(RuntimeError):
    """A self-check that must hold by construction failed."""
