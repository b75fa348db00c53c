"""Kernel backend selection: compiled extension if available, numpy fallback
otherwise.  Set BUFRELAY_KERNELS=python to force the fallback (used by the
benchmark and for debugging); both backends produce identical results.
"""

from __future__ import annotations

import os

_forced = os.environ.get("BUFRELAY_KERNELS", "").strip().lower()

if _forced in ("py", "python"):
    from . import _kernels_py as kernels

    BACKEND = "python"
elif _forced in ("cy", "cython"):
    from . import _kernels_cy as kernels  # type: ignore[no-redef]

    BACKEND = "cython"
else:
    try:
        from . import _kernels_cy as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as kernels

        BACKEND = "python"


def backend_name() -> str:
    return BACKEND
