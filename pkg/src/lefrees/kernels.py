"""Backend selection for the hot kernels.

The compiled extension ``_ckernels`` is used when it was built; otherwise the
pure-Python twin is used.  Setting ``LEFREES_PURE_PYTHON=1`` forces the
fallback (useful for benchmarking and for differential tests).
"""

import os

from . import _pykernels

try:
    if os.environ.get("LEFREES_PURE_PYTHON") == "1":
        raise ImportError("pure-Python backend requested")
    from . import _ckernels as _impl

    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"

rank_mod_p = _impl.rank_mod_p
minimalize = _impl.minimalize
symbolic_power_gens = _impl.symbolic_power_gens


def available_backends():
    """Map backend name to kernel module for every backend importable here."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
