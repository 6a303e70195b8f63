"""Kernel backend selection.

The compiled extension is used when importable; setting the environment
variable ``PBEI_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

from . import _purekernels

if os.environ.get("PBEI_PURE_PYTHON", "") not in ("", "0"):
    _impl = _purekernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _purekernels

BACKEND = "compiled" if _impl is not _purekernels else "python"

monomial_divides = _impl.monomial_divides
reduce_full = _impl.reduce_full
snf_diagonal = _impl.snf_diagonal

__all__ = ["BACKEND", "monomial_divides", "reduce_full", "snf_diagonal"]
