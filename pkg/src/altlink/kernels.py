"""Select the compiled state-search kernel, falling back to pure Python.

Set ``ALTLINK_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("ALTLINK_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

IMPLEMENTATION: str = _impl.IMPLEMENTATION
enumerate_assignments = _impl.enumerate_assignments
tally_states = _impl.tally_states

__all__ = ["IMPLEMENTATION", "enumerate_assignments", "tally_states"]
