"""Kernel backend selection: compiled extension when available, pure Python
fallback otherwise.  Set RTURAN_PURE=1 to force the fallback (benchmarks and
cross-checks rely on this)."""

import os

if os.environ.get("RTURAN_PURE") == "1":
    from . import pure as _impl
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _impl

from . import pure  # reference implementation is always importable

BACKEND = _impl.BACKEND
find_avoiding_coloring = _impl.find_avoiding_coloring
sample_and_check = _impl.sample_and_check
unique_counts = _impl.unique_counts
