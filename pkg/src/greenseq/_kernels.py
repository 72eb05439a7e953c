"""Kernel selection: compiled extension if available, pure Python otherwise.

Set GREENSEQ_PURE=1 to force the pure-Python kernels (used by the
benchmark and by tests that compare the two implementations).
"""

from __future__ import annotations

import os

if os.environ.get("GREENSEQ_PURE") == "1":
    from greenseq import _pure as impl
else:
    try:
        from greenseq import _speedups as impl  # type: ignore[no-redef]
    except ImportError:
        from greenseq import _pure as impl  # type: ignore[no-redef]

IMPL_NAME: str = impl.IMPL_NAME
mutate_rows = impl.mutate_rows
canonical_min = impl.canonical_min
