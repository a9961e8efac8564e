"""Select the exact-kernel implementation at import time.

The compiled extension is preferred; the pure-Python twin is the fallback.
Set JOINSPECTRA_PURE_PYTHON=1 to force the fallback (used by the benchmark
and by tests that exercise both paths).
"""

import os

if os.environ.get("JOINSPECTRA_PURE_PYTHON") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:  # pragma: no cover - depends on the build environment
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND_NAME
charpoly_int = _impl.charpoly_int
charpoly_adjugate_int = _impl.charpoly_adjugate_int
