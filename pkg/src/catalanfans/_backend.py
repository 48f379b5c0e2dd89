"""Import-time selection of the compiled or pure-Python kernels.

The compiled extension is preferred when it imports cleanly; set
``CATALANFANS_PURE_PYTHON=1`` to force the pure-Python kernels (used by
the benchmark and the twin-equivalence tests).  ``kernels.backend_name()``
reports which one is active.
"""

import os

if os.environ.get("CATALANFANS_PURE_PYTHON"):
    from catalanfans import _kernels_py as kernels
else:
    try:
        from catalanfans import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from catalanfans import _kernels_py as kernels  # type: ignore[no-redef]

__all__ = ["kernels"]
