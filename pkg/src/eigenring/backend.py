"""Kernel backend selection.

The compiled extension is preferred when importable; the numpy reference
kernels are the fallback. ``EIGENRING_BACKEND`` forces the choice: ``py`` /
``python`` for the reference kernels, ``c`` / ``compiled`` to require the
extension (ImportError if it was not built).
"""

import os

_requested = os.environ.get("EIGENRING_BACKEND", "auto").lower()

if _requested in ("py", "python"):
    from . import _fpcore_py as _impl
elif _requested in ("c", "compiled"):
    from . import _fpcore_cy as _impl
elif _requested == "auto":
    try:
        from . import _fpcore_cy as _impl
    except ImportError:
        from . import _fpcore_py as _impl
else:
    raise ImportError(f"unknown EIGENRING_BACKEND value: {_requested!r}")

kernel_matmul = _impl.matmul
kernel_rref = _impl.rref
BACKEND = "compiled" if _impl.__name__.endswith("_cy") else "python"
