"""Kernel selection: compiled Cython scalars when available, pure Python otherwise.

Set QPB_BACKEND=py or QPB_BACKEND=cy to force a backend (cy raises if the
extension is missing).  Both kernels expose the same surface and produce
bit-identical canonical forms; tests/test_scalar.py runs against both.
"""

import os

_choice = os.environ.get("QPB_BACKEND", "auto").lower()

if _choice in ("py", "python"):
    from . import _scalar_py as kernel
elif _choice in ("cy", "cython", "c"):
    from . import _scalar_cy as kernel  # type: ignore[no-redef]
else:
    try:
        from . import _scalar_cy as kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _scalar_py as kernel  # type: ignore[no-redef]
