"""Select the arithmetic kernel: compiled extension if available, else pure Python.

Set KMAUT_PURE=1 in the environment to force the fallback (used by the
benchmark to compare both implementations).
"""

import os

if os.environ.get("KMAUT_PURE"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

IMPL = _impl.IMPL
conv_reduce = _impl.conv_reduce
matmul = _impl.matmul
matvec = _impl.matvec
rows_gcd = _impl.rows_gcd
