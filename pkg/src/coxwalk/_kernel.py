"""Kernel backend selection.

Imports the compiled Cython kernel when present, otherwise the pure-Python
twin.  Set COXWALK_PURE=1 to force the fallback (used by the benchmark and
the parity tests).
"""

import os

if os.environ.get("COXWALK_PURE", "").strip() not in ("", "0"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = _impl.BACKEND
poly_mul_mod = _impl.poly_mul_mod
normalize = _impl.normalize
dot_mod = _impl.dot_mod
interval_sign = _impl.interval_sign
eval_sign_at_dyadic = _impl.eval_sign_at_dyadic
