"""Hot-loop kernels with backend selection at import.

The compiled Cython core is preferred; the numpy fallback is used when the
extension is missing or ``SUPLAP_KERNELS=numpy`` is set.  Both backends
expose ``lap_apply``, ``power_pass`` and ``power_sum`` with identical
semantics (see ``benchmarks/bench_kernels.py`` for a speed comparison).
"""

import os

from . import _numpy_impl

if os.environ.get("SUPLAP_KERNELS", "").lower() in ("numpy", "py", "python"):
    _impl = _numpy_impl
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _numpy_impl

BACKEND = _impl.BACKEND
lap_apply = _impl.lap_apply
power_pass = _impl.power_pass
power_sum = _impl.power_sum
