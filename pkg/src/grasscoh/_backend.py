"""Kernel selection: compiled extension when available, pure Python otherwise.

Set GRASSCOH_PURE_PYTHON=1 to force the fallback.  `set_kernel` exists for
benchmarks; it clears every cache that may hold kernel-derived values.
"""

import os

from . import _kernel_py

if os.environ.get("GRASSCOH_PURE_PYTHON"):
    kernel = _kernel_py
else:
    try:
        from . import _kernel_cy as kernel  # type: ignore[no-redef]
    except ImportError:
        kernel = _kernel_py

_cache_clearers = []


def register_cache(clear_fn):
    _cache_clearers.append(clear_fn)
    return clear_fn


def clear_caches():
    for fn in _cache_clearers:
        fn()


def set_kernel(mod):
    """Swap the active kernel (benchmark use); returns the previous one."""
    global kernel
    prev = kernel
    kernel = mod
    clear_caches()
    return prev


def backend_name() -> str:
    return kernel.NAME
