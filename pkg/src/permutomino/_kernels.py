"""Kernel backend selection.

Prefers the compiled extension (permutomino._speedups, built from the .pyx
source when Cython and a C compiler are around) and falls back to the pure
Python twin.  Set PERMUTOMINO_KERNELS=python or =c to force a backend; forcing
c without the extension built is an import error on first use.
"""
from __future__ import annotations

import os

from . import _kernels_py

_forced = os.environ.get("PERMUTOMINO_KERNELS", "").strip().lower()

if _forced == "python":
    _impl = _kernels_py
elif _forced in ("c", "compiled", "speedups"):
    from . import _speedups as _impl  # type: ignore[no-redef]
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND
scan_stats = _impl.scan_stats
square_agreement = _impl.square_agreement


def backends() -> dict[str, object]:
    """Importable kernel modules by name (for benchmarks and parity tests)."""
    found: dict[str, object] = {"python": _kernels_py}
    try:
        from . import _speedups

        found["c"] = _speedups
    except ImportError:
        pass
    return found
