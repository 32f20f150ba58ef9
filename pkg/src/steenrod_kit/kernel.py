"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``STEENROD_PURE_PYTHON=1`` to force the fallback (used by the benchmark
and for debugging).
"""

from __future__ import annotations

import os

if os.environ.get("STEENROD_PURE_PYTHON") == "1":
    from . import _xi_py as impl
else:
    try:
        from . import _xi_fast as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _xi_py as impl

IS_COMPILED: bool = impl.IS_COMPILED
aw = impl.aw
pushforward = impl.pushforward
xi_standard = impl.xi_standard
xi_on_vertices = impl.xi_on_vertices
