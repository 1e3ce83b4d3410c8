"""Pick the compiled shelling kernel when it is importable.

Set ``STRICTSPAN_PURE_PYTHON=1`` to force the pure-Python path.
"""
from __future__ import annotations

import os

from . import _shellcore_py

FOUND, EXHAUSTED, TIMED_OUT = _shellcore_py.FOUND, _shellcore_py.EXHAUSTED, _shellcore_py.TIMED_OUT

try:
    if os.environ.get("STRICTSPAN_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python forced by environment")
    from . import _shellcore as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def available_backends() -> list[str]:
    return ["cython", "python"] if _compiled is not None else ["python"]


def shell_search(face_ids, n_faces: int, k: int, budget_secs: float, backend: str | None = None):
    """Dispatch to a kernel; facet counts above 64 always use Python."""
    backend = backend or BACKEND
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not built")
        if len(face_ids) <= _compiled.MAX_FACETS:
            return _compiled.shell_search(face_ids, n_faces, k, budget_secs)
    elif backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return _shellcore_py.shell_search(face_ids, n_faces, k, budget_secs)
