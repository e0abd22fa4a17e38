"""Kernel selection: the compiled extension when built, else the fallback.

Set ``CODESPECTRA_KERNEL=python`` to force the pure-Python kernel or
``CODESPECTRA_KERNEL=cython`` to insist on the compiled one (ImportError if
it is missing). Both expose the same ``enumerate_shard``.
"""

from __future__ import annotations

import os

from . import _kernel_py

_FORCED = os.environ.get("CODESPECTRA_KERNEL", "").strip().lower()
if _FORCED not in ("", "python", "cython"):
    raise ValueError(
        f"CODESPECTRA_KERNEL={_FORCED!r} is not one of '', 'python', 'cython'"
    )

if _FORCED == "python":
    _impl = _kernel_py
    BACKEND = "python"
else:
    try:
        from . import _kernel as _compiled

        _impl = _compiled
        BACKEND = "cython"
    except ImportError:
        if _FORCED == "cython":
            raise
        _impl = _kernel_py
        BACKEND = "python"

enumerate_shard = _impl.enumerate_shard


def available_backends() -> dict[str, object]:
    """Importable kernels by name, for benchmarks and equivalence tests."""
    out: dict[str, object] = {"python": _kernel_py}
    try:
        from . import _kernel as compiled

        out["cython"] = compiled
    except ImportError:
        pass
    return out
