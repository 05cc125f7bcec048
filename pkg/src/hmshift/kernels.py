"""Select the search kernel backend at import time.

The compiled extension is used when it was built; otherwise the pure-Python
module takes over.  ``HMSHIFT_BACKEND=python`` forces the fallback and
``HMSHIFT_BACKEND=cython`` makes a missing extension an error.
"""
from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_py


def load(name: str) -> ModuleType:
    if name == "python":
        return _kernels_py
    if name == "cython":
        from . import _kernels  # type: ignore[attr-defined]

        return _kernels
    raise ValueError(f"unknown kernel backend {name!r}")


def available() -> list[str]:
    out = ["python"]
    try:
        load("cython")
    except ImportError:
        pass
    else:
        out.insert(0, "cython")
    return out


_choice = os.environ.get("HMSHIFT_BACKEND", "auto")
if _choice == "auto":
    BACKEND = available()[0]
else:
    BACKEND = _choice
impl = load(BACKEND)

search_intersecting = impl.search_intersecting
search_cross = impl.search_cross
