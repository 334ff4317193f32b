"""Backend selection for the scan kernels.

The compiled extension is used when it imports; otherwise the numpy module
takes over.  Setting ``STABLECOUNT_KERNELS=python`` forces the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def available() -> dict[str, ModuleType]:
    found = {"python": _pykernels}
    if _ckernels is not None:
        found["compiled"] = _ckernels
    return found


def select(name: str | None = None) -> ModuleType:
    name = name or os.environ.get("STABLECOUNT_KERNELS") or ("compiled" if _ckernels else "python")
    try:
        return available()[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} not available") from None


backend = select()
BACKEND_NAME = "compiled" if backend is _ckernels else "python"
