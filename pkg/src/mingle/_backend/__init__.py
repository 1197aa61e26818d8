"""Backend selection for the simulation kernels.

The compiled extension is used when it imports cleanly; otherwise the
numpy/scipy fallback takes over. Both expose the same functions and produce
bit-identical results, so the choice only affects speed. Set the environment
variable MINGLE_BACKEND=python (or =cython) before import to force one.
"""

from __future__ import annotations

import os

from . import _pykernels

python = _pykernels
compiled = None
try:
    from . import _ckernels as compiled  # type: ignore[no-redef]
except ImportError:
    compiled = None

_forced = os.environ.get("MINGLE_BACKEND", "").strip().lower()
if _forced == "python":
    active = python
elif _forced == "cython":
    if compiled is None:
        raise ImportError("MINGLE_BACKEND=cython but the compiled kernels are not built")
    active = compiled
elif _forced in ("", "auto"):
    active = compiled if compiled is not None else python
else:
    raise ImportError(f"unknown MINGLE_BACKEND value {_forced!r}")

BACKEND_NAME = active.NAME
