"""Kernel backend selection.

The hot bit-kernels exist twice: a compiled Cython extension (``_speed``)
and a pure numpy fallback (``_slow``).  The extension is preferred when it
imported cleanly; set ``CONJLOGIC_BACKEND`` to ``c``, ``py`` or ``auto`` to
override.  Both backends expose the same functions and are checked against
each other by the test suite.
"""

from __future__ import annotations

import os
import warnings

from . import _slow

_MODULES = {"py": _slow}

try:
    from . import _speed

    _MODULES["c"] = _speed
except ImportError:  # extension not built on this installation
    _speed = None


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_MODULES))


def get_backend(name: str):
    try:
        return _MODULES[name]
    except KeyError:
        raise ValueError(
            f"backend {name!r} not available (have: {', '.join(sorted(_MODULES))})"
        ) from None


def _select():
    requested = os.environ.get("CONJLOGIC_BACKEND", "auto").strip().lower()
    if requested in ("", "auto"):
        name = "c" if "c" in _MODULES else "py"
    elif requested in _MODULES:
        name = requested
    else:
        warnings.warn(
            f"CONJLOGIC_BACKEND={requested!r} is not available; using auto selection",
            RuntimeWarning,
            stacklevel=2,
        )
        name = "c" if "c" in _MODULES else "py"
    return _MODULES[name], name


kernels, BACKEND_NAME = _select()

#: Opcodes for axis passes, identical across backends.
AXIS_CODE = {
    "S": _slow.S,
    "SINV": _slow.SINV,
    "H": _slow.H,
    "X": _slow.FLIP_X,
    "Y": _slow.FLIP_Y,
    "Z": _slow.FLIP_Z,
}
