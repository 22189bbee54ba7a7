"""Kernel backend selection.

The compiled extension is preferred when importable; DETRING_BACKEND=python
forces the pure fallback, DETRING_BACKEND=cython insists on the extension.
Consumers call through module attributes (kernels.poly_mul, ...) so
``use_backend`` can swap implementations at runtime, which the benchmark and
the parity tests rely on.
"""

import os

from . import _kernels as _py
from .errors import ParameterError

_IMPLS = {"python": _py}
try:
    from . import _kernels_c as _c

    _IMPLS["cython"] = _c
except ImportError:
    _c = None

_EXPORTED = ("poly_mul", "poly_addmul", "leading_monomial", "system_holds", "row_combine")

BACKEND = None


def available_backends():
    return tuple(sorted(_IMPLS))


def use_backend(name):
    """Bind the module-level kernel functions to the named implementation."""
    global BACKEND
    try:
        impl = _IMPLS[name]
    except KeyError:
        raise ParameterError(
            f"unknown kernel backend {name!r}; available: {available_backends()}"
        ) from None
    for fn in _EXPORTED:
        globals()[fn] = getattr(impl, fn)
    BACKEND = name
    return name


_requested = os.environ.get("DETRING_BACKEND", "").strip().lower()
if _requested:
    use_backend(_requested)  # unknown or unavailable name should fail loudly
else:
    use_backend("cython" if "cython" in _IMPLS else "python")
