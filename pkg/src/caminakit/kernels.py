"""Backend selection for the hot kernels.

The compiled extension is used when it was built; otherwise the numpy
fallback. Set ``CAMINAKIT_BACKEND=python`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _pykernels

_ckernels = None
if os.environ.get("CAMINAKIT_BACKEND", "").lower() != "python":
    try:
        from . import _ckernels  # type: ignore[no-redef]
    except ImportError:
        _ckernels = None

_impl = _ckernels if _ckernels is not None else _pykernels

BACKEND: str = _impl.BACKEND
is_associative = _impl.is_associative
conjugacy_labels = _impl.conjugacy_labels
class_mult_coeffs = _impl.class_mult_coeffs
coset_in_class = _impl.coset_in_class
commutators_cover = _impl.commutators_cover
closure = _impl.closure
rref_mod_p = _impl.rref_mod_p


def available_backends() -> dict:
    """Map backend name to kernel module, for tests and benchmarks."""
    out = {"python": _pykernels}
    if _ckernels is not None:
        out["cython"] = _ckernels
    return out
