"""Hot kernels: canonical labelling and the coproduct's subset loop.

The compiled extension ``_ckernels`` is used when it has been built; otherwise
the pure-Python ``_pykernels`` is loaded.  Setting ``TAGHOPF_PURE_PYTHON=1``
forces the fallback.  ``BACKEND`` names the module actually in use.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("TAGHOPF_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

_impl = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

canonical_edges = _impl.canonical_edges
split_subset = _impl.split_subset
coproduct_counts = _impl.coproduct_counts

__all__ = [
    "BACKEND",
    "canonical_edges",
    "split_subset",
    "coproduct_counts",
    "python_backend",
    "compiled_backend",
]
