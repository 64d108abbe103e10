"""Backend selection for the subset-sum kernel.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``SIGNED_CSF_PURE`` is set to a non-empty value, the
pure-Python implementation is used.  Both return identical tables.
"""

import os

from . import _kernel_py
from ._kernel_py import decode_type, encode_type

try:
    from . import _kernel as _compiled
except ImportError:  # extension not built
    _compiled = None

if _compiled is not None and not os.environ.get("SIGNED_CSF_PURE"):
    BACKEND = "cython"
    subset_type_sums = _compiled.subset_type_sums
else:
    BACKEND = "python"
    subset_type_sums = _kernel_py.subset_type_sums

python_subset_type_sums = _kernel_py.subset_type_sums
compiled_subset_type_sums = _compiled.subset_type_sums if _compiled is not None else None

__all__ = [
    "BACKEND",
    "subset_type_sums",
    "python_subset_type_sums",
    "compiled_subset_type_sums",
    "encode_type",
    "decode_type",
]
