"""Backend selection for the elimination kernels.

The compiled extension is used when it was built and imports cleanly; set
``FSCODE_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

from . import _pykernels as pure

compiled = None
if os.environ.get("FSCODE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled  # type: ignore[no-redef]
    except ImportError:  # extension not built
        compiled = None

active = compiled if compiled is not None else pure

BACKEND = active.BACKEND
prepare_tables = active.prepare_tables
rref_prime = active.rref_prime
rref_table = active.rref_table
