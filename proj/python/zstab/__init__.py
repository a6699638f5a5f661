"""Exact computations for polynomial central charges and Z-stability.

Thin wrapper over the compiled extension; exact values cross the boundary
as strings suitable for fractions.Fraction.
"""

import os
import sys

_core_dir = os.environ.get("ZSTAB_CORE_DIR")
if _core_dir and _core_dir not in sys.path:
    sys.path.insert(0, _core_dir)

try:
    from _core import *  # noqa: F401,F403  (in-tree builds)
    from _core import __doc__ as _core_doc
except ImportError:
    from zstab._core import *  # noqa: F401,F403  (installed package)
    from zstab._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
