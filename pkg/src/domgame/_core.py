"""Select the search kernels: compiled when available, else pure Python.

Set ``DOMGAME_PURE=1`` to force the pure-Python kernels.
"""

import os

from domgame import _purecore

if os.environ.get("DOMGAME_PURE"):
    _impl = _purecore
else:
    try:
        from domgame import _fastcore as _impl
    except ImportError:
        _impl = _purecore

BACKEND = "compiled" if _impl is not _purecore else "python"
MAX_VERTICES = _impl.MAX_VERTICES
explore = _impl.explore
wins = _impl.wins
