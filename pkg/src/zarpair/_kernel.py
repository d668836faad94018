"""Backend selection for the line-permutation search kernel.

The compiled extension is preferred when it imported cleanly and the
structure fits in 64-bit masks; otherwise the pure-Python twin runs the
identical algorithm. Set ZARPAIR_PURE=1 to force the fallback.
"""

from __future__ import annotations

import os

from . import _autkernel_py

try:
    from . import _autkernel as _compiled
except ImportError:
    _compiled = None

if os.environ.get("ZARPAIR_PURE"):
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "pure-python"


def search_line_maps(n, src_points, dst_points, find_all=True):
    """All (or the first) line permutations mapping src points onto dst points.

    Points are tuples of 0-based line indices; returned permutations are
    0-based image tuples, sorted for determinism.
    """
    if _compiled is not None and n <= 64:
        return _compiled.search_line_maps(n, src_points, dst_points, find_all)
    return _autkernel_py.search_line_maps(n, src_points, dst_points, find_all)
