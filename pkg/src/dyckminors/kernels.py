"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set DYCKMINORS_PURE=1 in the environment to force the pure-Python kernels.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("DYCKMINORS_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels


def owner_components(indptr, indices, owner, nparts):
    return _impl.owner_components(indptr, indices, owner, nparts)


def vertex_flow(n, indptr, indices, xmask, ymask, limit):
    return _impl.vertex_flow(n, indptr, indices, xmask, ymask, limit)


def tw_decide(n, adj, k, state_cap):
    if n > 63:
        return _pykernels.tw_decide(n, adj, k, state_cap)
    return _impl.tw_decide(n, adj, k, state_cap)


def csr(G):
    """CSR adjacency (indptr, indices) of a Graph as plain lists."""
    indptr = [0]
    indices = []
    for v in range(G.n):
        indices.extend(G.adj[v])
        indptr.append(len(indices))
    return indptr, indices
