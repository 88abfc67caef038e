"""Menger-type primitives: minimum vertex cuts and maximum disjoint path systems."""

from .graph import Linkage
from .kernels import csr, vertex_flow


def min_vertex_cut(G, X, Y, limit=None):
    """Minimum X-Y vertex cut and a maximum set of disjoint X-Y paths.

    Vertices of X & Y count toward the cut (each yields a one-vertex path).
    Returned paths are proper X-Y paths: only their first vertex lies in X
    and only their last vertex lies in Y.  ``limit`` stops the augmentation
    early; the cut is then only meaningful when fewer than ``limit`` paths
    were found.
    """
    X = set(X)
    Y = set(Y)
    if not X or not Y:
        raise ValueError("X and Y must be nonempty")
    if limit is None:
        limit = G.n + 1
    indptr, indices = csr(G)
    xmask = [1 if v in X else 0 for v in range(G.n)]
    ymask = [1 if v in Y else 0 for v in range(G.n)]
    raw, reach_in, reach_out = vertex_flow(G.n, indptr, indices, xmask, ymask, limit)
    cut = {v for v in range(G.n) if reach_in[v] and not reach_out[v]}
    paths = []
    for p in raw:
        start = max(i for i, v in enumerate(p) if v in X)
        end = next(i for i in range(start, len(p)) if p[i] in Y)
        paths.append(tuple(p[start:end + 1]))
    paths.sort()
    return cut, Linkage(paths)


def max_disjoint_paths(G, X, Y):
    return min_vertex_cut(G, X, Y)[1]


def separation_from_cut(G, X, cut):
    """The separation (A, B) induced by a vertex cut: A = cut + whatever X reaches."""
    cut = set(cut)
    reach = set()
    stack = [x for x in X if x not in cut]
    reach.update(stack)
    while stack:
        v = stack.pop()
        for w in G.adj[v]:
            if w not in cut and w not in reach:
                reach.add(w)
                stack.append(w)
    A = reach | cut
    B = set(range(G.n)) - reach
    return A, B
