"""Pure-Python reference implementations of the hot kernels.

The compiled module ``_ckernels`` exposes the same three functions; see
``kernels.py`` for how one of them is picked at import time.
"""

from collections import deque


def owner_components(indptr, indices, owner, nparts):
    """Number of connected components induced by each part of ``owner``.

    owner[v] is the part index of v, or -1 when v belongs to no part.
    """
    n = len(owner)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(n):
        ou = owner[u]
        if ou < 0:
            continue
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if v > u and owner[v] == ou:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
    counts = [0] * nparts
    for v in range(n):
        if owner[v] >= 0 and find(v) == v:
            counts[owner[v]] += 1
    return counts


def vertex_flow(n, indptr, indices, xmask, ymask, limit):
    """Maximum set of vertex-disjoint paths from X to Y (unit vertex capacities).

    Returns (paths, reach_in, reach_out).  Each path is a list of vertices
    running from a vertex of X to a vertex of Y.  reach_in[v] / reach_out[v]
    tell whether the in/out copy of v is reachable from the source in the
    final residual network, which yields a minimum vertex cut.
    """
    inf = n + 5
    N = 2 * n + 2
    S, T = 2 * n, 2 * n + 1
    head = [-1] * N
    to = []
    cap = []
    nxt = []

    def arc(a, b, c):
        to.append(b)
        cap.append(c)
        nxt.append(head[a])
        head[a] = len(to) - 1
        to.append(a)
        cap.append(0)
        nxt.append(head[b])
        head[b] = len(to) - 1

    for v in range(n):
        arc(2 * v, 2 * v + 1, 1)
    for u in range(n):
        for p in range(indptr[u], indptr[u + 1]):
            arc(2 * u + 1, 2 * indices[p], inf)
    for v in range(n):
        if xmask[v]:
            arc(S, 2 * v, inf)
        if ymask[v]:
            arc(2 * v + 1, T, inf)

    flow = 0
    while flow < limit:
        pred = [-1] * N
        pred[S] = -2
        queue = deque([S])
        while queue and pred[T] == -1:
            a = queue.popleft()
            e = head[a]
            while e != -1:
                b = to[e]
                if cap[e] > 0 and pred[b] == -1:
                    pred[b] = e
                    queue.append(b)
                e = nxt[e]
        if pred[T] == -1:
            break
        b = T
        while b != S:
            e = pred[b]
            cap[e] -= 1
            cap[e ^ 1] += 1
            b = to[e ^ 1]
        flow += 1

    # residual reachability
    seen = [False] * N
    seen[S] = True
    queue = deque([S])
    while queue:
        a = queue.popleft()
        e = head[a]
        while e != -1:
            if cap[e] > 0 and not seen[to[e]]:
                seen[to[e]] = True
                queue.append(to[e])
            e = nxt[e]
    reach_in = [seen[2 * v] for v in range(n)]
    reach_out = [seen[2 * v + 1] for v in range(n)]

    # decompose the flow into paths; even arcs are forward arcs
    paths = []
    e = head[S]
    while e != -1:
        if e % 2 == 0 and cap[e] < inf:
            x = to[e] // 2
            path = [x]
            node = 2 * x + 1
            while True:
                f = head[node]
                step = -1
                while f != -1:
                    if f % 2 == 0 and cap[f] < inf:
                        step = f
                        break
                    f = nxt[f]
                if to[step] == T:
                    break
                w = to[step] // 2
                path.append(w)
                node = 2 * w + 1
            paths.append(path)
        e = nxt[e]
    return paths, reach_in, reach_out


def _q_size(adj, S, v, full):
    """|Q(S, v)|: vertices outside S+v reachable from v through S."""
    reach = adj[v]
    inside = reach & S
    done = 0
    while inside & ~done:
        new = inside & ~done
        done |= new
        while new:
            low = new & -new
            reach |= adj[low.bit_length() - 1]
            new ^= low
        inside = reach & S
    reach &= full & ~S & ~(1 << v)
    return bin(reach).count("1")


def tw_decide(n, adj, k, state_cap):
    """Decide tw <= k by dynamic programming over eliminated sets.

    ``adj`` is a list of neighbour bitmasks.  Returns an elimination order
    (list of vertices) witnessing width <= k, None if tw > k, or raises
    OverflowError when more than ``state_cap`` states would be stored.
    """
    full = (1 << n) - 1
    if n <= k + 1:
        return list(range(n))
    parent = {0: None}
    layer = [0]
    states = 1
    while layer:
        nxt_layer = []
        for S in layer:
            free = full & ~S
            while free:
                low = free & -free
                v = low.bit_length() - 1
                free ^= low
                T = S | low
                if T in parent:
                    continue
                if _q_size(adj, S, v, full) <= k:
                    parent[T] = (S, v)
                    states += 1
                    if states > state_cap:
                        raise OverflowError("treewidth state cap exceeded")
                    if n - bin(T).count("1") <= k + 1:
                        order = []
                        cur = T
                        while parent[cur] is not None:
                            prev, u = parent[cur]
                            order.append(u)
                            cur = prev
                        order.reverse()
                        order += [u for u in range(n) if not (T >> u) & 1]
                        return order
                    nxt_layer.append(T)
        layer = nxt_layer
    return None
