# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled versions of the kernels in _pykernels.py (same signatures)."""

from libc.stdint cimport uint64_t, int64_t
from libcpp.vector cimport vector
from libcpp.unordered_map cimport unordered_map
from libcpp.pair cimport pair


cdef int _find(vector[int]& parent, int x):
    cdef int r = x
    while parent[r] != r:
        r = parent[r]
    while parent[x] != r:
        parent[x], x = r, parent[x]
    return r


def owner_components(indptr, indices, owner, int nparts):
    cdef int n = len(owner)
    cdef vector[int] ip = indptr
    cdef vector[int] ix = indices
    cdef vector[int] ow = owner
    cdef vector[int] parent = vector[int](n)
    cdef int u, v, p, ru, rv
    for u in range(n):
        parent[u] = u
    for u in range(n):
        if ow[u] < 0:
            continue
        for p in range(ip[u], ip[u + 1]):
            v = ix[p]
            if v > u and ow[v] == ow[u]:
                ru = _find(parent, u)
                rv = _find(parent, v)
                if ru != rv:
                    parent[ru] = rv
    counts = [0] * nparts
    for v in range(n):
        if ow[v] >= 0 and _find(parent, v) == v:
            counts[ow[v]] += 1
    return counts


def vertex_flow(int n, indptr, indices, xmask, ymask, int limit):
    cdef int inf = n + 5
    cdef int N = 2 * n + 2
    cdef int S = 2 * n
    cdef int T = 2 * n + 1
    cdef vector[int] ip = indptr
    cdef vector[int] ix = indices
    cdef vector[int] head = vector[int](N, -1)
    cdef vector[int] to
    cdef vector[int] cap
    cdef vector[int] nxt
    cdef vector[int] pred = vector[int](N)
    cdef vector[int] queue = vector[int](N)
    cdef vector[char] seen = vector[char](N)
    cdef int u, v, p, a, b, e, f, qh, qt, flow, node, step, w, x

    for v in range(n):
        _arc(head, to, cap, nxt, 2 * v, 2 * v + 1, 1)
    for u in range(n):
        for p in range(ip[u], ip[u + 1]):
            _arc(head, to, cap, nxt, 2 * u + 1, 2 * ix[p], inf)
    for v in range(n):
        if xmask[v]:
            _arc(head, to, cap, nxt, S, 2 * v, inf)
        if ymask[v]:
            _arc(head, to, cap, nxt, 2 * v + 1, T, inf)

    flow = 0
    while flow < limit:
        for a in range(N):
            pred[a] = -1
        pred[S] = -2
        qh = 0
        qt = 0
        queue[qt] = S
        qt += 1
        while qh < qt and pred[T] == -1:
            a = queue[qh]
            qh += 1
            e = head[a]
            while e != -1:
                b = to[e]
                if cap[e] > 0 and pred[b] == -1:
                    pred[b] = e
                    queue[qt] = b
                    qt += 1
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

    for a in range(N):
        seen[a] = 0
    seen[S] = 1
    qh = 0
    qt = 0
    queue[qt] = S
    qt += 1
    while qh < qt:
        a = queue[qh]
        qh += 1
        e = head[a]
        while e != -1:
            if cap[e] > 0 and not seen[to[e]]:
                seen[to[e]] = 1
                queue[qt] = to[e]
                qt += 1
            e = nxt[e]
    reach_in = [bool(seen[2 * v]) for v in range(n)]
    reach_out = [bool(seen[2 * v + 1]) for v in range(n)]

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


cdef inline void _arc(vector[int]& head, vector[int]& to, vector[int]& cap,
                      vector[int]& nxt, int a, int b, int c):
    to.push_back(b)
    cap.push_back(c)
    nxt.push_back(head[a])
    head[a] = <int>to.size() - 1
    to.push_back(a)
    cap.push_back(0)
    nxt.push_back(head[b])
    head[b] = <int>to.size() - 1


cdef inline int _popcount(uint64_t x):
    return __builtin_popcountll(x)


cdef extern from *:
    int __builtin_popcountll(unsigned long long)
    int __builtin_ctzll(unsigned long long)


cdef int _q_size(uint64_t* adj, uint64_t S, int v, uint64_t full):
    cdef uint64_t reach = adj[v]
    cdef uint64_t inside = reach & S
    cdef uint64_t done = 0
    cdef uint64_t new
    cdef uint64_t one = 1
    while inside & ~done:
        new = inside & ~done
        done |= new
        while new:
            reach |= adj[__builtin_ctzll(new)]
            new &= new - 1
        inside = reach & S
    reach &= full & ~S & ~(one << v)
    return __builtin_popcountll(reach)


def tw_decide(int n, adj, int k, int64_t state_cap):
    if n > 63:
        raise ValueError("compiled treewidth kernel handles at most 63 vertices")
    if n <= k + 1:
        return list(range(n))
    cdef uint64_t one = 1
    cdef uint64_t full = (one << n) - 1
    cdef vector[uint64_t] am = vector[uint64_t](n)
    cdef int i, v, u
    for i in range(n):
        am[i] = <uint64_t>adj[i]
    cdef unordered_map[uint64_t, pair[uint64_t, int]] parent
    cdef vector[uint64_t] layer
    cdef vector[uint64_t] nlayer
    cdef uint64_t S, T, free, low, cur
    cdef int64_t states = 1
    cdef size_t li
    parent[0] = pair[uint64_t, int](0, -1)
    layer.push_back(0)
    while layer.size() > 0:
        nlayer.clear()
        for li in range(layer.size()):
            S = layer[li]
            free = full & ~S
            while free:
                v = __builtin_ctzll(free)
                low = one << v
                free &= free - 1
                T = S | low
                if parent.count(T):
                    continue
                if _q_size(am.data(), S, v, full) <= k:
                    parent[T] = pair[uint64_t, int](S, v)
                    states += 1
                    if states > state_cap:
                        raise OverflowError("treewidth state cap exceeded")
                    if n - __builtin_popcountll(T) <= k + 1:
                        order = []
                        cur = T
                        while cur != 0:
                            order.append(parent[cur].second)
                            cur = parent[cur].first
                        order.reverse()
                        order += [u for u in range(n) if not (T >> u) & 1]
                        return order
                    nlayer.push_back(T)
        layer.swap(nlayer)
    return None
