"""Core graph containers: Graph, Separation, TreeDecomposition, Linkage."""

from collections import deque


class GraphError(ValueError):
    pass


class CapExceeded(RuntimeError):
    """Raised when an exhaustive routine is asked to work beyond its size cap."""


class Graph:
    """Finite simple undirected graph on vertices 0..n-1.

    Edges are stored as a frozenset of sorted pairs.  ``labels`` optionally maps
    vertices to coordinate tuples (for the generated grid families).
    """

    __slots__ = ("n", "edges", "labels", "_adj")

    def __init__(self, n, edges=(), labels=None):
        n = int(n)
        if n < 0:
            raise GraphError("negative vertex count")
        es = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError("loop at vertex %d" % u)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError("edge (%d, %d) out of range" % (u, v))
            es.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(es)
        self.labels = dict(labels) if labels else None
        adj = [[] for _ in range(n)]
        for u, v in es:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    # basic queries

    @property
    def adj(self):
        return self._adj

    def vertices(self):
        return range(self.n)

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def max_degree(self):
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u, v):
        return ((u, v) if u < v else (v, u)) in self.edges

    def num_edges(self):
        return len(self.edges)

    def sorted_edges(self):
        return sorted(self.edges)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self.n, len(self.edges))

    # label helpers

    def vertex_of(self, label):
        if self.labels is None:
            raise GraphError("graph carries no labels")
        inv = {lab: v for v, lab in self.labels.items()}
        return inv[label]

    # derived graphs

    def add_edges(self, new_edges):
        return Graph(self.n, list(self.edges) + list(new_edges), self.labels)

    def remove_edges(self, gone):
        gone = {(u, v) if u < v else (v, u) for u, v in gone}
        return Graph(self.n, [e for e in self.edges if e not in gone], self.labels)

    def induced(self, vertices):
        """Induced subgraph, relabelled 0..len-1 in sorted order.

        Returns (subgraph, old_ids) where old_ids[i] is the original vertex.
        """
        old = sorted(set(vertices))
        idx = {v: i for i, v in enumerate(old)}
        es = [(idx[u], idx[v]) for u, v in self.edges if u in idx and v in idx]
        labels = None
        if self.labels:
            labels = {idx[v]: self.labels[v] for v in old if v in self.labels}
        return Graph(len(old), es, labels), old

    def delete_vertices(self, gone):
        gone = set(gone)
        return self.induced(v for v in range(self.n) if v not in gone)

    # traversal

    def components(self, within=None):
        """Connected components (as sorted lists) of G[within] (default: G)."""
        if within is None:
            allowed = None
            order = range(self.n)
        else:
            allowed = set(within)
            order = sorted(allowed)
        seen = set()
        comps = []
        for s in order:
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in seen and (allowed is None or y in allowed):
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected_set(self, vertices):
        vs = set(vertices)
        if not vs:
            return False
        return len(self.components(vs)) == 1

    def is_connected(self):
        return self.n > 0 and len(self.components()) == 1

    def shortest_path(self, src, dst, within=None):
        """BFS path from a vertex in ``src`` to one in ``dst`` inside ``within``."""
        src = set(src)
        dst = set(dst)
        allowed = None if within is None else set(within)
        prev = {}
        queue = deque()
        for s in sorted(src):
            if allowed is None or s in allowed:
                prev[s] = None
                queue.append(s)
        while queue:
            x = queue.popleft()
            if x in dst:
                path = [x]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return path[::-1]
            for y in self._adj[x]:
                if y not in prev and (allowed is None or y in allowed):
                    prev[y] = x
                    queue.append(y)
        return None


# small graph constructors used across tests and the CLI

def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def grid_graph(rows, cols):
    """rows x cols planar grid, vertex (r, c) -> r*cols + c, labels are 1-based."""
    es = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                es.append((v, v + 1))
            if r + 1 < rows:
                es.append((v, v + cols))
    labels = {r * cols + c: (r + 1, c + 1) for r in range(rows) for c in range(cols)}
    return Graph(rows * cols, es, labels)


def complete_bipartite(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(g1, g2):
    es = list(g1.edges) + [(u + g1.n, v + g1.n) for u, v in g2.edges]
    return Graph(g1.n + g2.n, es)


class Separation:
    """A pair (A, B) of vertex sets.  Use is_separation to check validity."""

    __slots__ = ("A", "B")

    def __init__(self, A, B):
        self.A = frozenset(A)
        self.B = frozenset(B)

    @property
    def order(self):
        return len(self.A & self.B)

    @property
    def separator(self):
        return self.A & self.B

    def flipped(self):
        return Separation(self.B, self.A)

    def normalized(self):
        """Lexicographically smaller side (as sorted tuple) goes first."""
        a, b = tuple(sorted(self.A)), tuple(sorted(self.B))
        return self if a <= b else Separation(self.B, self.A)

    def key(self):
        return (tuple(sorted(self.A)), tuple(sorted(self.B)))

    def __eq__(self, other):
        return isinstance(other, Separation) and self.A == other.A and self.B == other.B

    def __hash__(self):
        return hash((self.A, self.B))

    def __repr__(self):
        return "Separation(A=%s, B=%s)" % (sorted(self.A), sorted(self.B))


def is_separation(G, A, B):
    A, B = set(A), set(B)
    V = set(range(G.n))
    if not (A <= V and B <= V) or (A | B) != V:
        return False
    a_only = A - B
    b_only = B - A
    for u, v in G.edges:
        if (u in a_only and v in b_only) or (u in b_only and v in a_only):
            return False
    return True


class Linkage:
    """A set of pairwise vertex-disjoint paths, each a tuple of vertices."""

    __slots__ = ("paths",)

    def __init__(self, paths=()):
        self.paths = tuple(tuple(p) for p in paths)

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    @property
    def order(self):
        return len(self.paths)

    def vertices(self):
        return {v for p in self.paths for v in p}

    def is_valid(self, G):
        seen = set()
        for p in self.paths:
            if not p or len(set(p)) != len(p):
                return False
            for a, b in zip(p, p[1:]):
                if not G.has_edge(a, b):
                    return False
            if seen & set(p):
                return False
            seen |= set(p)
        return True

    def __repr__(self):
        return "Linkage(%r)" % (self.paths,)
