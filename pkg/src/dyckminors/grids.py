"""Generators for cylindrical grids, mixed surface grids, Dyck-grids and walls.

Labels are 1-based pairs.  In a cylinder with m cycles of length n the
vertex v^i_j (ring i, position j) gets id (i - 1) * n + (j - 1).  Ring 1 is the
cycle that carries handles and crosscaps.
"""

from dataclasses import dataclass, field

from .graph import Graph, GraphError


class SpecError(ValueError):
    pass


def vid(i, j, n):
    return (i - 1) * n + (j - 1)


def cylinder_shape(G):
    """(m, n) for a labelled cylinder-based graph."""
    if not G.labels:
        raise GraphError("graph carries no (ring, position) labels")
    m = max(lab[0] for lab in G.labels.values())
    n = max(lab[1] for lab in G.labels.values())
    return m, n


def cylindrical_grid(m, n):
    """m concentric cycles C_1..C_m of length n joined by radial edges."""
    if m < 3 or n < 3:
        raise SpecError("cylindrical grid needs m, n >= 3 (got %d, %d)" % (m, n))
    es = []
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            es.append((vid(i, j, n), vid(i, j % n + 1, n)))
            if i < m:
                es.append((vid(i, j, n), vid(i + 1, j, n)))
    labels = {vid(i, j, n): (i, j) for i in range(1, m + 1) for j in range(1, n + 1)}
    return Graph(m * n, es, labels)


def handle_chords(m, i):
    """Ring-1 position pairs added by a handle at position i (cycles of order m)."""
    b = 4 * m * (i - 1)
    out = [(b + j, b + 3 * m - j + 1) for j in range(1, m + 1)]
    out += [(b + m + j, b + 4 * m - j + 1) for j in range(1, m + 1)]
    return out


def crosscap_chords(m, i):
    b = 4 * m * (i - 1)
    return [(b + j, b + 2 * m + j) for j in range(1, 2 * m + 1)]


def _add_chords(G, pairs, i):
    m, n = cylinder_shape(G)
    if n % (4 * m):
        raise SpecError("cycle length %d is not a multiple of 4m = %d" % (n, 4 * m))
    if not 1 <= i <= n // (4 * m):
        raise SpecError("position %d out of range [1, %d]" % (i, n // (4 * m)))
    new = [(vid(1, a, n), vid(1, b, n)) for a, b in pairs]
    touched = [v for e in new for v in e]
    for v in touched:
        if G.degree(v) > 3:
            raise SpecError("position %d already carries a handle or crosscap" % i)
    return G.add_edges(new)


def add_handle(G, i):
    m, _ = cylinder_shape(G)
    return _add_chords(G, handle_chords(m, i), i)


def add_crosscap(G, i):
    m, _ = cylinder_shape(G)
    return _add_chords(G, crosscap_chords(m, i), i)


@dataclass(frozen=True)
class MixedSurfaceGridSpec:
    k: int
    hdl: frozenset = field(default_factory=frozenset)
    crscp: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "hdl", frozenset(self.hdl))
        object.__setattr__(self, "crscp", frozenset(self.crscp))
        if self.k < 3:
            raise SpecError("order k must be at least 3 (got %d)" % self.k)
        if self.hdl & self.crscp:
            raise SpecError("handle and crosscap positions overlap")
        want = set(range(2, self.h + self.c + 2))
        if set(self.hdl | self.crscp) != want:
            raise SpecError("positions must partition [2, h+c+1]")

    @property
    def h(self):
        return len(self.hdl)

    @property
    def c(self):
        return len(self.crscp)

    @property
    def euler_genus(self):
        return 2 * self.h + self.c

    def kinds(self):
        """Position -> 'H' or 'X' for positions 2..h+c+1."""
        return {p: ("H" if p in self.hdl else "X") for p in range(2, self.h + self.c + 2)}

    def word(self):
        return "".join(self.kinds()[p] for p in range(2, self.h + self.c + 2))

    @classmethod
    def from_word(cls, k, word):
        hdl = {p + 2 for p, ch in enumerate(word) if ch == "H"}
        crscp = {p + 2 for p, ch in enumerate(word) if ch == "X"}
        return cls(k, hdl, crscp)

    def with_order(self, k):
        return MixedSurfaceGridSpec(k, self.hdl, self.crscp)

    def is_dyck(self):
        return self.hdl == frozenset(range(2, self.h + 2))

    def vertex_count(self):
        return 4 * (self.h + self.c + 1) * self.k ** 2

    def edge_count(self):
        k, g = self.k, self.h + self.c
        return 4 * (g + 1) * k * (2 * k - 1) + 2 * k * g


@dataclass(frozen=True)
class DyckGridSpec:
    h: int
    c: int
    k: int

    def __post_init__(self):
        if (self.h, self.c) == (-1, 2):
            object.__setattr__(self, "h", 0)
            object.__setattr__(self, "c", 0)
        if self.h < 0 or self.c < 0:
            raise SpecError("h and c must be non-negative")
        if self.k < 3:
            raise SpecError("order k must be at least 3 (got %d)" % self.k)

    @property
    def euler_genus(self):
        return 2 * self.h + self.c

    def to_mixed(self):
        return MixedSurfaceGridSpec(self.k, range(2, self.h + 2),
                                    range(self.h + 2, self.h + self.c + 2))


@dataclass(frozen=True)
class DyckWallSpec:
    h: int
    c: int
    t: int

    def __post_init__(self):
        if self.h < 0:
            raise SpecError("h must be non-negative")
        if not 0 <= self.c <= 2:
            raise SpecError("Dyck-walls take c in [0, 2] (got %d)" % self.c)
        if self.t < 3:
            raise SpecError("order t must be at least 3 (got %d)" % self.t)


def mixed_surface_grid(spec):
    k = spec.k
    G = cylindrical_grid(k, 4 * (spec.h + spec.c + 1) * k)
    es = []
    n = 4 * (spec.h + spec.c + 1) * k
    for p in sorted(spec.hdl):
        es += handle_chords(k, p)
    for p in sorted(spec.crscp):
        es += crosscap_chords(k, p)
    return G.add_edges((vid(1, a, n), vid(1, b, n)) for a, b in es)


def dyck_grid(spec):
    return mixed_surface_grid(spec.to_mixed())


def added_edges(spec):
    """Ring-1 chords of a mixed surface grid as vertex-id pairs."""
    k = spec.k
    n = 4 * (spec.h + spec.c + 1) * k
    out = []
    for p in sorted(spec.hdl):
        out += [(vid(1, a, n), vid(1, b, n)) for a, b in handle_chords(k, p)]
    for p in sorted(spec.crscp):
        out += [(vid(1, a, n), vid(1, b, n)) for a, b in crosscap_chords(k, p)]
    return out


def outermost_cycles(G, b):
    """The b outermost cycles C_{k-b+1}, ..., C_k, each as a vertex list in cycle order."""
    k, n = cylinder_shape(G)
    if b < 0 or b >= k:
        raise SpecError("need 0 <= b < k (b=%d, k=%d)" % (b, k))
    return [[vid(i, j, n) for j in range(1, n + 1)] for i in range(k - b + 1, k + 1)]


class WallStructure:
    """A wall with its rows and columns (vertex lists in path order)."""

    def __init__(self, graph, rows, columns, perimeter):
        self.graph = graph
        self.rows = [list(r) for r in rows]
        self.columns = [list(c) for c in columns]
        self.perimeter = frozenset(perimeter)

    @property
    def order(self):
        return len(self.rows)

    @property
    def branch_vertices(self):
        return frozenset(v for v in self._vertices() if self.graph.degree(v) == 3)

    def _vertices(self):
        vs = set()
        for r in self.rows:
            vs.update(r)
        for c in self.columns:
            vs.update(c)
        return vs

    def vertices(self):
        return self._vertices()

    def check(self, G=None):
        """Structural sanity: disjoint rows, disjoint columns, every row meets every column."""
        G = self.graph if G is None else G
        for fam in (self.rows, self.columns):
            seen = set()
            for p in fam:
                if seen & set(p):
                    return False
                seen |= set(p)
                for a, b in zip(p, p[1:]):
                    if not G.has_edge(a, b):
                        return False
        return all(set(r) & set(c) for r in self.rows for c in self.columns)


def elementary_wall(k):
    """W_k from the k x 2k grid; vertex (i, j) keeps label (i, j)."""
    if k < 3:
        raise SpecError("elementary wall needs k >= 3 (got %d)" % k)
    cols = 2 * k
    alive = {(i, j) for i in range(1, k + 1) for j in range(1, cols + 1)}
    es = set()
    for i in range(1, k + 1):
        for j in range(1, cols):
            es.add(((i, j), (i, j + 1)))
    for j in range(1, cols + 1):
        for i in range(1, k):
            # edge (i,j)(i+1,j) is odd in column j when i is odd
            if (j % 2 == 1 and i % 2 == 1) or (j % 2 == 0 and i % 2 == 0):
                continue
            es.add(((i, j), (i + 1, j)))
    deg = {v: 0 for v in alive}
    for a, b in es:
        deg[a] += 1
        deg[b] += 1
    gone = {v for v in alive if deg[v] == 1}
    alive -= gone
    es = {e for e in es if e[0] in alive and e[1] in alive}
    order = sorted(alive)
    idx = {v: t for t, v in enumerate(order)}
    G = Graph(len(order), [(idx[a], idx[b]) for a, b in es], {idx[v]: v for v in order})
    rows = [[idx[(i, j)] for j in range(1, cols + 1) if (i, j) in idx] for i in range(1, k + 1)]
    columns = []
    for c in range(1, k + 1):
        members = {(i, j) for (i, j) in alive if j in (2 * c - 1, 2 * c)}
        columns.append(_path_order(G, [idx[v] for v in members]))
    perim = [idx[(i, j)] for (i, j) in alive if j in (1, 2, cols - 1, cols) or i in (1, k)]
    return WallStructure(G, rows, columns, perim)


def _path_order(G, vertices):
    """Order the vertices of an induced path from one end to the other."""
    vs = set(vertices)
    deg = {v: sum(1 for w in G.adj[v] if w in vs) for v in vs}
    ends = sorted(v for v in vs if deg[v] <= 1)
    start = ends[0] if ends else min(vs)
    out = [start]
    prev = None
    while True:
        nxt = [w for w in G.adj[out[-1]] if w in vs and w != prev and w not in out]
        if not nxt:
            break
        prev = out[-1]
        out.append(min(nxt))
    if len(out) != len(vs):
        raise GraphError("vertex set does not induce a path")
    return out


def dyck_wall(spec):
    """Elementary (h, c; t)-Dyck-wall, vertices relabelled onto the kept rings."""
    h, c, t = spec.h, spec.c, spec.t
    D = dyck_grid(DyckGridSpec(h, c, 2 * t))
    m, n = cylinder_shape(D)
    keep = [v for v in range(D.n) if D.labels[v][0] <= t]
    gone_edges = []
    for i in range(1, t):
        for j in range(1, n + 1):
            if (i % 2 == 1 and j % 2 == 1) or (i % 2 == 0 and j % 2 == 0):
                gone_edges.append((vid(i, j, n), vid(i + 1, j, n)))
    mixed = DyckGridSpec(h, c, 2 * t).to_mixed()
    for a, b in added_edges(mixed):
        if D.labels[a][1] % 2 == 0 or D.labels[b][1] % 2 == 0:
            gone_edges.append((a, b))
    H = D.remove_edges(gone_edges)
    W, _ = H.induced(keep)
    return W
