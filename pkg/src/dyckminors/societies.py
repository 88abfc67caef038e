"""Societies: segments, crosses, transactions, depth and linear decompositions."""

import itertools
import os
from dataclasses import dataclass

import networkx as nx

from .flows import min_vertex_cut, separation_from_cut
from .graph import CapExceeded, GraphError, Linkage
from .treedec import Report

CROSS_CAP = int(os.environ.get("DYCKMINORS_CROSS_CAP", "14"))


class SocietyError(ValueError):
    pass


class Society:
    def __init__(self, graph, omega):
        omega = [int(v) for v in omega]
        if len(set(omega)) != len(omega):
            raise SocietyError("omega repeats a vertex")
        for v in omega:
            if not 0 <= v < graph.n:
                raise SocietyError("omega vertex %d is not in the graph" % v)
        self.graph = graph
        self.omega = tuple(omega)
        self.pos = {v: i for i, v in enumerate(omega)}

    def __repr__(self):
        return "Society(n=%d, omega=%r)" % (self.graph.n, self.omega)

    def segment(self, s, t):
        return Segment(s, t).vertices(self)

    def is_segment(self, S):
        """No s1, t1, s2, t2 alternate between S and its complement around omega."""
        S = set(S)
        if not S <= set(self.omega):
            return False
        changes = sum(1 for i, v in enumerate(self.omega)
                      if (v in S) != (self.omega[i - 1] in S))
        return changes <= 2


@dataclass(frozen=True)
class Segment:
    """The segment s Omega t: from s to t following omega (all of omega if t precedes s)."""
    start: int
    end: int

    def vertices(self, soc):
        om, pos = soc.omega, soc.pos
        if self.start not in pos or self.end not in pos:
            raise SocietyError("segment endpoints must lie on omega")
        i, j = pos[self.start], pos[self.end]
        n = len(om)
        if (i - j) % n == 1 or n == 1:
            return list(om)
        out = []
        while True:
            out.append(om[i])
            if i == j:
                return out
            i = (i + 1) % n


def _as_set(soc, S):
    if isinstance(S, Segment):
        return set(S.vertices(soc))
    return set(S)


# crosses

def _chordless_paths(adj, s, t, allowed):
    """Induced paths from s to t with all interior vertices in ``allowed``."""
    out = []

    def rec(path, on):
        v = path[-1]
        for w in adj[v]:
            if w == t:
                if len(path) > 1 and any(t in adj[u] for u in path[:-1]):
                    continue
                out.append(path + [t])
            elif w in allowed and w not in on:
                if any(w in adj[u] for u in path[:-1]):
                    continue
                on.add(w)
                path.append(w)
                rec(path, on)
                path.pop()
                on.discard(w)
    rec([s], {s})
    return out


def _path_avoiding(adj, s, t, allowed, blocked):
    prev = {s: None}
    stack = [s]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w == t:
                prev[t] = v
                out = [t]
                while out[-1] != s:
                    out.append(prev[out[-1]])
                return out[::-1]
            if w in allowed and w not in blocked and w not in prev:
                prev[w] = v
                stack.append(w)
    return None


def has_cross(soc):
    """Two disjoint omega-paths with interleaved ends, or None (exhaustive)."""
    G, om = soc.graph, soc.omega
    if G.n > CROSS_CAP:
        raise CapExceeded("has_cross: %d vertices exceed cap %d" % (G.n, CROSS_CAP))
    if len(om) < 4:
        return None
    adj = G.adj
    inner = set(range(G.n)) - set(om)
    for a, b, c, d in itertools.combinations(range(len(om)), 4):
        s1, s2, t1, t2 = om[a], om[b], om[c], om[d]
        for P in _chordless_paths(adj, s1, t1, inner):
            Q = _path_avoiding(adj, s2, t2, inner, set(P))
            if Q is not None:
                return (tuple(P), tuple(Q))
    return None


def _reduce(adj, terminals):
    """Replace every terminal-free piece attached at <= 3 vertices.

    For a set Z of at most three vertices, the components C of G - Z with no
    terminal and N(C) = Z are deleted (|Z| <= 1), replaced by an edge
    (|Z| = 2) or by a single vertex adjacent to Z (|Z| = 3).
    """
    adj = {v: set(ws) for v, ws in adj.items()}
    fresh = max(adj, default=-1) + 1
    changed = True
    while changed:
        changed = False
        verts = sorted(adj)
        for size in range(4):
            for Z in itertools.combinations(verts, size):
                if any(z not in adj for z in Z):
                    continue
                Zs = set(Z)
                pieces = []
                seen = set(Zs)
                for v in sorted(adj):
                    if v in seen:
                        continue
                    comp = {v}
                    stack = [v]
                    seen.add(v)
                    while stack:
                        x = stack.pop()
                        for y in adj[x]:
                            if y not in seen:
                                seen.add(y)
                                comp.add(y)
                                stack.append(y)
                    if comp & terminals:
                        continue
                    nb = {y for x in comp for y in adj[x]} - comp
                    if nb == Zs:
                        pieces.append(comp)
                if not pieces:
                    continue
                if size == 3 and len(pieces) == 1 and len(pieces[0]) == 1:
                    continue
                for comp in pieces:
                    for x in comp:
                        for y in adj[x]:
                            if y not in comp:
                                adj[y].discard(x)
                        del adj[x]
                if size == 2:
                    a, b = Z
                    adj[a].add(b)
                    adj[b].add(a)
                elif size == 3:
                    adj[fresh] = set(Z)
                    for z in Z:
                        adj[z].add(fresh)
                    fresh += 1
                changed = True
                break
            if changed:
                break
    return adj


def disk_rendition_exists(soc):
    """Whether the society can be drawn in a disk with omega on the boundary.

    Pieces without omega vertices attached at <= 3 vertices are first
    reduced; then G plus a cycle through omega in order plus a hub adjacent
    to omega must be planar.
    """
    G, om = soc.graph, soc.omega
    if len(om) <= 3:
        return True
    adj = _reduce({v: set(G.adj[v]) for v in range(G.n)}, set(om))
    H = nx.Graph()
    H.add_nodes_from(adj)
    for v, ws in adj.items():
        for w in ws:
            H.add_edge(v, w)
    hub = ("hub",)
    for i, v in enumerate(om):
        H.add_edge(v, om[(i + 1) % len(om)])
        H.add_edge(hub, v)
    return nx.check_planarity(H)[0]


# transactions

def max_transaction(soc, A, B):
    A, B = _as_set(soc, A), _as_set(soc, B)
    if not soc.is_segment(A) or not soc.is_segment(B):
        raise SocietyError("A and B must be segments of omega")
    if A & B:
        raise SocietyError("segments overlap")
    if not A or not B:
        return Linkage()
    return min_vertex_cut(soc.graph, A, B)[1]


def _splits(soc):
    """All splits of omega into two nonempty complementary segments."""
    om = soc.omega
    n = len(om)
    for i in range(n):
        for length in range(1, n):
            A = [om[(i + j) % n] for j in range(length)]
            B = [om[(i + j) % n] for j in range(length, n)]
            yield A, B


def depth(soc):
    """Maximum order of a transaction.

    Enlarging either segment never lowers the maximum, so only pairs of
    complementary segments have to be examined.
    """
    best = 0
    for A, B in _splits(soc):
        best = max(best, len(min_vertex_cut(soc.graph, A, B)[1]))
    return best


def depth_all_pairs(soc):
    """Depth by sweeping every pair of disjoint segments (slow reference)."""
    om = soc.omega
    n = len(om)
    segs = set()
    for i in range(n):
        for length in range(1, n):
            segs.add(frozenset(om[(i + j) % n] for j in range(length)))
    best = 0
    for A in segs:
        for B in segs:
            if not A & B:
                best = max(best, len(min_vertex_cut(soc.graph, A, B)[1]))
    return best


@dataclass
class Classification:
    kind: str
    thickness: int
    patterns: dict

    def as_dict(self):
        return {"kind": self.kind, "thickness": self.thickness, "patterns": self.patterns}


def _endpoint_sequence(T, omega):
    pos = {v: i for i, v in enumerate(omega)}
    ends = []
    for idx, p in enumerate(T):
        for v in (p[0], p[-1]):
            if v not in pos:
                raise SocietyError("path endpoint %d is not on omega" % v)
            ends.append((pos[v], idx))
    if len({e[0] for e in ends}) != len(ends):
        raise SocietyError("paths share endpoints")
    return [idx for _, idx in sorted(ends)]


def _matches_crosscap(seq, n):
    m = len(seq)
    for r in range(m):
        s = seq[r:] + seq[:r]
        if len(set(s[:n])) == n and s[:n] == s[n:]:
            return True
    return False


def _matches_handle(seq, n):
    m = len(seq)
    for r in range(m):
        s = seq[r:] + seq[:r]
        first = s[:2 * n]
        if len(set(first)) != 2 * n:
            continue
        if s[2 * n:3 * n] == first[:n][::-1] and s[3 * n:] == first[n:][::-1]:
            return True
    return False


def classify_transaction(T, omega):
    """Crosscap / handle pattern of a transaction, trying both directions of omega.

    Two paths with interleaved ends match the handle pattern of thickness 1;
    that is a cross.
    """
    paths = list(T)
    seq = _endpoint_sequence(paths, omega)
    m = len(paths)
    patterns = {}
    for s in (seq, seq[::-1]):
        if m and _matches_crosscap(s, m):
            patterns["crosscap"] = m
        if m and m % 2 == 0 and _matches_handle(s, m // 2):
            patterns["handle"] = m // 2
    if patterns.get("handle") == 1:
        return Classification("cross", 1, patterns)
    if "crosscap" in patterns:
        return Classification("crosscap", m, patterns)
    if "handle" in patterns:
        return Classification("handle", m // 2, patterns)
    return Classification("unclassified", 0, patterns)


# linear decompositions

@dataclass
class LinearDecomposition:
    X: list
    v: list

    @property
    def adhesion(self):
        return max((len(set(a) & set(b)) for a, b in zip(self.X, self.X[1:])), default=0)

    @property
    def width(self):
        return max((len(x) for x in self.X), default=0)

    def as_dict(self):
        return {"X": [sorted(x) for x in self.X], "v": list(self.v),
                "adhesion": self.adhesion, "width": self.width}


@dataclass
class Transaction:
    linkage: Linkage
    A: list
    B: list

    @property
    def order(self):
        return len(self.linkage)


def validate_linear_decomposition(soc, ld):
    G, om = soc.graph, soc.omega
    X = [set(x) for x in ld.X]
    v = list(ld.v)
    if len(X) != len(v) or not X:
        return Report(False, "need as many bags as omega vertices, at least one")
    if sorted(v) != sorted(om) or len(set(v)) != len(v):
        return Report(False, "v_1..v_n must list every omega vertex once", v)
    start = om.index(v[0])
    if v != [om[(start + i) % len(om)] for i in range(len(om))]:
        return Report(False, "v_1..v_n out of omega order", v)
    for i in range(len(v)):
        if v[i] not in X[i]:
            return Report(False, "v_i not in X_i", i)
    covered = set().union(*X)
    missing = set(range(G.n)) - covered
    if missing:
        return Report(False, "vertex not covered", min(missing))
    for a, b in G.sorted_edges():
        if not any(a in x and b in x for x in X):
            return Report(False, "edge not covered", [a, b])
    for x in range(G.n):
        idx = [i for i in range(len(X)) if x in X[i]]
        if idx != list(range(idx[0], idx[-1] + 1)):
            return Report(False, "bags containing a vertex are not an interval", x)
    return Report(True)


def linear_decomposition(soc, theta):
    """A linear decomposition of adhesion <= theta, or a transaction of order > theta.

    First every split of omega into two complementary segments is checked for
    a transaction of order > theta.  Otherwise the separations closest to the
    prefixes {v_1..v_i} against the suffixes {v_i+1..v_n} are nested, and
    X_i = A_i & B_(i-1) is a decomposition with adhesion <= theta.
    """
    G, om = soc.graph, soc.omega
    if not om:
        raise SocietyError("omega must be nonempty")
    for A, B in _splits(soc):
        cut, link = min_vertex_cut(G, A, B, limit=theta + 1)
        if len(link) > theta:
            return Transaction(link, A, B)
    n = len(om)
    V = set(range(G.n))
    As = []
    Bs = []
    for i in range(1, n):
        cut, _ = min_vertex_cut(G, om[:i], om[i:])
        A, B = separation_from_cut(G, om[:i], cut)
        As.append(set(A))
        Bs.append(set(B))
    As.append(V)
    X = []
    for i in range(n):
        prev_B = V if i == 0 else Bs[i - 1]
        X.append(sorted(As[i] & prev_B))
    ld = LinearDecomposition(X, list(om))
    rep = validate_linear_decomposition(soc, ld)
    if not rep or ld.adhesion > theta:
        raise GraphError("decomposition failed validation: %r" % rep)
    return ld
