"""Minor models: certificates, verification, exhaustive search, composition, expansions."""

from .graph import CapExceeded, Graph
from .kernels import csr, owner_components
from .planarity import is_planar


class MinorModel:
    """Branch sets in ``host`` for the vertices of ``pattern``."""

    def __init__(self, pattern, host, branch_sets):
        self.pattern = pattern
        self.host = host
        self.branch_sets = {int(v): sorted(set(int(x) for x in xs)) for v, xs in branch_sets.items()}

    def __repr__(self):
        return "MinorModel(pattern=%r, host=%r)" % (self.pattern, self.host)

    def total_size(self):
        return sum(len(b) for b in self.branch_sets.values())


class Verdict:
    def __init__(self, ok, reason="", witness=None):
        self.ok = ok
        self.reason = reason
        self.witness = witness

    def __bool__(self):
        return self.ok

    def as_dict(self):
        return {"valid": self.ok, "reason": self.reason, "witness": self.witness}

    def __repr__(self):
        return "Ok" if self.ok else "Violation(%s, %r)" % (self.reason, self.witness)


def verify_minor_model(M):
    H, G = M.pattern, M.host
    owner = [-1] * G.n
    for v in range(H.n):
        xs = M.branch_sets.get(v)
        if not xs:
            return Verdict(False, "empty branch set", v)
        for x in xs:
            if not 0 <= x < G.n:
                return Verdict(False, "vertex outside host", [v, x])
            if owner[x] >= 0:
                return Verdict(False, "branch sets overlap", [owner[x], v, x])
            owner[x] = v
    extra = set(M.branch_sets) - set(range(H.n))
    if extra:
        return Verdict(False, "branch set for unknown pattern vertex", min(extra))
    indptr, indices = csr(G)
    counts = owner_components(indptr, indices, owner, H.n)
    for v in range(H.n):
        if counts[v] != 1:
            return Verdict(False, "branch set disconnected", v)
    touching = set()
    for a, b in G.edges:
        oa, ob = owner[a], owner[b]
        if oa >= 0 and ob >= 0 and oa != ob:
            touching.add((oa, ob) if oa < ob else (ob, oa))
    for e in H.sorted_edges():
        if e not in touching:
            return Verdict(False, "pattern edge not realized", list(e))
    return Verdict(True)


def identity_model(G):
    return MinorModel(G, G, {v: [v] for v in range(G.n)})


def compose_models(M1, M2):
    """Given H <= G (M1) and G <= F (M2), the model of H in F."""
    if M1.host != M2.pattern:
        raise ValueError("host of the first model is not the pattern of the second")
    for M in (M1, M2):
        verdict = verify_minor_model(M)
        if not verdict:
            raise ValueError("input model invalid: %r" % verdict)
    bs = {}
    for v, xs in M1.branch_sets.items():
        bs[v] = sorted(y for x in xs for y in M2.branch_sets[x])
    return MinorModel(M1.pattern, M2.host, bs)


# exhaustive search

def _connected_sets(adj, anchor, allowed, banned0, limit):
    """Each connected subset of ``allowed`` containing ``anchor`` and avoiding
    ``banned0``, with at most ``limit`` vertices, exactly once."""
    out = []

    def rec(S, ext, banned):
        out.append(S)
        if len(S) >= limit:
            return
        ext = list(ext)
        banned = set(banned)
        while ext:
            w = ext.pop()
            banned.add(w)
            S2 = S | {w}
            extset = set(ext)
            new = [x for x in adj[w] if x in allowed and x not in S2 and x not in banned and x not in extset]
            rec(S2, ext + sorted(new, reverse=True), banned)

    start_ext = sorted((x for x in adj[anchor] if x in allowed and x not in banned0 and x != anchor),
                       reverse=True)
    rec(frozenset([anchor]), start_ext, set(banned0) | {anchor})
    return out


def _placement_order(H):
    placed = []
    rest = set(range(H.n))
    while rest:
        def key(v):
            return (-sum(1 for w in H.adj[v] if w in placed), -H.degree(v), v)
        v = min(rest, key=key)
        placed.append(v)
        rest.discard(v)
    return placed


def find_minor_bruteforce(G, H, cap_h=8, cap_g=18, max_branch=None):
    """A model of H in G, or None when none exists (exhaustive).

    Pattern vertices are placed in descending-degree, connected order; the
    branch set of each is chosen among all connected sets of unused vertices
    touching the branch sets of already placed neighbours.  The branch-set
    size bound is raised step by step, so small models are found first and
    the final pass (bound |V(G)|) makes the search complete.
    """
    if H.n > cap_h or G.n > cap_g:
        raise CapExceeded("find_minor_bruteforce: sizes (%d, %d) exceed caps (%d, %d)"
                          % (H.n, G.n, cap_h, cap_g))
    if H.n == 0:
        return MinorModel(H, G, {})
    if H.n > G.n or H.num_edges() > G.num_edges():
        return None
    if not is_planar(H) and is_planar(G):
        return None
    order = _placement_order(H)
    adj = G.adj
    top = G.n - H.n + 1 if max_branch is None else max_branch
    for bound in range(1, top + 1):
        res = _search(G, H, order, adj, bound)
        if res is not None:
            model = MinorModel(H, G, res)
            assert verify_minor_model(model)
            return model
    return None


def _search(G, H, order, adj, bound):
    owner = [-1] * G.n
    sets = {}
    pos = {v: i for i, v in enumerate(order)}

    def touches(S, v):
        return any(owner[y] == v for x in S for y in adj[x])

    def feasible(t):
        free = [x for x in range(G.n) if owner[x] < 0]
        if len(free) < len(order) - t:
            return False
        comps = G.components(free)
        comp_of = {}
        for i, c in enumerate(comps):
            for x in c:
                comp_of[x] = i
        for u in order[t:]:
            placed = [w for w in H.adj[u] if pos[w] < t]
            if not placed:
                continue
            ok = None
            for w in placed:
                near = {comp_of[y] for x in sets[w] for y in adj[x] if owner[y] < 0}
                ok = near if ok is None else ok & near
                if not ok:
                    return False
        return True

    def rec(t):
        if t == len(order):
            return True
        v = order[t]
        placed = [w for w in H.adj[v] if pos[w] < t]
        free = {x for x in range(G.n) if owner[x] < 0}
        if placed:
            first = placed[0]
            anchors = sorted({y for x in sets[first] for y in adj[x] if owner[y] < 0})
        else:
            anchors = sorted(free)
        cands = []
        banned = set()
        for a in anchors:
            for S in _connected_sets(adj, a, free, banned, bound):
                if all(touches(S, w) for w in placed[1:]):
                    cands.append(S)
            banned.add(a)
        cands.sort(key=lambda S: (len(S), sorted(S)))
        for S in cands:
            for x in S:
                owner[x] = v
            sets[v] = S
            if feasible(t + 1) and rec(t + 1):
                return True
            for x in S:
                owner[x] = -1
            del sets[v]
        return False

    if rec(0):
        return {v: sorted(S) for v, S in sets.items()}
    return None


def minor_closure(G):
    """All minors of G up to isomorphism, by repeated deletion and contraction.

    Returns a dict from a certificate key to a representative networkx graph.
    Meant for graphs with at most 7 vertices.
    """
    import networkx as nx
    from .planarity import to_networkx

    start = to_networkx(G)
    seen = {}
    stack = [start]

    def key_of(X):
        return (X.number_of_nodes(), X.number_of_edges(),
                nx.weisfeiler_lehman_graph_hash(X, iterations=3))

    def known(X):
        k = key_of(X)
        for Y in seen.get(k, []):
            if nx.is_isomorphic(X, Y):
                return True
        seen.setdefault(k, []).append(X)
        return False

    known(start)
    while stack:
        X = stack.pop()
        kids = []
        for v in list(X.nodes):
            Y = X.copy()
            Y.remove_node(v)
            kids.append(Y)
        for e in list(X.edges):
            Y = X.copy()
            Y.remove_edge(*e)
            kids.append(Y)
            Z = nx.contracted_edge(X, e, self_loops=False)
            kids.append(nx.Graph(Z))
        for Y in kids:
            Y = nx.convert_node_labels_to_integers(Y)
            if not known(Y):
                stack.append(Y)
    return seen


def is_minor_by_closure(G, H, closure=None):
    import networkx as nx
    from .planarity import to_networkx

    closure = minor_closure(G) if closure is None else closure
    X = to_networkx(H)
    k = (X.number_of_nodes(), X.number_of_edges(), nx.weisfeiler_lehman_graph_hash(X, iterations=3))
    return any(nx.is_isomorphic(X, Y) for Y in closure.get(k, []))


# walls from models of subcubic patterns

def subdivision_from_model(M):
    """Turn a model of a subcubic pattern into a subdivision inside the host.

    Returns (center, edge_paths): center[v] is the host vertex playing v,
    edge_paths[(u, v)] the host path from center[u] to center[v] for u < v.
    """
    H, G = M.pattern, M.host
    sets = {v: set(xs) for v, xs in M.branch_sets.items()}
    ports = {}
    for u, v in H.sorted_edges():
        found = None
        for x in sorted(sets[u]):
            for y in G.adj[x]:
                if y in sets[v]:
                    found = (x, y)
                    break
            if found:
                break
        ports[(u, v)] = found
    center = {}
    inner = {}
    for v in range(H.n):
        terms = []
        for (a, b), (x, y) in ports.items():
            if a == v:
                terms.append(((a, b), x))
            elif b == v:
                terms.append(((a, b), y))
        if len(terms) > 3:
            raise ValueError("pattern is not subcubic")
        if not terms:
            center[v] = min(sets[v])
            continue
        t0 = terms[0][1]
        if len(terms) == 1:
            center[v] = t0
            inner[(v, terms[0][0])] = [t0]
            continue
        p01 = G.shortest_path([t0], [terms[1][1]], sets[v])
        if len(terms) == 2:
            c = t0
        else:
            p2 = G.shortest_path([terms[2][1]], p01, sets[v])
            c = p2[-1]
        center[v] = c
        for e, t in terms:
            inner[(v, e)] = G.shortest_path([c], [t], _tree_vertices(G, sets[v], c, [t2 for _, t2 in terms]))
    paths = {}
    for (u, v), (x, y) in ports.items():
        paths[(u, v)] = inner[(u, (u, v))] + inner[(v, (u, v))][::-1]
    return center, paths


def _tree_vertices(G, allowed, c, terms):
    """Vertices of a Steiner-like tree from c to the terminals inside ``allowed``."""
    keep = {c}
    for t in terms:
        p = G.shortest_path([c], [t], allowed)
        keep.update(p)
    return keep


# expansions

class ExpansionCertificate:
    """(H, T) is an expansion of ``base``.

    splits: list of dicts {"vertex": v, "new": w, "move": [...]}; replaying a
    split replaces v by the adjacent pair v, w where w takes over the
    neighbours listed in ``move``.  New vertex ids are consecutive from
    base.n on.  subdivision_map sends every vertex of ``result`` either to
    ("v", x) for a vertex x of the split graph G', or to ("e", a, b, i) for the
    i-th (1-based, counted from a) subdivision vertex of the G'-edge ab.
    """

    def __init__(self, base, result, branch_vertices, splits, subdivision_map):
        self.base = base
        self.result = result
        self.branch_vertices = frozenset(branch_vertices)
        self.splits = [dict(s) for s in splits]
        self.subdivision_map = {int(h): tuple(m) for h, m in subdivision_map.items()}


def _replay_splits(cert):
    G = cert.base
    nb = {v: set(G.adj[v]) for v in range(G.n)}
    origin = {v: v for v in range(G.n)}
    for rec in cert.splits:
        v, w = rec["vertex"], rec["new"]
        move = set(rec["move"])
        if v not in nb or w in nb or w != len(nb):
            return None, None, "bad split vertices %r" % ((v, w),)
        if not move <= nb[v]:
            return None, None, "moved neighbours not adjacent to split vertex"
        keep = nb[v] - move
        if keep & move:
            return None, None, "neighbour sets overlap"
        for y in move:
            nb[y].discard(v)
            nb[y].add(w)
        nb[v] = keep | {w}
        nb[w] = move | {v}
        origin[w] = origin[v]
    return nb, origin, ""


def verify_expansion(cert):
    try:
        nb, origin, why = _replay_splits(cert)
    except (KeyError, TypeError):
        return False
    if nb is None:
        return False
    H = cert.result
    smap = cert.subdivision_map
    if set(smap) != set(range(H.n)):
        return False
    vmap = {}
    chains = {}
    for h, m in smap.items():
        if m[0] == "v":
            if m[1] not in nb or m[1] in vmap:
                return False
            vmap[m[1]] = h
        elif m[0] == "e":
            a, b, i = m[1], m[2], m[3]
            chains.setdefault((a, b), {})
            if i in chains[(a, b)]:
                return False
            chains[(a, b)][i] = h
        else:
            return False
    if set(vmap) != set(nb):
        return False
    if {h for h, m in smap.items() if m[0] == "v"} != set(cert.branch_vertices):
        return False
    edges = set()
    for a in nb:
        for b in nb[a]:
            if a < b:
                edges.add((a, b))
    built = set()
    used_chains = set()
    for a, b in edges:
        ch = chains.get((a, b))
        rev = False
        if ch is None and (b, a) in chains:
            ch = chains[(b, a)]
            rev = True
            used_chains.add((b, a))
        elif ch is not None:
            used_chains.add((a, b))
        seq = [vmap[a]]
        if ch:
            if sorted(ch) != list(range(1, len(ch) + 1)):
                return False
            mids = [ch[i] for i in sorted(ch)]
            seq += mids[::-1] if rev else mids
        seq.append(vmap[b])
        for x, y in zip(seq, seq[1:]):
            built.add((min(x, y), max(x, y)))
    if used_chains != set(chains):
        return False
    if built != set(H.edges):
        return False
    for v in range(H.n):
        if H.degree(v) >= 3 and v not in cert.branch_vertices:
            return False
    return True


def expansion_to_minor_model(cert):
    if not verify_expansion(cert):
        raise ValueError("invalid expansion certificate")
    _, origin, _ = _replay_splits(cert)
    bs = {v: [] for v in range(cert.base.n)}
    for h, m in cert.subdivision_map.items():
        if m[0] == "v":
            bs[origin[m[1]]].append(h)
    hid = {m[1]: h for h, m in cert.subdivision_map.items() if m[0] == "v"}
    for h, m in cert.subdivision_map.items():
        if m[0] == "e":
            a, b = m[1], m[2]
            low = a if hid[a] < hid[b] else b
            bs[origin[low]].append(h)
    return MinorModel(cert.base, cert.result, bs)
