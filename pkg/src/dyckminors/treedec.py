"""Tree decompositions: validation, torsos, adhesion and exact treewidth."""

import os

from .graph import CapExceeded, Graph
from .kernels import tw_decide

TW_CAP = int(os.environ.get("DYCKMINORS_TW_CAP", "20"))
TW_STATE_CAP = int(os.environ.get("DYCKMINORS_TW_STATES", "5000000"))


class TreeDecomposition:
    """Decomposition tree given as node -> neighbour list, plus node -> bag."""

    def __init__(self, tree, bags):
        self.tree = {t: sorted(set(nb)) for t, nb in tree.items()}
        for t in bags:
            self.tree.setdefault(t, [])
        self.bags = {t: frozenset(b) for t, b in bags.items()}

    @property
    def nodes(self):
        return sorted(self.bags)

    def tree_edges(self):
        return sorted({(min(s, t), max(s, t)) for s in self.tree for t in self.tree[s]})

    @property
    def width(self):
        return max((len(b) for b in self.bags.values()), default=0) - 1

    @property
    def adhesion(self):
        return max((len(self.bags[s] & self.bags[t]) for s, t in self.tree_edges()), default=0)

    def __repr__(self):
        return "TreeDecomposition(nodes=%d, width=%d)" % (len(self.bags), self.width)


class Report:
    """Truthy verdict with an explanation attached."""

    def __init__(self, ok, reason="", witness=None):
        self.ok = ok
        self.reason = reason
        self.witness = witness

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "Report(ok)"
        return "Report(%s: %r)" % (self.reason, self.witness)


def _is_tree(td):
    nodes = td.nodes
    if not nodes:
        return False
    for s in td.tree:
        for t in td.tree[s]:
            if t not in td.bags or s not in td.tree.get(t, []):
                return False
    if len(td.tree_edges()) != len(nodes) - 1:
        return False
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        s = stack.pop()
        for t in td.tree[s]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return len(seen) == len(nodes)


def validate_tree_decomposition(G, td):
    if not _is_tree(td):
        return Report(False, "decomposition graph is not a tree")
    covered = set()
    for b in td.bags.values():
        covered |= b
    for v in range(G.n):
        if v not in covered:
            return Report(False, "vertex not covered", v)
    for u, v in G.sorted_edges():
        if not any(u in b and v in b for b in td.bags.values()):
            return Report(False, "edge not covered", (u, v))
    for v in range(G.n):
        holding = [t for t in td.nodes if v in td.bags[t]]
        hs = set(holding)
        seen = {holding[0]}
        stack = [holding[0]]
        while stack:
            s = stack.pop()
            for t in td.tree[s]:
                if t in hs and t not in seen:
                    seen.add(t)
                    stack.append(t)
        if len(seen) != len(hs):
            return Report(False, "nodes containing vertex do not induce a subtree", v)
    return Report(True)


def torso(G, td, node):
    """Torso at ``node``: G[bag] plus a clique on every adhesion set of the node.

    Returns (graph, old_ids) with the graph relabelled onto the sorted bag.
    """
    if node not in td.bags:
        raise KeyError("unknown decomposition node %r" % (node,))
    bag = td.bags[node]
    H, old = G.induced(bag)
    idx = {v: i for i, v in enumerate(old)}
    extra = []
    for t in td.tree[node]:
        adh = sorted(bag & td.bags[t])
        for i in range(len(adh)):
            for j in range(i + 1, len(adh)):
                extra.append((idx[adh[i]], idx[adh[j]]))
    return H.add_edges(extra), old


def decomposition_from_order(G, order):
    """Tree decomposition from an elimination ordering.

    The bag of v is v plus its later neighbours in the fill-in graph; its
    parent is the earliest eliminated of those neighbours.
    """
    pos = {v: i for i, v in enumerate(order)}
    nb = [set(G.adj[v]) for v in range(G.n)]
    bags = {}
    parent = {}
    for v in order:
        later = {w for w in nb[v] if pos[w] > pos[v]}
        bags[v] = frozenset(later | {v})
        for a in later:
            nb[a] |= later - {a}
        parent[v] = min(later, key=pos.get) if later else None
    if G.n == 0:
        return TreeDecomposition({0: []}, {0: frozenset()})
    tree = {v: set() for v in order}
    roots = [v for v in order if parent[v] is None]
    for v in order:
        if parent[v] is not None:
            tree[v].add(parent[v])
            tree[parent[v]].add(v)
    for a, b in zip(roots, roots[1:]):
        tree[a].add(b)
        tree[b].add(a)
    return TreeDecomposition(tree, bags)


def min_fill_order(G):
    nb = [set(G.adj[v]) for v in range(G.n)]
    alive = set(range(G.n))
    order = []
    while alive:
        best = None
        for v in sorted(alive):
            ns = nb[v]
            fill = sum(1 for a in ns for b in ns if a < b and b not in nb[a])
            key = (fill, len(ns), v)
            if best is None or key < best[0]:
                best = (key, v)
        v = best[1]
        ns = nb[v]
        for a in ns:
            nb[a] |= ns - {a}
            nb[a].discard(v)
        alive.discard(v)
        order.append(v)
    return order


def degeneracy_lower_bound(G):
    """Minor-min-width: contract a min-degree vertex into a least-degree neighbour."""
    nb = {v: set(G.adj[v]) for v in range(G.n)}
    best = 0
    while len(nb) > 1:
        v = min(nb, key=lambda x: (len(nb[x]), x))
        best = max(best, len(nb[v]))
        if not nb[v]:
            del nb[v]
            continue
        u = min(nb[v], key=lambda x: (len(nb[x]), x))
        for w in nb[v]:
            nb[w].discard(v)
            if w != u:
                nb[w].add(u)
                nb[u].add(w)
        del nb[v]
    return best


def _adj_masks(G):
    return [sum(1 << w for w in G.adj[v]) for v in range(G.n)]


def treewidth_at_most(G, k, state_cap=None):
    """Decide tw(G) <= k; returns a witnessing decomposition or None."""
    if G.n == 0:
        return TreeDecomposition({0: []}, {0: frozenset()})
    heur = decomposition_from_order(G, min_fill_order(G))
    if heur.width <= k:
        return heur
    if degeneracy_lower_bound(G) > k:
        return None
    cap = TW_STATE_CAP if state_cap is None else state_cap
    try:
        order = tw_decide(G.n, _adj_masks(G), k, cap)
    except OverflowError as exc:
        raise CapExceeded(str(exc))
    if order is None:
        return None
    return decomposition_from_order(G, order)


def exact_treewidth(G, cap=None, with_decomposition=False):
    """Exact treewidth for graphs up to ``cap`` vertices (default 20)."""
    cap = TW_CAP if cap is None else cap
    if G.n > cap:
        raise CapExceeded("exact_treewidth: %d vertices exceeds cap %d" % (G.n, cap))
    if G.n == 0:
        td = TreeDecomposition({0: []}, {0: frozenset()})
        return (-1, td) if with_decomposition else -1
    lo = degeneracy_lower_bound(G)
    upper = decomposition_from_order(G, min_fill_order(G))
    best = upper
    for k in range(lo, upper.width):
        td = treewidth_at_most(G, k)
        if td is not None:
            best = td
            break
    if with_decomposition:
        return best.width, best
    return best.width

