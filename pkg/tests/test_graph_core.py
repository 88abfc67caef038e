import itertools

import pytest
from hypothesis import given

from conftest import small_graphs
from dyckminors.flows import min_vertex_cut
from dyckminors.graph import (
    CapExceeded, Graph, GraphError, Linkage, Separation, complete_bipartite, complete_graph,
    cycle_graph, disjoint_union, grid_graph, is_separation, path_graph,
)
from dyckminors.io import (
    FormatError, from_graph6, graph_from_obj, graph_to_obj, td_from_obj, td_to_obj, to_dot, to_graph6,
)
from dyckminors.planarity import is_planar
from dyckminors.separations import (
    count_separations, enumerate_separations, is_quasi_4_connected, quasi_4_witness,
)
from dyckminors.treedec import (
    TreeDecomposition, exact_treewidth, torso, validate_tree_decomposition,
)


# graph container

def test_graph_rejects_loops_and_range():
    with pytest.raises(GraphError):
        Graph(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])


def test_graph_dedups_edges():
    G = Graph(3, [(0, 1), (1, 0), (1, 2)])
    assert G.num_edges() == 2
    assert G.adj[1] == (0, 2)


def test_linkage_validity():
    G = path_graph(4)
    assert Linkage([(0, 1), (2, 3)]).is_valid(G)
    assert not Linkage([(0, 1), (1, 2)]).is_valid(G)
    assert not Linkage([(0, 2)]).is_valid(G)


# separations

def test_is_separation_examples():
    K3 = complete_graph(3)
    assert is_separation(K3, {0, 1, 2}, {0, 1, 2})
    assert Separation({0, 1, 2}, {0, 1, 2}).order == 3
    P = path_graph(3)
    assert is_separation(P, {0, 1}, {1, 2})
    assert Separation({0, 1}, {1, 2}).order == 1
    assert not is_separation(K3, {0}, {1, 2})


def test_enumerate_separations_examples():
    assert list(enumerate_separations(complete_graph(3), 1)) == []
    two = Graph(2)
    assert list(enumerate_separations(two, 1)) == [Separation({0}, {1})]
    assert count_separations(path_graph(4), 2) == 2
    assert count_separations(path_graph(4), 2, include_improper=True) == 7


def test_enumerate_separations_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_separations(path_graph(20), 2))


@given(small_graphs(max_n=6))
def test_enumerated_separations_are_valid_and_distinct(G):
    seen = set()
    for sep in enumerate_separations(G, 3, include_improper=True):
        assert is_separation(G, sep.A, sep.B)
        assert sep.order < 3
        key = frozenset([sep.A, sep.B])
        assert key not in seen
        seen.add(key)


@given(small_graphs(max_n=5))
def test_enumeration_is_complete(G):
    V = set(range(G.n))
    want = set()
    for bits in itertools.product((0, 1, 2), repeat=G.n):
        A = {v for v in V if bits[v] in (0, 2)}
        B = {v for v in V if bits[v] in (1, 2)}
        if len(A & B) < 2 and is_separation(G, A, B):
            want.add(frozenset([frozenset(A), frozenset(B)]))
    got = {frozenset([s.A, s.B]) for s in enumerate_separations(G, 2, include_improper=True)}
    assert got == want


# flows

def test_min_vertex_cut_grid():
    G = grid_graph(3, 3)
    cut, paths = min_vertex_cut(G, {0, 3, 6}, {2, 5, 8})
    assert len(cut) == 3 and len(paths) == 3
    assert paths.is_valid(G)
    for Z in itertools.combinations(range(9), 2):
        H, old = G.delete_vertices(Z)
        left = {i for i, v in enumerate(old) if v in (0, 3, 6)}
        right = {i for i, v in enumerate(old) if v in (2, 5, 8)}
        assert any(set(c) & left and set(c) & right for c in H.components())


def test_min_vertex_cut_disconnected_and_shared():
    G = disjoint_union(path_graph(2), path_graph(2))
    cut, paths = min_vertex_cut(G, {0}, {3})
    assert cut == set() and len(paths) == 0
    cut, paths = min_vertex_cut(G, {1}, {1})
    assert cut == {1} and paths.paths == ((1,),)


def _max_disjoint_bruteforce(G, X, Y):
    paths = []

    def walk(p):
        if p[-1] in Y:
            paths.append(frozenset(p))
            return
        for w in G.adj[p[-1]]:
            if w not in p and w not in X:
                walk(p + [w])

    for x in X:
        walk([x])
    best = 0

    def pick(i, used, count):
        nonlocal best
        best = max(best, count)
        for j in range(i, len(paths)):
            if not (paths[j] & used):
                pick(j + 1, used | paths[j], count + 1)

    pick(0, frozenset(), 0)
    return best


@given(small_graphs(min_n=2, max_n=7))
def test_min_vertex_cut_duality(G):
    X, Y = {0}, {G.n - 1}
    if G.n >= 4:
        X, Y = {0, 1}, {G.n - 2, G.n - 1}
    cut, paths = min_vertex_cut(G, X, Y)
    assert len(cut) == len(paths)
    assert paths.is_valid(G)
    assert len(paths) == _max_disjoint_bruteforce(G, X, Y)
    H, old = G.delete_vertices(cut)
    for comp in H.components():
        real = {old[i] for i in comp}
        assert not (real & X and real & Y)


# tree decompositions

def test_validate_tree_decomposition_examples():
    P = path_graph(4)
    single = TreeDecomposition({0: []}, {0: range(4)})
    assert validate_tree_decomposition(P, single) and single.width == 3
    td = TreeDecomposition({0: [1], 1: [0, 2], 2: [1]}, {0: {0, 1}, 1: {1, 2}, 2: {2, 3}})
    assert validate_tree_decomposition(P, td)
    assert td.width == 1 and td.adhesion == 1
    broken = TreeDecomposition({0: [2], 2: [0]}, {0: {0, 1}, 2: {2, 3}})
    rep = validate_tree_decomposition(P, broken)
    assert not rep and rep.witness == (1, 2)


def test_validate_rejects_non_subtree():
    P = path_graph(3)
    td = TreeDecomposition({0: [1], 1: [0, 2], 2: [1]}, {0: {0, 1}, 1: {1, 2}, 2: {0, 2}})
    rep = validate_tree_decomposition(P, td)
    assert not rep and rep.witness == 0


def test_torso_examples():
    P = path_graph(3)
    single = TreeDecomposition({0: []}, {0: range(3)})
    T, old = torso(P, single, 0)
    assert T == P and old == [0, 1, 2]
    star = TreeDecomposition({"c": ["l"], "l": ["c"]}, {"c": {0, 2}, "l": {0, 1, 2}})
    T, old = torso(P, star, "c")
    assert old == [0, 2] and T.has_edge(0, 1)
    empty = TreeDecomposition({0: [1], 1: [0]}, {0: set(), 1: {0, 1, 2}})
    T, old = torso(P, empty, 0)
    assert T.n == 0
    with pytest.raises(KeyError):
        torso(P, single, 9)


def test_exact_treewidth_examples():
    tree = Graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert exact_treewidth(tree) == 1
    assert exact_treewidth(grid_graph(3, 3)) == 3
    assert exact_treewidth(complete_graph(5)) == 4
    with pytest.raises(CapExceeded):
        exact_treewidth(path_graph(30))


def _tw_bruteforce(G):
    best = G.n - 1
    for order in itertools.permutations(range(G.n)):
        nb = {v: set(G.adj[v]) for v in range(G.n)}
        w = 0
        for v in order:
            w = max(w, len(nb[v]))
            for a in nb[v]:
                nb[a] |= nb[v] - {a}
                nb[a].discard(v)
            del nb[v]
        best = min(best, w)
    return best


@given(small_graphs(max_n=6))
def test_exact_treewidth_is_optimal(G):
    w, td = exact_treewidth(G, with_decomposition=True)
    assert validate_tree_decomposition(G, td)
    assert td.width == w
    assert w == _tw_bruteforce(G)


# planarity and quasi-4-connectivity

def test_planarity_examples():
    assert is_planar(complete_graph(4))
    assert not is_planar(complete_graph(5))
    assert not is_planar(complete_bipartite(3, 3))


def test_quasi_4_connectivity_examples():
    assert is_quasi_4_connected(complete_graph(5))
    K5 = complete_graph(5)
    two = Graph(9, list(K5.edges) + [(u + 4, v + 4) for u, v in K5.edges])
    assert not is_quasi_4_connected(two)
    assert not is_quasi_4_connected(cycle_graph(4))
    assert quasi_4_witness(cycle_graph(4)) == Separation({0, 1, 2}, {0, 2, 3})


# io

@given(small_graphs(max_n=7))
def test_graph6_and_json_round_trip(G):
    assert from_graph6(to_graph6(G)) == G
    assert graph_from_obj(graph_to_obj(G)) == G


def test_io_errors_and_dot():
    with pytest.raises(FormatError):
        from_graph6("\x01bad")
    with pytest.raises(FormatError):
        graph_from_obj({"n": 2})
    dot = to_dot(path_graph(2))
    assert "0 -- 1;" in dot


def test_td_round_trip():
    td = TreeDecomposition({0: [1], 1: [0]}, {0: {0, 1}, 1: {1, 2}})
    back = td_from_obj(td_to_obj(td))
    assert validate_tree_decomposition(path_graph(3), back)
    assert back.width == 1
