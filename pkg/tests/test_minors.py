import random

import pytest
from hypothesis import given, settings

from conftest import random_graph, small_graphs
from dyckminors.graph import CapExceeded, Graph, complete_graph, cycle_graph, grid_graph, path_graph
from dyckminors.minors import (
    ExpansionCertificate, MinorModel, compose_models, expansion_to_minor_model, find_minor_bruteforce,
    identity_model, is_minor_by_closure, minor_closure, verify_expansion, verify_minor_model,
)


def test_verifier_examples():
    C4 = cycle_graph(4)
    assert verify_minor_model(identity_model(C4))
    K3 = complete_graph(3)
    assert verify_minor_model(MinorModel(K3, C4, {0: [0], 1: [1], 2: [2, 3]}))
    bad = verify_minor_model(MinorModel(K3, C4, {0: [0], 1: [1], 2: [3]}))
    assert not bad and bad.reason == "pattern edge not realized" and bad.witness == [1, 2]


def test_verifier_reasons():
    K3, C4 = complete_graph(3), cycle_graph(4)
    assert verify_minor_model(MinorModel(K3, C4, {0: [0], 1: [0, 1], 2: [2, 3]})).reason == \
        "branch sets overlap"
    assert verify_minor_model(MinorModel(K3, C4, {0: [0, 2], 1: [1], 2: [3]})).reason == \
        "branch set disconnected"
    assert verify_minor_model(MinorModel(K3, C4, {0: [0], 1: [1]})).reason == "empty branch set"
    assert verify_minor_model(MinorModel(K3, C4, {0: [0], 1: [1], 2: [9]})).reason == \
        "vertex outside host"


def test_find_minor_examples():
    M = find_minor_bruteforce(grid_graph(3, 3), complete_graph(4))
    assert M is not None and verify_minor_model(M)
    assert find_minor_bruteforce(grid_graph(4, 4), complete_graph(5)) is None
    assert find_minor_bruteforce(cycle_graph(3), cycle_graph(4)) is None
    with pytest.raises(CapExceeded):
        find_minor_bruteforce(grid_graph(5, 5), complete_graph(3))


def test_compose_examples():
    K3, C4 = complete_graph(3), cycle_graph(4)
    M1 = MinorModel(K3, C4, {0: [0], 1: [1], 2: [2, 3]})
    C5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    M2 = MinorModel(C4, C5, {0: [0], 1: [1], 2: [2], 3: [3, 4]})
    assert compose_models(M1, identity_model(C4)).branch_sets == M1.branch_sets
    assert compose_models(identity_model(C4), M2).branch_sets == M2.branch_sets
    M = compose_models(M1, M2)
    assert verify_minor_model(M)
    assert M.branch_sets == {0: [0], 1: [1], 2: [2, 3, 4]}
    with pytest.raises(ValueError):
        compose_models(M2, M1)
    with pytest.raises(ValueError):
        compose_models(MinorModel(K3, C4, {0: [0], 1: [1], 2: [3]}), identity_model(C4))


@settings(max_examples=40)
@given(small_graphs(min_n=1, max_n=6), small_graphs(min_n=1, max_n=4))
def test_oracle_soundness(G, H):
    M = find_minor_bruteforce(G, H)
    if M is not None:
        assert verify_minor_model(M)


def test_oracle_agrees_with_contraction_closure():
    rng = random.Random(7)
    checked = 0
    for _ in range(25):
        G = random_graph(rng, rng.randint(3, 6), 0.55)
        closure = minor_closure(G)
        for _ in range(4):
            H = random_graph(rng, rng.randint(1, min(G.n, 5)), 0.5)
            assert (find_minor_bruteforce(G, H) is not None) == is_minor_by_closure(G, H, closure)
            checked += 1
    assert checked == 100


def _mutations(M, rng, count):
    bs = M.branch_sets
    keys = sorted(bs)
    out = []
    for _ in range(count):
        new = {v: list(xs) for v, xs in bs.items()}
        v = rng.choice(keys)
        if rng.random() < 0.5 or len(keys) < 2:
            new[v].remove(rng.choice(new[v]))
        else:
            w = rng.choice([x for x in keys if x != v])
            x = rng.choice(new[v])
            new[v].remove(x)
            new[w].append(x)
        out.append(MinorModel(M.pattern, M.host, new))
    return out


def _valid_by_definition(M):
    H, G = M.pattern, M.host
    sets = [set(M.branch_sets.get(v, ())) for v in range(H.n)]
    if any(not s for s in sets):
        return False
    for i in range(H.n):
        for j in range(i + 1, H.n):
            if sets[i] & sets[j]:
                return False
    if any(not G.is_connected_set(s) for s in sets):
        return False
    return all(G.is_connected_set(sets[u] | sets[v]) for u, v in H.edges)


def test_mutation_rejection():
    rng = random.Random(3)
    M = find_minor_bruteforce(grid_graph(3, 3), complete_graph(4))
    for mut in _mutations(M, rng, 100):
        assert bool(verify_minor_model(mut)) == _valid_by_definition(mut)


# expansions

def test_trivial_expansion():
    K4 = complete_graph(4)
    cert = ExpansionCertificate(K4, K4, range(4), [], {v: ("v", v) for v in range(4)})
    assert verify_expansion(cert)
    M = expansion_to_minor_model(cert)
    assert M.branch_sets == identity_model(K4).branch_sets
    other = ExpansionCertificate(K4, cycle_graph(4), range(4), [], {v: ("v", v) for v in range(4)})
    assert not verify_expansion(other)


def _k4_split(move):
    K4 = complete_graph(4)
    H = Graph(5, [(0, 1), (0, 4), (4, 2), (4, 3), (1, 2), (1, 3), (2, 3)])
    return ExpansionCertificate(K4, H, range(5), [{"vertex": 0, "new": 4, "move": move}],
                                {v: ("v", v) for v in range(5)})


def test_split_expansion():
    cert = _k4_split([2, 3])
    assert verify_expansion(cert)
    M = expansion_to_minor_model(cert)
    assert M.branch_sets[0] == [0, 4]
    assert verify_minor_model(M)
    assert not verify_expansion(_k4_split([2, 3, 0]))
    assert not verify_expansion(_k4_split([1]))


def test_subdivision_expansion():
    P2 = path_graph(2)
    P3 = Graph(3, [(0, 2), (2, 1)])
    cert = ExpansionCertificate(P2, P3, [0, 1], [], {0: ("v", 0), 1: ("v", 1), 2: ("e", 0, 1, 1)})
    assert verify_expansion(cert)
    M = expansion_to_minor_model(cert)
    assert M.branch_sets == {0: [0, 2], 1: [1]}
    bad = ExpansionCertificate(P2, P3, [0, 1], [], {0: ("v", 0), 1: ("v", 1), 2: ("e", 0, 1, 2)})
    assert not verify_expansion(bad)
    with pytest.raises(ValueError):
        expansion_to_minor_model(bad)


def test_expansion_needs_branch_vertices():
    K4 = complete_graph(4)
    cert = ExpansionCertificate(K4, K4, [0, 1, 2], [], {v: ("v", v) for v in range(4)})
    assert not verify_expansion(cert)
