"""The twelve acceptance criteria, one test each.

Every test records a PASS/FAIL line with its runtime; the lines are printed
in the terminal summary. Run alone with ``pytest tests/test_acceptance.py``.
"""

import functools
import itertools
import random
import time
from fractions import Fraction

import networkx as nx
import pytest

from conftest import ACCEPTANCE, random_graph
from dyckminors.graph import Graph, complete_graph, disjoint_union, grid_graph
from dyckminors.grids import (
    DyckGridSpec, DyckWallSpec, MixedSurfaceGridSpec, cylindrical_grid, dyck_grid, dyck_wall,
    elementary_wall, mixed_surface_grid,
)
from dyckminors.minors import MinorModel, find_minor_bruteforce, is_minor_by_closure, minor_closure, \
    verify_minor_model
from dyckminors.separations import enumerate_separations
from dyckminors.societies import (
    LinearDecomposition, Society, Transaction, depth, disk_rendition_exists, has_cross,
    linear_decomposition, validate_linear_decomposition,
)
from dyckminors.tangles import (
    WellLinkedWitness, build_S_free_set, check_tangle_axioms, grow_wall, is_S_free,
    is_strongly_linked, is_truncation, oracle_from_free_set, oracle_from_wall,
    oracle_from_well_linked, representative_set, well_linked_order,
)
from dyckminors.transforms import (
    TransformError, dyck_contains_mixed, merge_three_crosscaps, normalization_plan, normalize_to_dyck,
    uniform_order_bound, split_handle_to_crosscaps, swap_handle_crosscap,
)
from dyckminors.treedec import exact_treewidth

W = MixedSurfaceGridSpec.from_word
ALPHA = Fraction(2, 3)
WORDS = ["".join(w) for n in range(4) for w in itertools.product("HX", repeat=n)]


def criterion(num, title, budget):
    def deco(fn):
        @functools.wraps(fn)
        def run():
            t = time.perf_counter()
            ok = False
            try:
                fn()
                ok = True
            finally:
                secs = time.perf_counter() - t
                ACCEPTANCE.append((num, ok and secs <= budget, title, secs, budget))
            assert secs <= budget, "criterion %d took %.1fs, budget %ds" % (num, secs, budget)
        return run
    return deco


# independent checks built on networkx

def nx_graph(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


def model_valid_by_definition(M, host_nx=None):
    """Nonempty disjoint connected branch sets with a host edge for every pattern edge."""
    host = nx_graph(M.host) if host_nx is None else host_nx
    owner = {}
    for v in range(M.pattern.n):
        bs = M.branch_sets.get(v, [])
        if not bs or not nx.is_connected(host.subgraph(bs)):
            return False
        for x in bs:
            if x in owner:
                return False
            owner[x] = v
    touching = {tuple(sorted((owner[a], owner[b]))) for a, b in host.edges
                if a in owner and b in owner and owner[a] != owner[b]}
    return all(tuple(sorted(e)) in touching for e in M.pattern.edges)


def mutations(M, rng, count):
    keys = sorted(M.branch_sets)
    for _ in range(count):
        bs = {v: list(xs) for v, xs in M.branch_sets.items()}
        v = rng.choice(keys)
        x = rng.choice(bs[v])
        bs[v].remove(x)
        if rng.random() < 0.5:
            bs[rng.choice([w for w in keys if w != v])].append(x)
        yield MinorModel(M.pattern, M.host, bs)


def check_certificate(model, pattern_spec, host_spec):
    assert model.pattern == mixed_surface_grid(pattern_spec)
    assert model.host == mixed_surface_grid(host_spec)
    assert verify_minor_model(model)
    assert model_valid_by_definition(model)


# 1

@criterion(1, "generator formulas, k in [3,6], h+c <= 3", 10)
def test_criterion_01_generator_formulas():
    for k in range(3, 7):
        for word in WORDS:
            g = len(word)
            G = mixed_surface_grid(W(k, word))
            assert G.n == 4 * (g + 1) * k * k
            assert G.num_edges() == 4 * (g + 1) * k * (2 * k - 1) + 2 * k * g
            base = cylindrical_grid(k, 4 * (g + 1) * k)
            assert base.edges <= G.edges
            assert len(G.edges - base.edges) == 2 * k * g
            for i in range(g):
                fewer = word[:i] + word[i + 1:]
                assert mixed_surface_grid(W(k, fewer)).num_edges() + 2 * k == \
                    G.num_edges() - 4 * k * (2 * k - 1)


# 2

@criterion(2, "max degree 4 for mixed grids, 3 for walls and Dyck-walls", 10)
def test_criterion_02_degrees():
    for k in range(3, 7):
        for word in WORDS:
            assert mixed_surface_grid(W(k, word)).max_degree() == 4
    for k in range(3, 9):
        assert elementary_wall(k).graph.max_degree() == 3
    for h, c in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (1, 2), (2, 1), (3, 0)]:
        for t in (3, 4):
            assert dyck_wall(DyckWallSpec(h, c, t)).max_degree() == 3


# 3

@criterion(3, "swap certificate (1,1) at k=3, 100 mutations rejected", 120)
def test_criterion_03_swap_certificate():
    target, model, step = swap_handle_crosscap(W(27, "XH"), 2)
    assert target == W(3, "HX") and model.host.n == 8748
    check_certificate(model, target, W(27, "XH"))
    host = nx_graph(model.host)
    rejected = 0
    for mut in mutations(model, random.Random(34), 100):
        verdict = verify_minor_model(mut)
        assert bool(verdict) == model_valid_by_definition(mut, host)
        assert not verdict and verdict.reason
        rejected += 1
    assert rejected == 100


# 4

@criterion(4, "merge and split certificates at k=3, genus preserved", 600)
def test_criterion_04_merge_split():
    for source, expect, run in ((W(54, "XXX"), W(3, "HX"), lambda s: merge_three_crosscaps(s)),
                                (W(54, "HX"), W(3, "XXX"), lambda s: split_handle_to_crosscaps(s, 2))):
        t = time.perf_counter()
        target, model, step = run(source)
        assert target == expect
        assert source.euler_genus == target.euler_genus == 3
        check_certificate(model, target, source)
        assert time.perf_counter() - t < 300


# 5

@criterion(5, "normalize (0,3) at order 54 to Dyck (1,1) order 3", 300)
def test_criterion_05_normalize():
    source = W(54, "XXX")
    dyck, model, steps = normalize_to_dyck(source, 3)
    assert dyck == DyckGridSpec(1, 1, 3)
    assert model.pattern == dyck_grid(dyck)
    assert model.host == mixed_surface_grid(source)
    assert verify_minor_model(model) and model_valid_by_definition(model)
    assert source.c % 2 == dyck.c % 2 and (source.c == 0) == (dyck.c == 0)
    assert source.euler_genus == dyck.euler_genus
    for n in range(8):
        for word in map("".join, itertools.product("HX", repeat=n)):
            _, out = normalization_plan(word)
            c, c2 = word.count("X"), out.count("X")
            assert (c2 % 2 == 0) == (c % 2 == 0) and (c2 == 0) == (c == 0)


# 6

def random_society(rng, max_n):
    n = rng.randint(1, max_n)
    G = random_graph(rng, n, rng.uniform(0.1, 0.6))
    return Society(G, rng.sample(range(n), rng.randint(1, n)))


@criterion(6, "two paths duality on 400 societies, |V| <= 10", 120)
def test_criterion_06_two_paths():
    rng = random.Random(6)
    outcomes = {True: 0, False: 0}
    for _ in range(400):
        soc = random_society(rng, 10)
        cross = has_cross(soc)
        assert (cross is None) == disk_rendition_exists(soc)
        outcomes[cross is None] += 1
    assert min(outcomes.values()) >= 50


# 7

@criterion(7, "linear decompositions on 100 societies, |V| <= 12", 300)
def test_criterion_07_linear_decomposition():
    rng = random.Random(7)
    depths = set()
    for _ in range(100):
        soc = random_society(rng, 12)
        d = depth(soc)
        depths.add(d)
        ld = linear_decomposition(soc, d)
        assert isinstance(ld, LinearDecomposition)
        assert validate_linear_decomposition(soc, ld) and ld.adhesion <= d
        for theta in range(d):
            out = linear_decomposition(soc, theta)
            assert isinstance(out, Transaction) and out.order > theta
            assert out.linkage.is_valid(soc.graph)
    assert len(depths) >= 3


# 8

def s_free_by_enumeration(G, S, F):
    """Every side holding F of a separation of order < |F| holds more than 2/3 of S."""
    S, F = set(S), set(F)
    for sep in enumerate_separations(G, len(F), cap=G.n, include_improper=True):
        for side in (sep.A, sep.B):
            if F <= side and len(side & S) <= ALPHA * len(S):
                return False
    return True


def criterion_8_fixtures():
    grid = grid_graph(3, 3)
    with_triangle = disjoint_union(grid, complete_graph(3))
    return [
        ("grid3x4", grid_graph(3, 4), range(12)),
        ("K12", complete_graph(12), range(12)),
        ("icosahedron", Graph(12, nx.icosahedral_graph().edges), range(12)),
        ("grid3x3+K3", with_triangle, range(9)),
    ]


@criterion(8, "free set, T_F axioms and truncation of T_S, |V| <= 12", 600)
def test_criterion_08_free_set_chain():
    for name, G, S in criterion_8_fixtures():
        S = set(S)
        assert G.n <= 12
        q = well_linked_order(G, S)
        WellLinkedWitness.verified(G, S, q)
        F = build_S_free_set(G, S, k=4)
        assert len(F) == 3, name
        assert is_S_free(G, S, F) and s_free_by_enumeration(G, S, F), name
        TF = oracle_from_free_set(F)
        TS = oracle_from_well_linked(S, q)
        assert check_tangle_axioms(TF, G, cap=G.n), name
        assert check_tangle_axioms(TS, G, cap=G.n), name
        assert is_truncation(TF, TS, G, cap=G.n), name


# 9

def strongly_linked_by_connectivity(G, F):
    H = nx_graph(G)
    F = sorted(F)
    for r in range(1, len(F)):
        for S1 in itertools.combinations(F, r):
            S2 = [v for v in F if v not in S1]
            aux = H.copy()
            aux.add_edges_from(("s", v) for v in S1)
            aux.add_edges_from(("t", v) for v in S2)
            if nx.node_connectivity(aux, "s", "t") < min(len(S1), len(S2)):
                return False
    return True


def criterion_9_fixtures():
    return [
        ("grid3x3", grid_graph(3, 3), [[0, 1, 2], [0, 1, 2, 6, 7, 8]]),
        ("grid4x4", grid_graph(4, 4), [[0, 3, 12], [0, 3, 5, 10, 12, 15],
                                       [0, 2, 3, 5, 9, 10, 12, 14, 15]]),
        ("grid4x5", grid_graph(4, 5), [[0, 4, 19], [0, 4, 7, 12, 15, 19]]),
        ("K9", complete_graph(9), [list(range(3)), list(range(6)), list(range(9))]),
        ("wall3", elementary_wall(3).graph, []),
    ]


@criterion(9, "strongly linked F of size 3k forces tw >= k", 120)
def test_criterion_09_treewidth_bound():
    rng = random.Random(9)
    seen = {1: 0, 2: 0, 3: 0}
    for name, G, fixed in criterion_9_fixtures():
        tw = exact_treewidth(G)
        samples = [F for F in fixed]
        for k in (1, 2, 3):
            if 3 * k <= G.n:
                samples += [rng.sample(range(G.n), 3 * k) for _ in range(15)]
        for F in samples:
            linked = is_strongly_linked(G, F)
            assert linked == strongly_linked_by_connectivity(G, F), (name, F)
            if not linked:
                continue
            k = len(F) // 3
            seen[k] += 1
            assert tw >= k, (name, F)
            assert find_minor_bruteforce(G, complete_graph(k + 1), cap_g=G.n) is not None
    assert all(seen[k] >= 2 for k in seen), seen


# 10

@criterion(10, "grow_wall on the 6x6 grid: 3-wall, truncation of T_S", 600)
def test_criterion_10_grow_wall():
    G = grid_graph(6, 6)
    S = set(range(36))
    q = well_linked_order(G, S)
    assert q >= 2
    WellLinkedWitness.verified(G, S, q)
    res = grow_wall(G, S, 3)
    assert res.truncation == "verified"
    W = res.wall
    assert W.order == 3 and W.check(G)
    assert res.linkage.is_valid(G) and len(res.linkage) == min(len(res.free_set), 3)
    assert is_strongly_linked(G, representative_set(W))
    TW = oracle_from_wall(W)
    assert check_tangle_axioms(TW, G, cap=G.n)
    assert is_truncation(TW, oracle_from_well_linked(S, q), G, cap=G.n)


# 11

@criterion(11, "minor search agrees with contraction closure, 150 pairs, |V| <= 7", 600)
def test_criterion_11_oracle_cross_validation():
    rng = random.Random(11)
    pairs = found = 0
    while pairs < 150:
        G = random_graph(rng, rng.randint(4, 7), rng.uniform(0.3, 0.8))
        closure = minor_closure(G)
        for _ in range(5):
            H = random_graph(rng, rng.randint(2, min(G.n, 6)), rng.uniform(0.3, 0.9))
            M = find_minor_bruteforce(G, H)
            assert (M is not None) == is_minor_by_closure(G, H, closure)
            if M is not None:
                assert verify_minor_model(M) and model_valid_by_definition(M)
                found += 1
            pairs += 1
    assert 20 <= found <= pairs - 20


# 12

@criterion(12, "documented, not verified: non-containment and uniform bound", 10)
def test_criterion_12_documented_limits():
    with pytest.raises(TransformError, match="orientable"):
        dyck_contains_mixed(DyckGridSpec(1, 0, 3), W(3, "XX"))
    assert "162^(2g)" in uniform_order_bound.__doc__
    assert uniform_order_bound(1, 3) == 78732
    assert mixed_surface_grid(W(3, "HX")).n == 108
    assert 4 * 3 * uniform_order_bound(1, 3) ** 2 > 10 ** 10


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
