import random

import pytest
from hypothesis import given, strategies as st

from dyckminors.graph import Graph, complete_graph, cycle_graph, path_graph
from dyckminors.societies import (
    LinearDecomposition, Segment, Society, SocietyError, Transaction, classify_transaction, depth,
    depth_all_pairs, disk_rendition_exists, has_cross, linear_decomposition, max_transaction,
    validate_linear_decomposition,
)


def random_society(rng, max_n=10, p=None):
    n = rng.randint(1, max_n)
    p = rng.uniform(0.15, 0.6) if p is None else p
    G = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
    omega = rng.sample(range(n), rng.randint(1, n))
    return Society(G, omega)


@st.composite
def societies(draw, max_n=9):
    return random_society(random.Random(draw(st.integers(0, 2 ** 32))), max_n)


# segments

def test_segments():
    soc = Society(cycle_graph(6), range(6))
    assert soc.segment(1, 3) == [1, 2, 3]
    assert soc.segment(4, 1) == [4, 5, 0, 1]
    assert sorted(soc.segment(3, 2)) == list(range(6))
    assert soc.is_segment({5, 0, 1}) and not soc.is_segment({0, 2})
    with pytest.raises(SocietyError):
        Segment(0, 9).vertices(soc)


@given(societies())
def test_segment_and_complement_partition_omega(soc):
    om = soc.omega
    n = len(om)
    for i in range(n):
        for j in range(n):
            S = soc.segment(om[i], om[j])
            if (i - j) % n == 1 or n == 1:
                assert S == list(om)
                continue
            rest = soc.segment(om[(j + 1) % n], om[(i - 1) % n])
            assert sorted(S + rest) == sorted(om)
            assert soc.is_segment(S) and soc.is_segment(rest)


def test_society_errors():
    with pytest.raises(SocietyError):
        Society(path_graph(3), [0, 0])
    with pytest.raises(SocietyError):
        Society(path_graph(3), [5])


# crosses and renditions

def test_cross_examples():
    K4 = complete_graph(4)
    for om in ([0, 1, 2, 3], [0, 2, 1, 3], [3, 1, 0, 2]):
        soc = Society(K4, om)
        P, Q = has_cross(soc)
        assert not disk_rendition_exists(soc)
        pos = {v: i for i, v in enumerate(om)}
        a, b = sorted((pos[P[0]], pos[P[-1]]))
        assert (a < pos[Q[0]] < b) != (a < pos[Q[-1]] < b)
    C4 = Society(cycle_graph(4), range(4))
    assert has_cross(C4) is None and disk_rendition_exists(C4)
    small = Society(complete_graph(5), [0, 1, 2])
    assert has_cross(small) is None and disk_rendition_exists(small)
    assert disk_rendition_exists(Society(complete_graph(5), []))


def test_rendition_needs_reduction():
    # K_5 hanging off a single omega vertex: non-planar, but drawable in a disk
    es = [(a, b) for a in range(4, 9) for b in range(a + 1, 9)] + [(0, 1), (1, 2), (2, 3), (3, 4)]
    soc = Society(Graph(9, es), [0, 1, 2, 3])
    assert has_cross(soc) is None
    assert disk_rendition_exists(soc)


@given(societies(max_n=8))
def test_two_paths_duality(soc):
    assert (has_cross(soc) is None) == disk_rendition_exists(soc)


# transactions and depth

def test_transaction_examples():
    soc = Society(cycle_graph(6), range(6))
    assert len(max_transaction(soc, [0, 1, 2], [3, 4, 5])) == 2
    assert len(max_transaction(soc, Segment(0, 2), Segment(3, 5))) == 2
    split = Society(Graph(4, [(0, 1), (2, 3)]), range(4))
    assert len(max_transaction(split, [0, 1], [2, 3])) == 0
    with pytest.raises(SocietyError):
        max_transaction(soc, [0, 1, 2], [2, 3])
    with pytest.raises(SocietyError):
        max_transaction(soc, [0, 2], [3])


def test_depth_examples():
    assert depth(Society(cycle_graph(6), range(6))) == 2
    assert depth(Society(path_graph(5), [0, 4])) == 1
    assert depth(Society(Graph(4), range(4))) == 0


@given(societies(max_n=7))
def test_depth_matches_all_pairs(soc):
    assert depth(soc) == depth_all_pairs(soc)


# classification

def test_classification():
    om = [0, 1, 2, 3]
    nested = classify_transaction([(0, 9, 3), (1, 8, 2)], om)
    assert nested.kind == "unclassified"
    crossing = classify_transaction([(0, 2), (1, 3)], om)
    assert crossing.kind == "cross" and crossing.thickness == 1
    assert crossing.patterns == {"crosscap": 2, "handle": 1}
    chord = classify_transaction([(0, 2)], om)
    assert chord.kind == "crosscap" and chord.thickness == 1
    om6 = list(range(6))
    cap3 = classify_transaction([(0, 3), (1, 4), (2, 5)], om6)
    assert cap3.kind == "crosscap" and cap3.thickness == 3
    om8 = list(range(8))
    hdl = classify_transaction([(0, 5), (1, 4), (2, 7), (3, 6)], om8)
    assert hdl.kind == "handle" and hdl.thickness == 2
    rotated = classify_transaction([(5, 0), (4, 1), (7, 2), (6, 3)], om8[3:] + om8[:3])
    assert rotated.kind == "handle"
    with pytest.raises(SocietyError):
        classify_transaction([(0, 7)], om)


@given(societies(max_n=8))
def test_cross_witness_classifies_as_cross(soc):
    w = has_cross(soc)
    if w is not None:
        assert classify_transaction(list(w), soc.omega).kind == "cross"


# linear decompositions

def test_linear_decomposition_path():
    soc = Society(path_graph(5), [0, 4])
    ld = linear_decomposition(soc, 1)
    assert isinstance(ld, LinearDecomposition)
    assert validate_linear_decomposition(soc, ld) and ld.adhesion <= 1
    hand = LinearDecomposition([{0, 1, 2}, {2, 3, 4}], [0, 4])
    assert validate_linear_decomposition(soc, hand) and hand.adhesion == 1


def test_linear_decomposition_transaction():
    soc = Society(cycle_graph(6), range(6))
    out = linear_decomposition(soc, 1)
    assert isinstance(out, Transaction) and out.order == 2
    assert out.linkage.is_valid(soc.graph)


def test_validator_rejections():
    soc = Society(path_graph(5), [0, 4])
    assert validate_linear_decomposition(soc, LinearDecomposition([{0, 1, 2}, {2, 3, 4}], [0, 4]))
    gap = LinearDecomposition([{0, 1, 2, 4}, {2, 3}], [0, 4])
    assert not validate_linear_decomposition(soc, gap)
    uncovered = LinearDecomposition([{0, 1}, {2, 3, 4}], [0, 4])
    rep = validate_linear_decomposition(soc, uncovered)
    assert not rep and rep.reason == "edge not covered"
    soc3 = Society(path_graph(3), [0, 1, 2])
    interval = LinearDecomposition([{0, 1}, {1, 2}, {1, 2}], [0, 1, 2])
    assert validate_linear_decomposition(soc3, interval)
    broken = LinearDecomposition([{0, 1}, {1, 2}, {0, 2}], [0, 1, 2])
    rep = validate_linear_decomposition(soc3, broken)
    assert not rep and rep.reason == "bags containing a vertex are not an interval"
    order = LinearDecomposition([{0, 1}, {1, 2}, {1, 2}], [0, 2, 1])
    assert not validate_linear_decomposition(soc3, order)


@given(societies(max_n=9))
def test_linear_decomposition_at_depth(soc):
    d = depth(soc)
    ld = linear_decomposition(soc, d)
    assert isinstance(ld, LinearDecomposition)
    assert validate_linear_decomposition(soc, ld) and ld.adhesion <= d
    if d > 0:
        out = linear_decomposition(soc, d - 1)
        assert isinstance(out, Transaction) and out.order > d - 1
