"""Planarity test (networkx's left-right algorithm does the work)."""

import networkx as nx


def to_networkx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


def is_planar(G):
    ok, _ = nx.check_planarity(to_networkx(G))
    return ok
