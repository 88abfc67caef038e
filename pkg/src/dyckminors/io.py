"""Serialization: graph6, DOT and JSON forms of graphs, decompositions, models, societies."""

import json

import networkx as nx

from .graph import Graph
from .planarity import to_networkx


class FormatError(ValueError):
    pass


def to_graph6(G):
    return nx.to_graph6_bytes(to_networkx(G), header=False).decode("ascii").strip()


def from_graph6(text):
    try:
        H = nx.from_graph6_bytes(text.strip().encode("ascii"))
    except Exception as exc:
        raise FormatError("bad graph6 string: %s" % exc)
    return Graph(H.number_of_nodes(), H.edges())


def to_dot(G, name="G"):
    lines = ["graph %s {" % name]
    for v in range(G.n):
        if G.labels and v in G.labels:
            lab = ",".join(str(x) for x in G.labels[v])
            lines.append('  %d [label="%d (%s)"];' % (v, v, lab))
        else:
            lines.append("  %d;" % v)
    for u, v in G.sorted_edges():
        lines.append("  %d -- %d;" % (u, v))
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_obj(G, with_labels=True):
    obj = {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]}
    if with_labels and G.labels:
        obj["labels"] = {str(v): list(G.labels[v]) for v in sorted(G.labels)}
    return obj


def graph_from_obj(obj):
    try:
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
        labels = None
        if obj.get("labels"):
            labels = {int(v): tuple(lab) for v, lab in obj["labels"].items()}
        return Graph(n, edges, labels)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError("malformed graph JSON: %s" % exc)


def labels_sidecar(G):
    return {str(v): list(G.labels[v]) for v in sorted(G.labels)} if G.labels else {}


def td_to_obj(td):
    return {
        "nodes": [str(t) for t in td.nodes],
        "tree_edges": [[str(a), str(b)] for a, b in td.tree_edges()],
        "bags": {str(t): sorted(td.bags[t]) for t in td.nodes},
    }


def td_from_obj(obj):
    from .treedec import TreeDecomposition
    try:
        nodes = [str(t) for t in obj["nodes"]]
        tree = {t: [] for t in nodes}
        for a, b in obj["tree_edges"]:
            tree[str(a)].append(str(b))
            tree[str(b)].append(str(a))
        bags = {str(t): [int(v) for v in b] for t, b in obj["bags"].items()}
        return TreeDecomposition(tree, bags)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError("malformed decomposition JSON: %s" % exc)


def model_to_obj(model, host_ref=""):
    return {
        "pattern": graph_to_obj(model.pattern),
        "host_ref": host_ref,
        "branch_sets": {str(v): sorted(model.branch_sets[v]) for v in sorted(model.branch_sets)},
    }


def model_from_obj(obj, host):
    from .minors import MinorModel
    try:
        pattern = graph_from_obj(obj["pattern"])
        bs = {int(v): [int(x) for x in xs] for v, xs in obj["branch_sets"].items()}
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise FormatError("malformed model JSON: %s" % exc)
    return MinorModel(pattern, host, bs)


def society_to_obj(soc):
    return {"graph": graph_to_obj(soc.graph), "omega": list(soc.omega)}


def society_from_obj(obj):
    from .societies import Society
    try:
        return Society(graph_from_obj(obj["graph"]), [int(v) for v in obj["omega"]])
    except (KeyError, TypeError) as exc:
        raise FormatError("malformed society JSON: %s" % exc)


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
