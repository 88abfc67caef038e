"""Command-line entry point.

Exit codes: 0 success or valid, 1 invalid or verification failed, 2 malformed
input, 3 precondition violated, 4 resource cap exceeded.
"""

import argparse
import json
import sys
from fractions import Fraction

from .graph import CapExceeded, GraphError
from .grids import SpecError, elementary_wall
from .io import (
    FormatError, dumps, from_graph6, graph_from_obj, graph_to_obj, labels_sidecar,
    society_from_obj, td_from_obj, to_dot, to_graph6,
)
from .minors import MinorModel, verify_minor_model
from .specstrings import SpecParseError, as_mixed, dyck_to_string, mixed_to_string, parse_spec

EXIT_OK, EXIT_INVALID, EXIT_MALFORMED, EXIT_PRECONDITION, EXIT_CAP = 0, 1, 2, 3, 4


class Malformed(Exception):
    pass


def _emit(obj, out=None):
    text = dumps(obj)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, ValueError) as exc:
        raise Malformed("cannot read JSON from %s: %s" % (path, exc))


def _load_graph(args):
    if getattr(args, "spec", None):
        return parse_spec(args.spec).build()
    if not args.graph:
        raise Malformed("give --graph or --spec")
    try:
        with open(args.graph) as fh:
            text = fh.read()
    except OSError as exc:
        raise Malformed(str(exc))
    if text.lstrip().startswith("{"):
        try:
            return graph_from_obj(json.loads(text))
        except ValueError as exc:
            raise Malformed(str(exc))
    return from_graph6(text)


def _vertex_set(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise Malformed("bad vertex list %r" % text)


def _report(ok, **extra):
    obj = {"valid": bool(ok)}
    obj.update(extra)
    _emit(obj)
    return EXIT_OK if ok else EXIT_INVALID


# gen

def cmd_gen(args):
    fs = parse_spec(args.spec)
    G = fs.build()
    if args.format == "graph6":
        sys.stdout.write(to_graph6(G) + "\n")
    elif args.format == "dot":
        sys.stdout.write(to_dot(G))
    else:
        _emit({"spec": fs.format(), "graph": graph_to_obj(G)})
    if args.labels:
        with open(args.labels, "w") as fh:
            fh.write(dumps(labels_sidecar(G)) + "\n")
    return EXIT_OK


# transform

def certificate_obj(model, pattern_spec, host_spec):
    return {
        "pattern": pattern_spec,
        "host": host_spec,
        "branch_sets": {str(v): model.branch_sets[v] for v in sorted(model.branch_sets)},
    }


def cmd_transform(args):
    from .transforms import (
        MERGE_FACTOR, SWAP_FACTOR, merge_three_crosscaps, normalize_to_dyck,
        split_handle_to_crosscaps, swap_handle_crosscap,
    )
    source = as_mixed(parse_spec(args.spec))
    if args.lemma == "normalize":
        k = args.k if args.k is not None else 3
        dyck, model, steps = normalize_to_dyck(source, k)
        target_str = dyck_to_string(dyck)
        pattern_str = mixed_to_string(dyck.to_mixed())
    else:
        factor = SWAP_FACTOR if args.lemma == "swap" else MERGE_FACTOR
        if args.k is not None and args.k * factor != source.k:
            raise SpecError("source order %d is not %d * %d" % (source.k, factor, args.k))
        if args.lemma == "swap":
            if args.pos is None:
                raise Malformed("--pos is required for swap")
            target, model, step = swap_handle_crosscap(source, args.pos)
        elif args.lemma == "merge":
            target, model, step = merge_three_crosscaps(source, args.pos)
        else:
            if args.pos is None:
                raise Malformed("--pos is required for split")
            target, model, step = split_handle_to_crosscaps(source, args.pos)
        steps = [step]
        target_str = pattern_str = mixed_to_string(target)
    verdict = verify_minor_model(model)
    if not verdict:
        sys.stderr.write("self-check failed: %r\n" % verdict)
        return EXIT_INVALID
    _emit({
        "plan": [s.as_dict() for s in steps],
        "target_spec": target_str,
        "certificate": certificate_obj(model, pattern_str, mixed_to_string(source)),
    }, args.out)
    return EXIT_OK


# verify

def _graph_from_ref(ref):
    if isinstance(ref, str):
        return parse_spec(ref).build()
    return graph_from_obj(ref)


def cmd_verify(args):
    obj = _load_json(args.model)
    if "certificate" in obj:
        obj = obj["certificate"]
    try:
        pattern = _graph_from_ref(obj["pattern"])
        if args.host:
            host = _load_graph(argparse.Namespace(graph=args.host, spec=None))
        else:
            host = _graph_from_ref(obj["host"])
        bs = {int(v): [int(x) for x in xs] for v, xs in obj["branch_sets"].items()}
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        if isinstance(exc, (SpecError, GraphError)):
            raise
        raise Malformed("malformed certificate: %s" % exc)
    verdict = verify_minor_model(MinorModel(pattern, host, bs))
    return _report(verdict.ok, reason=verdict.reason, witness=verdict.witness)


# society

def cmd_society(args):
    from . import societies as soc_mod
    obj = _load_json(args.society)
    soc = society_from_obj(obj)
    if args.action == "depth":
        _emit({"depth": soc_mod.depth(soc)})
        return EXIT_OK
    if args.action == "cross":
        w = soc_mod.has_cross(soc)
        disk = soc_mod.disk_rendition_exists(soc)
        _emit({"cross": None if w is None else [list(p) for p in w], "disk_rendition": disk})
        return EXIT_OK
    if args.action == "lindec":
        if args.theta is None:
            raise Malformed("--theta is required")
        res = soc_mod.linear_decomposition(soc, args.theta)
        if isinstance(res, soc_mod.LinearDecomposition):
            _emit({"decomposition": res.as_dict()})
            return EXIT_OK
        _emit({"transaction": [list(p) for p in res.linkage], "order": res.order,
               "A": res.A, "B": res.B})
        return EXIT_INVALID
    if args.action == "classify":
        if not args.paths:
            raise Malformed("--paths is required")
        paths = _load_json(args.paths)
        res = soc_mod.classify_transaction([tuple(p) for p in paths], soc.omega)
        _emit(res.as_dict())
        return EXIT_OK
    raise Malformed("unknown society action")


# tangle

def cmd_tangle(args):
    from . import tangles as tg
    G = _load_graph(args)
    alpha = Fraction(args.alpha)
    if args.action == "stronglinked":
        S = _vertex_set(args.set)
        w = tg.strong_link_witness(G, S)
        if w is None:
            return _report(True)
        return _report(False, witness={"S1": sorted(w[0]), "S2": sorted(w[1]),
                                       "A": sorted(w[2]), "B": sorted(w[3])})
    if args.action == "sfree":
        S = _vertex_set(args.set)
        if args.free:
            F = _vertex_set(args.free)
        else:
            if args.k is None:
                raise Malformed("give --free or --k")
            F = sorted(tg.build_S_free_set(G, S, alpha, args.k))
        w = tg.S_free_witness(G, S, F, alpha)
        if w is None:
            return _report(True, free_set=sorted(F))
        return _report(False, free_set=sorted(F), witness=[sorted(w.A), sorted(w.B)])
    if args.action == "growwall":
        S = _vertex_set(args.set) if args.set else list(range(G.n))
        if args.k is None:
            raise Malformed("--k is required")
        res = tg.grow_wall(G, S, args.k, alpha)
        _emit({"rows": res.wall.rows, "columns": res.wall.columns,
               "free_set": sorted(res.free_set), "linkage": [list(p) for p in res.linkage],
               "deleted_edges": [list(e) for e in res.deleted_edges],
               "truncation": res.truncation})
        return EXIT_OK
    if args.action == "axioms":
        if args.free:
            oracle = tg.oracle_from_free_set(_vertex_set(args.free))
        elif args.set:
            S = _vertex_set(args.set)
            q = args.q if args.q is not None else tg.well_linked_order(G, S, alpha)
            oracle = tg.oracle_from_well_linked(S, q, alpha)
        elif args.spec and args.spec.startswith("wall:"):
            oracle = tg.oracle_from_wall(elementary_wall(parse_spec(args.spec).get("k")))
        elif args.spec and args.spec.startswith("dyckwall:"):
            oracle = tg.oracle_from_dyck_wall(G)
        else:
            raise Malformed("give --free, --set, or a wall:/dyckwall: --spec")
        rep = tg.check_tangle_axioms(oracle, G, cap=G.n)
        return _report(rep.ok, reason=rep.reason, witness=rep.witness, order=oracle.order)
    raise Malformed("unknown tangle action")


# td

def cmd_td(args):
    from . import treedec
    G = _load_graph(args)
    if args.action == "width":
        tw, td = treedec.exact_treewidth(G, with_decomposition=True)
        from .io import td_to_obj
        _emit({"treewidth": tw, "decomposition": td_to_obj(td)})
        return EXIT_OK
    if not args.td:
        raise Malformed("--td is required")
    td = td_from_obj(_load_json(args.td))
    if args.action == "validate":
        rep = treedec.validate_tree_decomposition(G, td)
        return _report(rep.ok, reason=rep.reason, witness=rep.witness,
                       width=td.width if rep.ok else None,
                       adhesion=td.adhesion if rep.ok else None)
    if args.action == "torso":
        if args.node is None:
            raise Malformed("--node is required")
        H, old = treedec.torso(G, td, args.node)
        _emit({"torso": graph_to_obj(H, with_labels=False), "vertices": old})
        return EXIT_OK
    raise Malformed("unknown td action")


def build_parser():
    p = argparse.ArgumentParser(prog="dyckminors", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a grid, wall or cylinder")
    g.add_argument("spec")
    g.add_argument("--format", choices=["graph6", "dot", "json"], default="json")
    g.add_argument("--labels", help="write the (ring, position) label sidecar here")
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("transform", help="emit a verified minor certificate")
    t.add_argument("--lemma", choices=["swap", "merge", "split", "normalize"], required=True)
    t.add_argument("--spec", required=True, help="source grid, msg:... or dyck:...")
    t.add_argument("--k", type=int, help="target order")
    t.add_argument("--pos", type=int)
    t.add_argument("--out")
    t.set_defaults(func=cmd_transform)

    v = sub.add_parser("verify", help="re-check a stored certificate")
    v.add_argument("--model", required=True)
    v.add_argument("--host", help="host graph file when the certificate names none")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("society", help="society depth, crosses and decompositions")
    s.add_argument("action", choices=["depth", "cross", "lindec", "classify"])
    s.add_argument("--society", required=True)
    s.add_argument("--theta", type=int)
    s.add_argument("--paths")
    s.set_defaults(func=cmd_society)

    tg = sub.add_parser("tangle", help="well-linked sets, free sets and walls")
    tg.add_argument("action", choices=["sfree", "stronglinked", "growwall", "axioms"])
    tg.add_argument("--graph")
    tg.add_argument("--spec")
    tg.add_argument("--set", help="comma separated vertex ids")
    tg.add_argument("--free", help="comma separated vertex ids")
    tg.add_argument("--k", type=int)
    tg.add_argument("--q", type=int)
    tg.add_argument("--alpha", default="2/3")
    tg.set_defaults(func=cmd_tangle)

    d = sub.add_parser("td", help="tree decompositions")
    d.add_argument("action", choices=["width", "validate", "torso"])
    d.add_argument("--graph")
    d.add_argument("--spec")
    d.add_argument("--td")
    d.add_argument("--node")
    d.set_defaults(func=cmd_td)
    return p


def main(argv=None):
    from .tangles import InconsistentState, OrientationError, PreconditionError, SearchExhausted
    from .transforms import RoutingError, TransformError
    from .societies import SocietyError
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (SpecParseError, FormatError, Malformed) as exc:
        sys.stderr.write("malformed input: %s\n" % exc)
        return EXIT_MALFORMED
    except CapExceeded as exc:
        sys.stderr.write("resource cap: %s\n" % exc)
        return EXIT_CAP
    except (RoutingError, InconsistentState) as exc:
        sys.stderr.write("verification failed: %s\n" % exc)
        return EXIT_INVALID
    except (SpecError, GraphError, TransformError, PreconditionError, SocietyError,
            OrientationError, SearchExhausted, KeyError) as exc:
        sys.stderr.write("precondition violated: %s\n" % exc)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
