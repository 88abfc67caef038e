"""Certificate-producing transformations between mixed surface grids.

Every transformation takes a source grid of order q*k and returns the target
grid of order k together with an explicit minor model of the target in the
source.  The construction has two layers.

Abstract layer (order q, one column per band of k host columns): each chord
pair of the target is realized by a path that starts on a column, drops to
ring 1, uses a chord, climbs to some height, runs along a ring, drops again,
uses the next chord, and so on, finally climbing up its end column.  The
pieces between two chords are called arcs.  For positions that are not
touched, the path is a single chord.  For the two (swap) or three
(merge/split) positions that change, the abstract paths are fixed tables
below; check_abstract_routing validates them before use.

Host layer: every abstract path is thickened into k parallel lanes.  Each
ring-1 abstract cell is a k x k block of the host, and lanes turn around
block corners as nested L-shapes, so a crosscap chord keeps the lane offset
while a handle chord and an arc both reverse it.  The target ring r is host
ring (q-1)k + r; the lower (q-1)k rings carry the lanes.
"""

from dataclasses import dataclass

from .grids import (
    DyckGridSpec, MixedSurfaceGridSpec, crosscap_chords, handle_chords,
    mixed_surface_grid, vid,
)
from .minors import MinorModel, compose_models, identity_model, verify_minor_model

SWAP_FACTOR = 9
MERGE_FACTOR = 18


class TransformError(ValueError):
    pass


class RoutingError(RuntimeError):
    """An abstract routing table is inconsistent (an internal bug)."""


# Abstract routings, in local abstract columns of the affected region.
# A path [p0, p1, ..., pm] uses chords (p0,p1), (p2,p3), ... and arcs
# (p1,p2), (p3,p4), ...; p0 and pm are its end columns.

# crosscap block at 1..36, handle block at 37..72 (q = 9)
SWAP_PATHS = [
    [41, 59],
    [50, 68],
    [69, 49, 42, 58, 51, 67, 60, 40, 17, 35, 38, 62, 65, 53, 56, 44, 47, 71],
    [70, 48, 43, 57, 52, 66, 61, 39, 18, 36, 37, 63, 64, 54, 55, 45, 46, 72],
]
SWAP_TERMINALS = [(41, 50, 59, 68), (69, 70, 71, 72)]

# three crosscap blocks at 1..72, 73..144, 145..216 (q = 18)
MERGE_PATHS = [
    [34, 70, 75, 111],
    [78, 114, 147, 183],
    [184, 148, 113, 77, 35, 71, 74, 110, 79, 115, 146, 182, 150, 186],
    [185, 149, 112, 76, 36, 72, 73, 109, 80, 116, 145, 181, 151, 187],
]
MERGE_TERMINALS = [(34, 78, 111, 183), (184, 185, 186, 187)]

# handle block at 1..72, crosscap block at 73..144 (q = 18)
SPLIT_PATHS = [
    [1, 54, 23, 68, 77, 113],
    [2, 53, 24, 67, 78, 114],
    [115, 79, 66, 25, 48, 7, 112, 76, 69, 22, 81, 117],
    [116, 80, 65, 26, 47, 8, 111, 75, 70, 21, 82, 118],
    [119, 83, 20, 71, 74, 110, 85, 121],
    [120, 84, 19, 72, 73, 109, 86, 122],
]
SPLIT_TERMINALS = [(1, 2, 113, 114), (115, 116, 117, 118), (119, 120, 121, 122)]


@dataclass(frozen=True)
class TransformStep:
    kind: str
    source_spec: MixedSurfaceGridSpec
    target_spec: MixedSurfaceGridSpec
    position: int
    blowup: int

    def as_dict(self):
        return {
            "kind": self.kind,
            "position": self.position,
            "blowup": self.blowup,
            "source": spec_dict(self.source_spec),
            "target": spec_dict(self.target_spec),
        }


def spec_dict(spec):
    return {"k": spec.k, "hdl": sorted(spec.hdl), "crscp": sorted(spec.crscp)}


def abstract_partner(spec, q):
    """Chord partner map on ring 1 of the order-q grid with the layout of ``spec``."""
    partner = {}
    for p in spec.hdl:
        for a, b in handle_chords(q, p):
            partner[a] = b
            partner[b] = a
    for p in spec.crscp:
        for a, b in crosscap_chords(q, p):
            partner[a] = b
            partner[b] = a
    return partner


def check_abstract_routing(paths, partner, kinds, max_depth, crosscap_pairs):
    """Validate abstract paths; returns the depth of every arc.

    kinds[i] is "X" or "H", the chord type that path i has to realize;
    crosscap_pairs holds both orientations of every crosscap chord.
    """
    used = set()
    arcs = []
    ends = set()
    for i, path in enumerate(paths):
        if len(path) % 2:
            raise RoutingError("path %d has odd length" % i)
        for x in path:
            if x in used:
                raise RoutingError("column %d used twice" % x)
            used.add(x)
        crossings = 0
        for a, b in zip(path[0::2], path[1::2]):
            if partner.get(a) != b:
                raise RoutingError("(%d, %d) is not a chord" % (a, b))
            if (a, b) in crosscap_pairs:
                crossings += 1
        for a, b in zip(path[1:-1:2], path[2:-1:2]):
            arcs.append((min(a, b), max(a, b)))
        ends.update((path[0], path[-1]))
        want = 1 if kinds[i] == "X" else 0
        if crossings % 2 != want:
            raise RoutingError("path %d realizes the wrong chord type" % i)
    for a, b in arcs:
        for e in ends:
            if a < e < b:
                raise RoutingError("arc (%d, %d) spans end column %d" % (a, b, e))
    for s in arcs:
        for t in arcs:
            if s < t:
                nested = (s[0] < t[0] and t[1] < s[1]) or (t[0] < s[0] and s[1] < t[1])
                apart = s[1] < t[0] or t[1] < s[0]
                if not (nested or apart):
                    raise RoutingError("arcs %r and %r cross" % (s, t))
    depth = {}
    for s in sorted(arcs, key=lambda a: a[1] - a[0]):
        inner = [depth[t] for t in depth if s[0] < t[0] and t[1] < s[1]]
        depth[s] = 1 + max(inner, default=0)
        if depth[s] > max_depth:
            raise RoutingError("arc %r needs depth %d > %d" % (s, depth[s], max_depth))
    return depth


def _crosscap_pair_set(spec, q):
    out = set()
    for p in spec.crscp:
        for a, b in crosscap_chords(q, p):
            out.add((a, b))
            out.add((b, a))
    return out


def _layout_terminals(spec, q, p_src):
    """Abstract terminal columns for an unchanged position of the source."""
    base = 4 * q * (p_src - 1)
    if p_src == 1:
        return tuple(base + x for x in (1, 2, 3, 4))
    if p_src in spec.crscp:
        return tuple(base + x for x in (1, 2, 2 * q + 1, 2 * q + 2))
    return tuple(base + x for x in (1, q + 1, 3 * q, 4 * q))


def _target_chord_cols(tspec, k):
    """Target ring-1 chord pairs (column pairs, 1-based) with their type."""
    out = []
    for p in tspec.hdl:
        out += [(a, b, "H") for a, b in handle_chords(k, p)]
    for p in tspec.crscp:
        out += [(a, b, "X") for a, b in crosscap_chords(k, p)]
    return out


def build_model(source, target, q, region_first, region_paths, region_terminals, target_special):
    """Assemble and verify the minor model of ``target`` in ``source``.

    region_first: first source position of the changed region.
    region_paths / region_terminals: local abstract routing for the region.
    target_special: target positions realized by the region, in order.
    """
    K = source.k
    if K % q:
        raise TransformError("source order %d is not divisible by %d" % (K, q))
    k = K // q
    if k != target.k:
        raise TransformError("target order mismatch")
    gs = source.h + source.c
    gt = target.h + target.c
    N = 4 * (gs + 1) * K
    L = K - k
    base = 4 * q * (region_first - 1)

    # abstract terminal columns of every target position
    shift = gs - gt
    terminals = {}
    for p in range(1, gt + 2):
        if p in target_special:
            terminals[p] = tuple(base + x for x in region_terminals[target_special.index(p)])
        else:
            p_src = p if p < target_special[0] else p + shift
            terminals[p] = _layout_terminals(source, q, p_src)
    flat = [x for p in range(1, gt + 2) for x in terminals[p]]
    if flat != sorted(flat) or len(set(flat)) != len(flat):
        raise RoutingError("terminal columns are not increasing")

    partner = abstract_partner(source, q)
    paths = [[base + x for x in path] for path in region_paths]
    kinds = []
    for path in paths:
        kinds.append(_path_kind(target, terminals, path[0], path[-1]))
    for p in range(2, gt + 2):
        if p in target_special:
            continue
        X = terminals[p]
        kind = "X" if p in target.crscp else "H"
        paths += [[X[0], X[2]], [X[1], X[3]]]
        kinds += [kind, kind]
    depth = check_abstract_routing(paths, partner, kinds, q - 2, _crosscap_pair_set(source, q))

    # target column -> host column
    nt = 4 * (gt + 1) * k

    def host_col(j):
        p = (j - 1) // (4 * k) + 1
        s = ((j - 1) % (4 * k)) // k
        t = (j - 1) % k + 1
        return (terminals[p][s] - 1) * k + t

    cols = [host_col(j) for j in range(1, nt + 1)]
    col_to_target = {c: j for j, c in enumerate(cols, start=1)}

    def hv(ring, col):
        return vid(ring, col, N)

    branch = {}
    for r in range(1, k + 1):
        for j in range(1, nt + 1):
            c = cols[j - 1]
            c_next = cols[j % nt]
            xs = []
            x = c
            while True:
                xs.append(hv(L + r, x))
                x = x % N + 1
                if x == c_next:
                    break
            branch[vid(r, j, nt)] = xs

    # host chord partners on ring 1
    host_partner = {}
    for p in source.hdl:
        for a, b in handle_chords(K, p):
            host_partner[a] = b
            host_partner[b] = a
    for p in source.crscp:
        for a, b in crosscap_chords(K, p):
            host_partner[a] = b
            host_partner[b] = a

    target_pairs = {}
    for a, b, _ in _target_chord_cols(target, k):
        target_pairs[a] = b
        target_pairs[b] = a

    for path in paths:
        for t in range(1, k + 1):
            c = (path[0] - 1) * k + t
            start = c
            lane = [hv(r, c) for r in range(L, 0, -1)]
            i = 0
            while True:
                c2 = host_partner[c]
                if (c2 - 1) // k + 1 != path[i + 1]:
                    raise RoutingError("chord from host column %d lands off its abstract column" % c)
                lane.append(hv(1, c2))
                if i + 2 >= len(path):
                    lane += [hv(r, c2) for r in range(2, L + 1)]
                    end = c2
                    break
                a, b = path[i + 1], path[i + 2]
                d = depth[(min(a, b), max(a, b))]
                u = c2 - (a - 1) * k
                s = k - u + 1 if b > a else u
                ring = d * k + s
                c3 = (b - 1) * k + (k - u + 1)
                lane += [hv(r, c2) for r in range(2, ring + 1)]
                step = 1 if c3 > c2 else -1
                lane += [hv(ring, x) for x in range(c2 + step, c3 + step, step)]
                lane += [hv(r, c3) for r in range(ring - 1, 0, -1)]
                c = c3
                i += 2
            js, je = col_to_target[start], col_to_target[end]
            if target_pairs.get(js) != je:
                raise RoutingError("lane joins target columns %d and %d, not a chord" % (js, je))
            branch[vid(1, js, nt)] = branch[vid(1, js, nt)] + lane

    host = mixed_surface_grid(source)
    pattern = mixed_surface_grid(target)
    model = MinorModel(pattern, host, branch)
    verdict = verify_minor_model(model)
    if not verdict:
        raise RoutingError("constructed certificate failed verification: %r" % verdict)
    return model


def _path_kind(target, terminals, a, b):
    for p, X in terminals.items():
        if a in X or b in X:
            if p in target.crscp:
                return "X"
            if p in target.hdl:
                return "H"
    raise RoutingError("path end %d is not a terminal column" % a)


# the three lemmas

def _check_order(spec, factor):
    if spec.k % factor or spec.k // factor < 3:
        raise TransformError("source order %d must be %d*k with k >= 3" % (spec.k, factor))
    return spec.k // factor


def swap_handle_crosscap(source, i):
    """Exchange the adjacent handle/crosscap pair at positions i, i+1.

    Returns (target_spec, model, step).
    """
    kinds = source.kinds()
    if i not in kinds or i + 1 not in kinds or kinds[i] == kinds[i + 1]:
        raise TransformError("positions %d, %d are not a handle/crosscap pair" % (i, i + 1))
    k = _check_order(source, SWAP_FACTOR)
    word = source.word()
    w = list(word)
    w[i - 2], w[i - 1] = w[i - 1], w[i - 2]
    target = MixedSurfaceGridSpec.from_word(k, "".join(w))
    if kinds[i] == "X":
        paths, terms, kind = SWAP_PATHS, SWAP_TERMINALS, "swap_left"
    else:
        def mirror(x):
            return 73 - x
        paths = [[mirror(x) for x in p] for p in SWAP_PATHS]
        terms = [tuple(sorted(mirror(x) for x in T)) for T in reversed(SWAP_TERMINALS)]
        kind = "swap_right"
    model = build_model(source, target, SWAP_FACTOR, i, paths, terms, [i, i + 1])
    return target, model, TransformStep(kind, source, target, i, SWAP_FACTOR)


def _crosscap_triples(spec):
    return [p for p in range(2, spec.h + spec.c) if {p, p + 1, p + 2} <= spec.crscp]


def merge_three_crosscaps(source, i=None):
    """Crosscaps at i, i+1, i+2 become a handle at i followed by a crosscap at i+1."""
    triples = _crosscap_triples(source)
    if i is None:
        if not triples:
            raise TransformError("no three consecutive crosscaps")
        if len(triples) > 1:
            raise TransformError("several crosscap triples %r; pass the position explicitly" % triples)
        i = triples[0]
    if i not in triples:
        raise TransformError("positions %d..%d are not three crosscaps" % (i, i + 2))
    k = _check_order(source, MERGE_FACTOR)
    word = source.word()
    w = word[: i - 2] + "HX" + word[i + 1:]
    target = MixedSurfaceGridSpec.from_word(k, w)
    model = build_model(source, target, MERGE_FACTOR, i, MERGE_PATHS, MERGE_TERMINALS, [i, i + 1])
    return target, model, TransformStep("merge3", source, target, i, MERGE_FACTOR)


def split_handle_to_crosscaps(source, i):
    """A handle at i followed by a crosscap at i+1 become three crosscaps."""
    kinds = source.kinds()
    if kinds.get(i) != "H" or kinds.get(i + 1) != "X":
        raise TransformError("need a handle at %d and a crosscap at %d" % (i, i + 1))
    k = _check_order(source, MERGE_FACTOR)
    word = source.word()
    w = word[: i - 2] + "XXX" + word[i:]
    target = MixedSurfaceGridSpec.from_word(k, w)
    model = build_model(source, target, MERGE_FACTOR, i, SPLIT_PATHS, SPLIT_TERMINALS,
                        [i, i + 1, i + 2])
    return target, model, TransformStep("split", source, target, i, MERGE_FACTOR)


# planning and composition

def dyck_target(h, c):
    """(h + h0, c0) from the normalization theorem; c = 0 is left as it is."""
    if c == 0:
        return h, 0
    h0 = -(-c // 2) - 1
    return h + h0, c - 2 * h0


def normalization_plan(word):
    """Steps (kind, position) turning ``word`` into handles-then-crosscaps with c0 <= 2."""
    w = list(word)
    steps = []
    while True:
        for p in range(len(w) - 1):
            if w[p] == "X" and w[p + 1] == "H":
                steps.append(("swap", p + 2))
                w[p], w[p + 1] = "H", "X"
                break
        else:
            break
    while w.count("X") > 2:
        p = w.index("X")
        steps.append(("merge", p + 2))
        w[p:p + 3] = ["H", "X"]
    return steps, "".join(w)


def plan_factor(steps):
    f = 1
    for kind, _ in steps:
        f *= SWAP_FACTOR if kind == "swap" else MERGE_FACTOR
    return f


def uniform_order_bound(g, k):
    """Source order demanded by the uniform bound: 162^(2g) * k."""
    return 162 ** (2 * g) * k


def _run(spec, kind, pos):
    if kind == "swap":
        return swap_handle_crosscap(spec, pos)
    if kind == "merge":
        return merge_three_crosscaps(spec, pos)
    if kind == "split":
        return split_handle_to_crosscaps(spec, pos)
    raise TransformError("unknown step kind %r" % kind)


def run_plan(source, plan):
    """Apply the steps in order; returns (final_spec, composed_model, steps)."""
    spec = source
    model = identity_model(mixed_surface_grid(source))
    done = []
    for kind, pos in plan:
        target, m, step = _run(spec, kind, pos)
        if target.euler_genus != spec.euler_genus:
            raise TransformError("genus changed by step %s" % kind)
        model = compose_models(m, model)
        if not verify_minor_model(model):
            raise RoutingError("composed certificate failed verification")
        done.append(step)
        spec = target
    return spec, model, done


def normalize_to_dyck(source, k_target):
    steps, word = normalization_plan(source.word())
    f = plan_factor(steps)
    if source.k != f * k_target:
        raise TransformError("plan needs source order %d * %d = %d, got %d"
                             % (f, k_target, f * k_target, source.k))
    final, model, done = run_plan(source, steps)
    h, c = dyck_target(source.h, source.c)
    dyck = DyckGridSpec(h, c, k_target)
    if final != dyck.to_mixed():
        raise RoutingError("normalization ended at %r, expected %r" % (final, dyck))
    return dyck, model, done


def dyck_contains_mixed(dyck, target):
    """Model of the mixed surface grid ``target`` inside the Dyck-grid ``dyck``."""
    if dyck.euler_genus != target.euler_genus:
        raise TransformError("Euler genus mismatch: %d vs %d" % (dyck.euler_genus, target.euler_genus))
    if dyck.c == 0 and target.c > 0:
        raise TransformError("an orientable Dyck-grid has no non-orientable grid as a minor "
                             "(D_t^(0,1) is not a minor of D_k^(t-1,0))")
    steps, word = normalization_plan(target.word())
    if dyck_target(target.h, target.c) != (dyck.h, dyck.c):
        raise TransformError("target normalizes to %r, not to the given Dyck-grid"
                             % (dyck_target(target.h, target.c),))
    f = plan_factor(steps)
    if dyck.k != f * target.k:
        raise TransformError("plan needs Dyck order %d * %d = %d, got %d"
                             % (f, target.k, f * target.k, dyck.k))
    reverse = []
    for kind, pos in reversed(steps):
        reverse.append(("split" if kind == "merge" else "swap", pos))
    final, model, done = run_plan(dyck.to_mixed(), reverse)
    if final != target:
        raise RoutingError("reverse plan ended at %r, expected %r" % (final, target))
    return model, done
