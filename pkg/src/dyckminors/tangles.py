"""Well-linked sets, free sets, strong linkedness, tangle oracles and wall growing.

A tangle of order k orients every separation of order < k by naming its big
side.  Oracles below compute the big side on demand from a small object (a
well-linked set, a free set, a wall) instead of storing the orientation.
All exhaustive checks enumerate separations with separations.py and are only
meant for tiny graphs.
"""

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .flows import min_vertex_cut, separation_from_cut
from .graph import CapExceeded, Linkage, Separation, is_separation
from .grids import WallStructure, elementary_wall
from .minors import find_minor_bruteforce, subdivision_from_model
from .separations import enumerate_separations
from .treedec import Report, exact_treewidth, treewidth_at_most

ALPHA = Fraction(2, 3)
SUBSET_CAP = int(os.environ.get("DYCKMINORS_SUBSET_CAP", "2000000"))
STRONG_CAP = int(os.environ.get("DYCKMINORS_STRONG_CAP", "16"))


class OrientationError(ValueError):
    """Neither side of a separation qualifies as the big side."""


class InconsistentState(RuntimeError):
    """A construction reached a state its precondition rules out."""


class PreconditionError(ValueError):
    pass


class SearchExhausted(RuntimeError):
    pass


def _frac(alpha):
    return Fraction(alpha).limit_denominator(10 ** 6) if not isinstance(alpha, Fraction) else alpha


def _small_subsets(n, size_max):
    """All subsets of size <= size_max, smallest first; the cap is checked per size."""
    total = 0
    for s in range(size_max + 1):
        total += _binom(n, s)
        if total > SUBSET_CAP:
            raise CapExceeded("%d candidate sets exceed cap %d" % (total, SUBSET_CAP))
        yield from itertools.combinations(range(n), s)


def _binom(n, r):
    if r < 0 or r > n:
        return 0
    out = 1
    for i in range(r):
        out = out * (n - i) // (i + 1)
    return out


# well-linked sets

def is_balanced_separator(G, S, X, alpha=ALPHA):
    """Every component of G - X holds at most alpha|S| vertices of S."""
    alpha = _frac(alpha)
    S = set(S)
    X = set(X)
    for comp in G.components([v for v in range(G.n) if v not in X]):
        if len(S & set(comp)) > alpha * len(S):
            return False
    return True


def balanced_separator_witness(G, S, q, alpha=ALPHA):
    """Smallest-first search for an alpha-balanced separator of size <= q."""
    for X in _small_subsets(G.n, min(q, G.n)):
        if is_balanced_separator(G, S, X, alpha):
            return frozenset(X)
    return None


def is_well_linked(G, S, q, alpha=ALPHA):
    return balanced_separator_witness(G, S, q, alpha) is None


def well_linked_order(G, S, alpha=ALPHA, limit=None):
    """Largest q such that S is (q, alpha)-well-linked (-1 when not even for q = 0)."""
    limit = G.n if limit is None else limit
    q = -1
    for X in _small_subsets(G.n, min(limit, G.n)):
        if is_balanced_separator(G, S, X, alpha):
            return len(X) - 1
        q = len(X)
    return q


@dataclass(frozen=True)
class WellLinkedWitness:
    S: frozenset
    q: int
    alpha: Fraction = ALPHA
    checked: bool = False

    @classmethod
    def verified(cls, G, S, q, alpha=ALPHA):
        if not is_well_linked(G, S, q, alpha):
            raise PreconditionError("S is not (%d, %s)-well-linked" % (q, alpha))
        return cls(frozenset(S), q, _frac(alpha), True)


# free sets

def _min_side(G, Z, F):
    """Smallest A with Z + F contained in A for a separation with separator Z."""
    Z = set(Z)
    A = set(Z)
    for comp in G.components([v for v in range(G.n) if v not in Z]):
        if set(comp) & F:
            A.update(comp)
    return A


def S_free_witness(G, S, F, alpha=ALPHA):
    """A separation of order < |F| with F on a side holding at most alpha|S| of S.

    For a fixed separator Z the side containing F is smallest when it takes
    only the components meeting F, so searching separators suffices.
    """
    alpha = _frac(alpha)
    S = set(S)
    F = set(F)
    V = set(range(G.n))
    for Z in _small_subsets(G.n, len(F) - 1):
        A = _min_side(G, Z, F)
        if len(A & S) <= alpha * len(S):
            return Separation(A, (V - A) | set(Z))
    return None


def is_S_free(G, S, F, alpha=ALPHA):
    return S_free_witness(G, S, F, alpha) is None


def _majority_component(G, S, alpha):
    for comp in G.components():
        if len(set(comp) & S) > alpha * len(S):
            return comp
    return None


def build_S_free_set(G, S, alpha=ALPHA, k=2, check=True):
    """An S-free set of size max(k - 1, 1) grown one vertex at a time.

    F_0 is the lowest vertex of the component holding a majority of S.  Given
    F_i, start from (F_i, V), push the separation towards S while keeping
    order <= i + 1 and an S-majority on the B side until |B| is locally
    minimal, and add the lowest vertex of B - A.  With ``check`` every F_i is
    re-verified with is_S_free; a failure means S was not (k, alpha)-well-linked.
    """
    alpha = _frac(alpha)
    S = set(S)
    if k < 1:
        raise PreconditionError("k must be positive")
    comp = _majority_component(G, S, alpha)
    if comp is None:
        raise InconsistentState("no component holds more than alpha|S| of S")
    F = [min(comp)]
    V = frozenset(range(G.n))
    while len(F) < k - 1:
        i = len(F) - 1
        A, B = set(F), set(V)
        while True:
            best = None
            for Z in itertools.combinations(sorted(B), i + 1):
                Zs = set(Z)
                A2 = _min_side(G, Zs, (A - Zs) | set(F))
                A2 |= A
                B2 = (V - A2) | Zs
                if not is_separation(G, A2, B2) or len(B2) >= len(B):
                    continue
                if len(B2 & S) <= alpha * len(S):
                    continue
                if best is None or (len(B2), sorted(B2)) < (len(best[1]), sorted(best[1])):
                    best = (A2, B2)
            if best is None:
                break
            A, B = best
        rest = sorted(B - A)
        if not rest:
            raise InconsistentState("no vertex left in B - A while growing F")
        F.append(rest[0])
        if check:
            w = S_free_witness(G, S, F, alpha)
            if w is not None:
                raise InconsistentState("F = %r is not S-free: %r" % (sorted(F), w))
    return frozenset(F)


# strong linkedness

def strong_link_witness(G, S):
    """(S1, S2, A, B) with a separation of order < min(|S1|, |S2|), or None."""
    S = sorted(set(S))
    if len(S) > STRONG_CAP:
        raise CapExceeded("strong linkedness: |S| = %d exceeds cap %d" % (len(S), STRONG_CAP))
    if len(S) < 2:
        return None
    first, rest = S[0], S[1:]
    for mask in range(1 << len(rest)):
        S1 = {first} | {rest[i] for i in range(len(rest)) if (mask >> i) & 1}
        S2 = set(S) - S1
        if not S2:
            continue
        p = min(len(S1), len(S2))
        cut, link = min_vertex_cut(G, S1, S2, limit=p)
        if len(link) < p:
            A, B = separation_from_cut(G, S1, cut)
            return frozenset(S1), frozenset(S2), frozenset(A), frozenset(B)
    return None


def is_strongly_linked(G, S):
    return strong_link_witness(G, S) is None


# tangle oracles

class TangleOracle:
    """Orientation of all separations of order < ``order`` via a big-side rule.

    ``rule(A, B)`` says whether B is the big side of (A, B).
    """

    def __init__(self, order, rule, provenance):
        self.order = order
        self._rule = rule
        self.provenance = provenance

    def big_side(self, A, B):
        A, B = frozenset(A), frozenset(B)
        if len(A & B) >= self.order:
            raise OrientationError("separation of order %d is outside a tangle of order %d"
                                   % (len(A & B), self.order))
        b_big = self._rule(A, B)
        a_big = self._rule(B, A)
        if a_big == b_big:
            raise OrientationError("%s side for separation (%s, %s)"
                                   % ("no big" if not a_big else "two big", sorted(A), sorted(B)))
        return B if b_big else A

    def contains(self, A, B):
        """(A, B) belongs to the tangle, i.e. B is the big side."""
        return self.big_side(A, B) == frozenset(B)

    def __repr__(self):
        return "TangleOracle(order=%d, %s)" % (self.order, self.provenance[0])


def oracle_from_well_linked(S, q, alpha=ALPHA):
    """T_S of order q + 1: B is big iff |S & B| > alpha|S|."""
    S = frozenset(S)
    alpha = _frac(alpha)

    def rule(A, B):
        return len(S & B) > alpha * len(S)
    return TangleOracle(q + 1, rule, ("well_linked", sorted(S), q, str(alpha)))


def oracle_from_free_set(F):
    """T_F of order k for |F| = 3k: B is big iff |B & F| > 2k."""
    F = frozenset(F)
    if len(F) % 3 or not F:
        raise PreconditionError("|F| = %d is not a positive multiple of 3" % len(F))
    k = len(F) // 3

    def rule(A, B):
        return len(B & F) > 2 * k
    return TangleOracle(k, rule, ("free_set", sorted(F)))


def oracle_from_wall(W):
    """T_W: B is big iff B - A contains a whole row and a whole column of W."""
    rows = [frozenset(r) for r in W.rows]
    cols = [frozenset(c) for c in W.columns]

    def rule(A, B):
        priv = B - A
        return any(r <= priv for r in rows) and any(c <= priv for c in cols)
    return TangleOracle(W.order, rule, ("wall", W.order))


def dyck_wall_cycles_and_columns(D):
    """Ring cycles and annulus-wall columns of a labelled Dyck-wall graph."""
    t = max(lab[0] for lab in D.labels.values())
    n = max(lab[1] for lab in D.labels.values())
    by = {lab: v for v, lab in D.labels.items()}
    cycles = [frozenset(by[(i, j)] for j in range(1, n + 1)) for i in range(1, t + 1)]
    columns = [frozenset(by[(i, j)] for i in range(1, t + 1) for j in (2 * c - 1, 2 * c))
               for c in range(1, n // 2 + 1)]
    return t, cycles, columns


def oracle_from_dyck_wall(D):
    """T_D: B is big iff B - A contains a whole cycle and a whole column."""
    t, cycles, columns = dyck_wall_cycles_and_columns(D)

    def rule(A, B):
        priv = B - A
        return any(c <= priv for c in cycles) and any(c <= priv for c in columns)
    return TangleOracle(t, rule, ("dyck_wall", t))


def _side_mask(G, A):
    m = 0
    for v in A:
        m |= 1 << v
    for idx, (u, v) in enumerate(G.sorted_edges()):
        if u in A and v in A:
            m |= 1 << (G.n + idx)
    return m


def check_tangle_axioms(oracle, G, cap=None):
    """Every separation of order < order is oriented, and no three small sides cover G."""
    small = set()
    for sep in enumerate_separations(G, oracle.order, cap=cap, include_improper=True):
        try:
            big = oracle.big_side(sep.A, sep.B)
            big2 = oracle.big_side(sep.B, sep.A)
        except OrientationError as exc:
            return Report(False, "orientation undefined", [sorted(sep.A), sorted(sep.B), str(exc)])
        if big != big2:
            return Report(False, "orientation not antisymmetric", [sorted(sep.A), sorted(sep.B)])
        small.add(sep.A if big == sep.B else sep.B)
    full = (1 << (G.n + G.num_edges())) - 1
    masks = {}
    for A in small:
        masks.setdefault(_side_mask(G, A), A)
    maximal = [m for m in masks if not any(m != o and m & o == m for o in masks)]
    for a, b in itertools.combinations_with_replacement(maximal, 2):
        missing = full & ~(a | b)
        for c in maximal:
            if missing & c == missing:
                return Report(False, "three small sides cover G",
                              [sorted(masks[a]), sorted(masks[b]), sorted(masks[c])])
    return Report(True)


def is_truncation(inner, outer, G, cap=None):
    """Every separation oriented by ``inner`` is oriented the same way by ``outer``."""
    if inner.order > outer.order:
        raise PreconditionError("inner order %d exceeds outer order %d" % (inner.order, outer.order))
    for sep in enumerate_separations(G, inner.order, cap=cap, include_improper=True):
        try:
            a = inner.big_side(sep.A, sep.B)
            b = outer.big_side(sep.A, sep.B)
        except OrientationError as exc:
            return Report(False, "orientation undefined", [sorted(sep.A), sorted(sep.B), str(exc)])
        if a != b:
            return Report(False, "orientations differ", [sorted(sep.A), sorted(sep.B)])
    return Report(True)


# push or delete

@dataclass
class Paths:
    linkage: Linkage


@dataclass
class Pushed:
    separation: Separation


@dataclass
class Deletable:
    edge: tuple


def push_or_delete(G, X, Y, k, sep=None):
    """One step of the push-or-delete alternative for strongly linked X, Y.

    Returns Paths (k disjoint X-Y paths), Pushed (a separation (A', B') of
    order < k with X in A', |Y & B'| >= k, A in A' and B' strictly inside B)
    or Deletable (an edge of G[B] whose removal keeps X strongly linked).
    """
    X, Y = frozenset(X), frozenset(Y)
    if len(X) < k or len(Y) < 3 * k:
        raise PreconditionError("need |X| >= k and |Y| >= 3k")
    cut, link = min_vertex_cut(G, X, Y, limit=k)
    if len(link) >= k:
        return Paths(Linkage(list(link)[:k]))
    if sep is None:
        A, B = separation_from_cut(G, X, cut)
    else:
        A, B = set(sep.A), set(sep.B)
    A, B = frozenset(A), frozenset(B)
    if not is_separation(G, A, B) or len(A & B) >= k or not X <= A or len(Y & B) < k:
        raise PreconditionError("separation violates order < k, X in A or |Y & B| >= k")
    edges = [(u, v) for u, v in G.sorted_edges() if u in B and v in B]
    if not edges:
        raise PreconditionError("G[B] has no edges")
    for e in edges:
        H = G.remove_edges([e])
        w = strong_link_witness(H, X)
        if w is None:
            return Deletable(e)
        _, _, L, R = w
        x, y = e
        if x in R - L:
            x, y = y, x
        if not (x in L - R and y in R - L):
            raise PreconditionError("X is not strongly linked in G")
        for A2, B2 in ((A | L, (B & R) | {x}), (A | R, (B & L) | {y})):
            if (is_separation(G, A2, B2) and len(A2 & B2) < k and X <= A2
                    and len(Y & B2) >= k and B2 < B):
                return Pushed(Separation(A2, B2))
    raise InconsistentState("neither a push nor a deletable edge was found")


# treewidth window

def treewidth_window_search(G, t, state_cap=None):
    """Induced subgraph G' with t < tw(G') <= 2t by halving.

    Returns (subgraph, old_ids).  Halves are the lowest-id half of A.
    """
    V = list(range(G.n))
    if treewidth_at_most(G, t, state_cap) is not None:
        raise PreconditionError("tw(G) <= %d" % t)
    A, F = V, []

    def tw_le(vs, k):
        H, _ = G.induced(vs)
        return treewidth_at_most(H, k, state_cap) is not None

    # moving half of A into F leaves A + F unchanged, so the stopping test
    # only has to be redone after A is cut down
    done = tw_le(A + F, 2 * t)
    while not done:
        if not A:
            raise InconsistentState("A ran empty while tw(G[A + F]) > 2t")
        half = sorted(A)[: (len(A) + 1) // 2]
        if tw_le(F + half, 2 * t):
            F = sorted(F + half)
            A = sorted(set(A) - set(half))
        elif len(A) == 1:
            # tw(G[F + v]) > 2t and one vertex adds at most 1, so 2t <= tw(G[F]) <= 2t
            return G.induced(F)
        else:
            A = half
            done = tw_le(A + F, 2 * t)
    return G.induced(sorted(A + F))


# walls inside a host

def wall_from_model(M, W):
    """Host WallStructure from a model of the elementary wall ``W``."""
    center, paths = subdivision_from_model(M)
    G = M.host

    def trace(seq):
        out = [center[seq[0]]]
        for a, b in zip(seq, seq[1:]):
            p = paths[(a, b)] if a < b else paths[(b, a)][::-1]
            out += p[1:]
        return out
    rows = [trace(r) for r in W.rows]
    cols = [trace(c) for c in W.columns]
    perim = set()
    for a, b in W.graph.sorted_edges():
        if a in W.perimeter and b in W.perimeter:
            perim.update(paths[(a, b)])
    ws = WallStructure(G, rows, cols, perim)
    ws.center = center
    return ws


def representative_set(W, column=0):
    """One vertex of the given column on every row (the row/column crossing)."""
    col = set(W.columns[column])
    out = []
    for r in W.rows:
        out.append(next(v for v in r if v in col))
    return frozenset(out)


def find_wall(G, k, cap_g=None):
    """A k-wall in G via exhaustive subgraph search for W_k, or None."""
    W = elementary_wall(k)
    cap_g = G.n if cap_g is None else cap_g
    M = find_minor_bruteforce(G, W.graph, cap_h=W.graph.n, cap_g=cap_g, max_branch=1)
    if M is None:
        M = find_minor_bruteforce(G, W.graph, cap_h=W.graph.n, cap_g=cap_g)
    if M is None:
        return None
    return wall_from_model(M, W)


@dataclass
class GrowWallResult:
    wall: WallStructure
    free_set: frozenset
    linkage: Linkage
    deleted_edges: list = field(default_factory=list)
    truncation: str = "unchecked"


def grow_wall(G, S, k, alpha=ALPHA, q=None, link_size=None, window_t=None,
              max_rounds=None, check_cap=None):
    """Toy version of growing a k-wall whose tangle is a truncation of T_S.

    Working constants: ``q`` is the well-linkedness order used for S (largest
    exhaustively verified value by default), the free set has size q - 1,
    ``link_size`` is the size of the linkage requested from F to the
    representative set of the first column (default min(|F|, k)), and
    ``window_t`` enables the treewidth-window restriction before the wall search.
    """
    alpha = _frac(alpha)
    S = frozenset(S)
    if q is None:
        q = well_linked_order(G, S, alpha)
    if q < 2:
        raise PreconditionError("S is not (2, alpha)-well-linked")
    if k >= q + 2:
        raise PreconditionError("T_S has order %d, too small for a %d-wall" % (q + 1, k))
    F = build_S_free_set(G, S, alpha, q)
    ell = min(len(F), k) if link_size is None else link_size
    max_rounds = G.num_edges() + 1 if max_rounds is None else max_rounds
    Gi = G
    deleted = []
    for _ in range(max_rounds):
        W = None
        if window_t is not None:
            try:
                sub, old = treewidth_window_search(Gi, window_t)
            except PreconditionError:
                sub = None
            if sub is not None:
                Wsub = find_wall(sub, k)
                if Wsub is not None:
                    W = WallStructure(Gi, [[old[v] for v in r] for r in Wsub.rows],
                                      [[old[v] for v in c] for c in Wsub.columns],
                                      [old[v] for v in Wsub.perimeter])
        if W is None:
            W = find_wall(Gi, k)
        if W is None:
            raise SearchExhausted("no %d-wall found" % k)
        X = representative_set(W, 0)
        cut, link = min_vertex_cut(Gi, F, X, limit=ell)
        if len(link) >= ell:
            W = WallStructure(G, W.rows, W.columns, W.perimeter)
            res = GrowWallResult(W, F, Linkage(list(link)[:ell]), deleted)
            n_cap = G.n if check_cap is None else check_cap
            if G.n <= n_cap:
                rep = is_truncation(oracle_from_wall(W), oracle_from_well_linked(S, q, alpha), G,
                                    cap=G.n)
                if not rep:
                    raise InconsistentState("wall tangle is not a truncation of T_S: %r" % rep)
                res.truncation = "verified"
            return res
        sep = None
        while True:
            out = push_or_delete(Gi, F, X, ell, sep)
            if isinstance(out, Pushed):
                sep = out.separation
                continue
            if isinstance(out, Deletable):
                Gi = Gi.remove_edges([out.edge])
                deleted.append(out.edge)
            break
    raise SearchExhausted("round limit reached")


def treewidth_bound_check(G, F, cap=None):
    """tw(G) >= |F| / 3 for a strongly linked F, confirmed by exact treewidth."""
    if len(F) % 3 or not F:
        raise PreconditionError("|F| must be a positive multiple of 3")
    w = strong_link_witness(G, F)
    if w is not None:
        return Report(False, "F is not strongly linked", [sorted(x) for x in w])
    k = len(F) // 3
    tw = exact_treewidth(G, cap)
    if tw < k:
        return Report(False, "treewidth below |F|/3", tw)
    return Report(True, witness=tw)
