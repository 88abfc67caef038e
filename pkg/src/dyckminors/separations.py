"""Exhaustive separation enumeration and the quasi-4-connectivity predicate."""

import itertools
import os

from .graph import CapExceeded, Separation

DEFAULT_CAP = int(os.environ.get("DYCKMINORS_SEP_CAP", "16"))


def _components_avoiding(G, Z):
    Z = set(Z)
    return G.components([v for v in range(G.n) if v not in Z])


def enumerate_separations(G, max_order, cap=None, include_improper=False):
    """Yield every separation of order < max_order once, up to swapping sides.

    A separator Z is chosen, and the components of G - Z are distributed
    between the two sides in all ways.  Improper separations (one side equal
    to V(G)) are skipped unless ``include_improper`` is set; tangles have to
    orient them too.  Each separation is yielded in normalized form.
    """
    cap = DEFAULT_CAP if cap is None else cap
    if G.n > cap:
        raise CapExceeded("enumerate_separations: %d vertices exceeds cap %d" % (G.n, cap))
    seen = set()
    V = frozenset(range(G.n))
    for size in range(min(max_order, G.n + 1)):
        for Z in itertools.combinations(range(G.n), size):
            Zs = frozenset(Z)
            comps = _components_avoiding(G, Zs)
            r = len(comps)
            for mask in range(1 << r):
                A = set(Zs)
                for i in range(r):
                    if (mask >> i) & 1:
                        A.update(comps[i])
                B = (V - A) | Zs
                sep = Separation(A, B).normalized()
                key = (sep.A, sep.B)
                if key in seen:
                    continue
                seen.add(key)
                if not include_improper and (sep.A == V or sep.B == V):
                    continue
                yield sep


def count_separations(G, max_order, **kw):
    return sum(1 for _ in enumerate_separations(G, max_order, **kw))


def is_quasi_4_connected(G, cap=None):
    """Every separation of order <= 3 has exactly one side with <= 1 private vertex."""
    for sep in enumerate_separations(G, 4, cap=cap):
        small_a = len(sep.A - sep.B) <= 1
        small_b = len(sep.B - sep.A) <= 1
        if small_a == small_b:
            return False
    return True


def quasi_4_witness(G, cap=None):
    for sep in enumerate_separations(G, 4, cap=cap):
        if (len(sep.A - sep.B) <= 1) == (len(sep.B - sep.A) <= 1):
            return sep
    return None
