"""Compiled vs pure-Python kernels on representative workloads.

Run: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from dyckminors import _pykernels
from dyckminors.graph import grid_graph
from dyckminors.grids import MixedSurfaceGridSpec, mixed_surface_grid
from dyckminors.kernels import csr

try:
    from dyckminors import _ckernels
except ImportError:
    _ckernels = None


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def workloads():
    G = mixed_surface_grid(MixedSurfaceGridSpec.from_word(18, "HX"))
    ip, ix = csr(G)
    owner = [v % 97 for v in range(G.n)]
    yield "owner_components (n=%d)" % G.n, lambda k: k.owner_components(ip, ix, owner, 97)

    H = grid_graph(40, 40)
    hp, hx = csr(H)
    xm = [1 if v % 40 == 0 else 0 for v in range(H.n)]
    ym = [1 if v % 40 == 39 else 0 for v in range(H.n)]
    yield "vertex_flow (40x40 grid)", lambda k: k.vertex_flow(H.n, hp, hx, xm, ym, H.n)

    T = grid_graph(5, 5)
    adj = [sum(1 << w for w in T.adj[v]) for v in range(T.n)]
    yield "tw_decide (5x5 grid, k=4)", lambda k: k.tw_decide(T.n, adj, 4, 10 ** 7)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; only the pure-Python timings are shown")
    print("%-30s %12s %12s %8s" % ("kernel", "python [s]", "cython [s]", "speedup"))
    for name, run in workloads():
        tp, outp = timed(lambda: run(_pykernels), args.repeat)
        if _ckernels is None:
            print("%-30s %12.4f %12s %8s" % (name, tp, "-", "-"))
            continue
        tc, outc = timed(lambda: run(_ckernels), args.repeat)
        same = "" if outp == outc else "  (outputs differ!)"
        print("%-30s %12.4f %12.4f %7.1fx%s" % (name, tp, tc, tp / tc, same))


if __name__ == "__main__":
    main()
