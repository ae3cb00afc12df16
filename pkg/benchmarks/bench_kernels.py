"""Time the compiled kernels against their pure-Python twins.

Run from the repository root after an editable install::

    python benchmarks/bench_kernels.py [--repeat 5]

Each workload is run through every importable backend; outputs are checked
for equality before timings are reported.
"""

from __future__ import annotations

import argparse
import random
import time

from lefrees.complex import Graph, independence_complex, pure_part, whisker
from lefrees.kernels import available_backends
from lefrees.lefschetz import multiplication_matrix
from lefrees.monomial import facet_ideal, minimal_vertex_covers


def _workloads():
    rng = random.Random(12345)
    p = 2147483647

    mats = [[[rng.randint(-9, 9) for _ in range(60)] for _ in range(60)] for _ in range(10)]
    delta = independence_complex(whisker(Graph.path(5)))
    big = multiplication_matrix(delta, 2, 1).tolist()

    def rank_random(mod):
        return [mod.rank_mod_p(m, 60, p) for m in mats]

    def rank_lefschetz(mod):
        return mod.rank_mod_p(big, len(big[0]), p)

    c = independence_complex(whisker(Graph.path(4)))
    edge_ideal_c = facet_ideal(pure_part(c, 1))
    covers = minimal_vertex_covers(edge_ideal_c)
    tri_ideal = facet_ideal(pure_part(c, 2))
    tri_covers = minimal_vertex_covers(tri_ideal)

    def symbolic_m3(mod):
        return mod.symbolic_power_gens(c.n, covers, 3)

    def symbolic_tri_m4(mod):
        return mod.symbolic_power_gens(c.n, tri_covers, 4)

    n = 8
    vecs = [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(3000)]

    def minimalize(mod):
        return mod.minimalize(vecs)

    return {
        "rank mod p, 10 random 60x60": rank_random,
        f"rank mod p, A_2->A_3 of Ind(w(P5)) ({len(big)}x{len(big[0])})": rank_lefschetz,
        "symbolic power m=3, edges of Ind(w(P4))": symbolic_m3,
        "symbolic power m=4, triangles of Ind(w(P4))": symbolic_tri_m4,
        "minimalize 3000 vectors in 8 variables": minimalize,
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the Python backend is timed")
    names = sorted(backends)
    print(f"{'workload':<58}" + "".join(f"{b:>12}" for b in names) + (f"{'speedup':>10}" if len(names) > 1 else ""))
    for label, fn in _workloads().items():
        results, times = {}, {}
        for b in names:
            best = float("inf")
            for _ in range(args.repeat):
                t = time.perf_counter()
                results[b] = fn(backends[b])
                best = min(best, time.perf_counter() - t)
            times[b] = best
        if len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {label!r}")
        row = f"{label:<58}" + "".join(f"{times[b] * 1e3:>10.1f}ms" for b in names)
        if len(names) > 1:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
