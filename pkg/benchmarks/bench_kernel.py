"""Timing comparison of the compiled and pure subset-scan kernels.

Runs the three kernel entry points (table construction, full-subset
defect scan, box enumeration) on chorded cycle graphs of growing size
and reports per-call times for every available implementation.

    python benchmarks/bench_kernel.py
    python benchmarks/bench_kernel.py --sizes 12,14,16 --repeat 5
"""

from __future__ import annotations

import argparse
import time
from fractions import Fraction
from math import lcm

from jacgraph import Multigraph, Polarization, StratumContext
from jacgraph._kernel import MODE_QUASISTABLE, implementations


def chorded_cycle(n: int) -> Multigraph:
    names = [f"c{i}" for i in range(n)]
    edges = [(names[i], names[(i + 1) % n]) for i in range(n)]
    for i in range(0, n // 2, 3):
        edges.append((names[i], names[i + n // 2]))
    return Multigraph(names, edges)


def kernel_inputs(g: Multigraph, q: Polarization, basepoint):
    pos = {v: i for i, v in enumerate(g.vertices)}
    edges = [(pos[e.u], pos[e.v]) for e in g.edges]
    s_flags = [False] * g.num_edges
    scale = 2 * lcm(*(x.denominator for x in q.values))
    scaled_q = [int(x * scale) for x in q.values]
    ctx = StratumContext(g, q, basepoint)
    lo, hi = ctx.singleton_box()
    return edges, s_flags, scaled_q, scale, lo, hi, ctx.budget, pos[basepoint]


def best_of(repeat, fn, *args):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def impl_label(mod) -> str:
    return "compiled" if "speedups" in mod.__name__ else "pure"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="10,12,14", help="comma-separated vertex counts")
    parser.add_argument("--repeat", type=int, default=3, help="take the best of this many runs")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    mods = implementations()
    print(f"implementations: {', '.join(impl_label(m) for m in mods)}")
    header = f"{'n':>3} {'operation':<12}" + "".join(
        f"{impl_label(m):>12}" for m in mods
    )
    if len(mods) > 1:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for n in sizes:
        g = chorded_cycle(n)
        half = Fraction(1, 2)
        values = [half] * n
        if n % 2:
            values[-1] = Fraction(1)  # keep the total an integer
        q = Polarization(g, values)
        edges, s_flags, scaled_q, scale, lo, hi, budget, v0 = kernel_inputs(
            g, q, g.vertices[0]
        )
        d = list(range(n))
        d[-1] = budget - sum(d[:-1])

        rows = {
            "tables": [],
            "defect scan": [],
            "enumerate": [],
        }
        counts = None
        for mod in mods:
            t_build, tables = best_of(
                args.repeat, mod.build_tables, n, edges, s_flags, scaled_q, scale
            )
            rows["tables"].append(t_build)
            t_scan, _ = best_of(args.repeat, mod.defect_scan, tables, d, v0)
            rows["defect scan"].append(t_scan)
            t_enum, found = best_of(
                args.repeat,
                mod.box_enumerate,
                tables,
                v0,
                budget,
                lo,
                hi,
                MODE_QUASISTABLE,
            )
            rows["enumerate"].append(t_enum)
            if counts is None:
                counts = len(found)
            elif counts != len(found):
                raise SystemExit("implementations disagree on the enumeration")

        for op, times in rows.items():
            line = f"{n:>3} {op:<12}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
            if len(times) > 1:
                line += f"{times[-1] / times[0]:>9.1f}x"
            print(line)
        print(f"    ({counts} quasistable multidegrees)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
