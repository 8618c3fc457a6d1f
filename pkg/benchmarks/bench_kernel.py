"""Compare the pure-Python and compiled sweep kernels.

Times the bracket of r-cables of a bundled diagram on each available
kernel and reports peak live pairing-state counts.  The two kernels
must return identical polynomials; this script asserts that while it
measures.

    python3 benchmarks/bench_kernel.py --name 6_2 --max-cable 4
"""

import argparse
import time

from skeinkit._kernel import available_kernels, compile_plan, pick_kernel
from skeinkit.diagram import cable, catalog_lookup, plan_sweep


def peak_states(program):
    """Largest number of simultaneous pairing states during the sweep."""
    states = {b""}
    peak = 1
    for w0, closures, keep, rank in program:
        nxt = set()
        for key in states:
            for fresh in ((w0 + 1, w0, w0 + 3, w0 + 2),
                          (w0 + 3, w0 + 2, w0 + 1, w0)):
                p = list(key)
                p.extend(fresh)
                for i, j in closures:
                    x, y = p[i], p[j]
                    if x != j:
                        p[x] = y
                        p[y] = x
                nxt.add(bytes(rank[p[i]] for i in keep))
        states = nxt
        peak = max(peak, len(states))
    return peak


def bench_once(kernel, program, repeats):
    best = None
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = kernel.run(program)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--name", default="6_2", help="catalog entry to cable")
    ap.add_argument("--max-cable", type=int, default=4)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    kernels = {k: pick_kernel(k) for k in available_kernels()}
    base = catalog_lookup(args.name)
    print(f"kernels: {', '.join(kernels)}")
    print(f"{'cable':>5} {'crossings':>9} {'width':>5} {'states':>9} "
          + " ".join(f"{k + ' (s)':>10}" for k in kernels)
          + ("   speedup" if len(kernels) > 1 else ""))

    for r in range(1, args.max_cable + 1):
        pd = cable(base, r)
        plan = plan_sweep(pd, max_width=200)
        program = compile_plan(plan)
        peak = peak_states(program)
        times = {}
        results = {}
        reps = args.repeats if r < 4 else 1
        for kname, mod in kernels.items():
            times[kname], results[kname] = bench_once(mod, program, reps)
        vals = list(results.values())
        assert all(v == vals[0] for v in vals), "kernel outputs differ"
        row = (f"{r:>5} {len(pd.crossings):>9} {plan.max_width:>5} "
               f"{peak:>9} "
               + " ".join(f"{times[k]:>10.4f}" for k in kernels))
        if "c" in times and "py" in times and times["c"] > 0:
            row += f"   {times['py'] / times['c']:>6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
