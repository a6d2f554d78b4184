"""Numba loop kernels vs the pure-numpy fallback.

Kernel timings compare both variants in one process (the ``_loop`` and
``_np`` functions are importable side by side). The DFS has no vectorised
form, so its node rate is measured over a time-boxed run in two subprocesses,
one with RIF_DISABLE_JIT=1.

    python benchmarks/bench_kernels.py [--repeat 5] [--skip-dfs] [--dfs-seconds 3]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from rif import kernels
from rif._accel import HAVE_JIT
from rif.construct import brace_daykin, neq2k_construction, prop3_construction


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def families():
    return [
        ("brace_daykin(7)", brace_daykin(7)),
        ("neq2k(8)", neq2k_construction(8)),
        ("prop3(2,1)", prop3_construction(2, 1)),
    ]


def kernel_cases(fam):
    m, k, n = fam.masks, fam.k, fam.n
    probe = m[0]
    return [
        ("all_pairs_intersect", lambda: kernels.all_pairs_intersect_loop(m), lambda: kernels.all_pairs_intersect_np(m)),
        (
            "intersection_histogram",
            lambda: kernels.intersection_histogram_loop(m, k),
            lambda: kernels.intersection_histogram_np(m, k),
        ),
        ("degree_counts", lambda: kernels.degree_counts_loop(m, n), lambda: kernels.degree_counts_np(m, n)),
        (
            "meet_histogram",
            lambda: kernels.meet_histogram_loop(m, probe, k),
            lambda: kernels.meet_histogram_np(m, probe, k),
        ),
    ]


DFS_SNIPPET = """
from rif.errors import TimeLimitExceeded
from rif.search import dfs_search
dfs_search(7, 3, 14)  # warm up / compile
try:
    r = dfs_search({n}, {k}, {target}, time_limit={secs})
except TimeLimitExceeded as exc:
    r = exc.result
print(r.elapsed, r.explored_nodes)
"""


def dfs_rate(n, k, target, secs, disable_jit):
    """Nodes per second explored in a time-boxed DFS run."""
    env = dict(os.environ)
    env["RIF_DISABLE_JIT"] = "1" if disable_jit else "0"
    code = DFS_SNIPPET.format(n=n, k=k, target=target, secs=secs)
    out = subprocess.run([sys.executable, "-c", code], env=env, check=True, capture_output=True, text=True)
    elapsed, nodes = out.stdout.split()
    return int(nodes) / float(elapsed)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-dfs", action="store_true")
    ap.add_argument("--dfs-seconds", type=float, default=3.0)
    args = ap.parse_args()

    if not HAVE_JIT:
        print("numba is disabled in this process; loop kernels run as plain Python")

    print(f"{'family':<18}{'m':>7}  {'kernel':<24}{'numba s':>10}{'numpy s':>10}{'speedup':>9}")
    for name, fam in families():
        for kname, loop_fn, np_fn in kernel_cases(fam):
            loop_fn()  # compile
            t_loop, a = best_of(loop_fn, args.repeat)
            t_np, b = best_of(np_fn, args.repeat)
            assert np.array_equal(np.asarray(a), np.asarray(b)), f"{kname} disagrees on {name}"
            print(f"{name:<18}{len(fam):>7}  {kname:<24}{t_loop:>10.4f}{t_np:>10.4f}{t_np / t_loop:>9.1f}")

    if args.skip_dfs:
        return
    print()
    print(f"{'dfs case':<18}{'jit nodes/s':>14}{'python nodes/s':>16}{'speedup':>9}")
    for n, k, target in [(9, 4, 36), (10, 4, 20)]:
        r_jit = dfs_rate(n, k, target, args.dfs_seconds, False)
        r_py = dfs_rate(n, k, target, args.dfs_seconds, True)
        label = f"({n},{k}) m={target}"
        print(f"{label:<18}{r_jit:>14.0f}{r_py:>16.0f}{r_jit / r_py:>9.1f}")


if __name__ == "__main__":
    main()
