"""Benchmark the numba kernels against their pure-numpy fallbacks.

Builds a dihedral group of the requested order, materializes its Cayley
table, and times the three hot kernels on it: conjugacy orbit closure,
the full associativity scan, and the brute-force cut scan.  Run with
CUTLAB_NUMBA=0 to confirm the numpy numbers match the fallback path the
package would actually take.

    python3 benchmarks/bench_kernels.py [--order 2048] [--repeat 3]
"""

import argparse
import time

import numpy as np

from cutlab import _kernels
from cutlab.constructors import construct, metacyclic


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        started = time.perf_counter()
        fn()
        times.append(time.perf_counter() - started)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=2048, help="group order (must be 4k)")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    m = args.order // 2
    G = construct(metacyclic(m, 2, m - 1))  # dihedral of order 2m
    table = G.dense_table()
    inv = np.argmax(table == 0, axis=1).astype(np.int32)
    conj_perms = np.stack([G.conj_perm(g) for g in G.generators])
    assoc_table = construct(metacyclic(128, 2, 127)).dense_table()

    impls = _kernels.implementations()
    print(f"group: dihedral of order {G.order}; backends: {', '.join(sorted(impls))}")
    print(f"{'kernel':<22}" + "".join(f"{name:>12}" for name in sorted(impls)))

    rows = [
        ("orbit_labels", lambda f: f(conj_perms), 0),
        ("assoc_scan_256", lambda f: f(assoc_table), 1),
        (f"cut_scan_{G.order}", lambda f: f(table, inv), 2),
    ]
    for label, call, idx in rows:
        cells = []
        for name in sorted(impls):
            fn = impls[name][idx]
            call(fn)  # warm (JIT compile on the numba path)
            cells.append(best_of(lambda: call(fn), args.repeat))
        print(f"{label:<22}" + "".join(f"{c * 1e3:>10.2f}ms" for c in cells))
    if len(impls) > 1:
        print("(numba column includes no compile time; first call was warmed)")


if __name__ == "__main__":
    main()
