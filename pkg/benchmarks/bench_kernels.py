"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Workloads are the two hot paths: lowering the parameter of a dense
high-degree polynomial (connection expansion) and Jacobi evaluation on a
large grid, plus the full reference table.
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from diskzernike.basis import _log_leading_coefficient
from diskzernike.kernels import available_backends


def workloads(mod):
    rng = np.random.default_rng(0)
    size = 4000
    m = rng.integers(0, 400, size)
    n = rng.integers(0, 400, size)
    c = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    logc0 = _log_leading_coefficient(m, n, 9.9, 0.5)
    t = np.linspace(-1, 1, 200_000)
    return {
        "connection_terms (4000 modes, degree <= 800)":
            lambda: mod.connection_terms(m, n, c, logc0, 9.9, 0.5),
        "jacobi_eval_array (n=200, 2e5 points)":
            lambda: mod.jacobi_eval_array(200, 1.5, 3.0, t),
    }


def table_seconds(backend):
    env = dict(os.environ, DISKZERNIKE_BACKEND=backend)
    code = (
        "import time;from diskzernike.experiments import rate_table, default_j_list;"
        "t=time.perf_counter();rate_table(9.9,3,default_j_list(3));"
        "print(time.perf_counter()-t)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True)
    return float(out.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the numpy fallback is available")
    results = {}
    for name, mod in backends.items():
        for label, fn in workloads(mod).items():
            fn()
            results.setdefault(label, {})[name] = min(
                timeit.repeat(fn, number=1, repeat=args.repeat))
    results["reference table (12 rows)"] = {
        name: table_seconds("python" if name == "python" else "cython") for name in backends
    }
    names = sorted(backends)
    print(f"{'workload':50s}" + "".join(f"{n:>12s}" for n in names) + "     speedup")
    for label, row in results.items():
        line = f"{label:50s}" + "".join(f"{row[n]:11.4f}s" for n in names)
        if len(names) == 2:
            line += f"{row['python'] / row['cython']:11.2f}x"
        print(line)


if __name__ == "__main__":
    main()
