"""Compare the compiled and pure-Python kernel backends.

Two workloads: the oracle's pruned avoider enumeration (dominated by
the O(n) avoidance scans) and the class-A functional-equation
iteration (dominated by exact-coefficient convolutions).  Both
backends must produce identical results; only the wall time differs.

Run:  python3 benchmarks/bench_backends.py [--n-oracle 10] [--n-fe 40]
"""
from __future__ import annotations

import argparse
import importlib
import os
import subprocess
import sys
import time


def _run_in_subprocess(no_ext: bool, n_oracle: int, n_fe: int) -> dict:
    """Each backend is timed in a fresh interpreter so the import-time
    backend selection (driven by PERMCLASS_NO_EXT) takes effect."""
    code = r"""
import json, sys, time
from permclass import class_a, oracle, perms
from permclass import _kernels

n_oracle, n_fe = int(sys.argv[1]), int(sys.argv[2])
t0 = time.perf_counter()
rep = oracle.enumerate_avoiders(perms.CLASS_A_BASIS, n_oracle)
t_oracle = time.perf_counter() - t0
t0 = time.perf_counter()
state = class_a.iterate(n_fe)
t_fe = time.perf_counter() - t0
print(json.dumps({
    "backend": _kernels.BACKEND,
    "oracle_seconds": t_oracle,
    "fe_seconds": t_fe,
    "oracle_last": rep.counts[-1],
    "fe_last": class_a.counts(state)[-1],
}))
"""
    env = dict(os.environ)
    if no_ext:
        env["PERMCLASS_NO_EXT"] = "1"
    else:
        env.pop("PERMCLASS_NO_EXT", None)
    out = subprocess.run(
        [sys.executable, "-c", code, str(n_oracle), str(n_fe)],
        env=env, capture_output=True, text=True, check=True)
    import json
    return json.loads(out.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-oracle", type=int, default=10,
                        help="oracle enumeration length bound")
    parser.add_argument("--n-fe", type=int, default=40,
                        help="functional-equation truncation order")
    args = parser.parse_args()

    results = []
    for no_ext in (False, True):
        results.append(_run_in_subprocess(no_ext, args.n_oracle, args.n_fe))

    compiled, pure = results
    if compiled["backend"] == pure["backend"]:
        print("note: compiled backend unavailable; both runs used %r"
              % pure["backend"])
    if (compiled["oracle_last"] != pure["oracle_last"]
            or compiled["fe_last"] != pure["fe_last"]):
        print("BACKEND RESULTS DIFFER -- this is a bug")
        return 1

    print("workload                      %-10s %-10s speedup"
          % (compiled["backend"], pure["backend"]))
    for key, label in (("oracle_seconds",
                        "oracle enumerate n<=%d" % args.n_oracle),
                       ("fe_seconds",
                        "class-A FE iterate N=%d" % args.n_fe)):
        a, b = compiled[key], pure[key]
        print("%-29s %-10.3f %-10.3f %.2fx"
              % (label, a, b, b / a if a else float("inf")))
    return 0


if __name__ == "__main__":
    sys.exit(main())
