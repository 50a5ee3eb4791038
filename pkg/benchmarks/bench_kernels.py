"""Compare the compiled kernels with the pure-Python fallback.

Runs the same workloads once per backend, each in a fresh interpreter so the
backend is chosen at import. Usage: python benchmarks/bench_kernels.py
"""
import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "theta_tables_4pt": """
from thetaext.enumeration import enumerate_topologies
from thetaext.ordinal import OMEGA
for sp in enumerate_topologies(4):
    for a in (1, 2, 3, OMEGA):
        sp._cache.clear()
        sp.theta_table(a)
""",
    "verify_prop_1_4_3x3": """
from thetaext.lab import verify
verify("prop_1_4", max_x_points=3, max_y_points=3, y_class="any")
""",
    "verify_thm_3_7_4x3": """
from thetaext.lab import verify
verify("thm_3_7", max_x_points=4, max_y_points=3, y_class="regular_u_alpha", y_alpha=1)
""",
    "theta_monotone_3x3": """
from thetaext.lab import verify
verify("theta_monotone", max_x_points=3, max_y_points=3)
""",
}

RUNNER = """
import json, time
from thetaext import kernels
setup = compile({code!r}, "workload", "exec")
best = None
for _ in range({repeat}):
    start = time.perf_counter()
    exec(setup, {{}})
    took = time.perf_counter() - start
    best = took if best is None else min(best, took)
print(json.dumps({{"backend": kernels.BACKEND, "seconds": best}}))
"""


def run(code: str, backend: str, repeat: int) -> dict:
    env = dict(os.environ)
    if backend == "python":
        env["THETAEXT_BACKEND"] = "python"
    else:
        env.pop("THETAEXT_BACKEND", None)
    out = subprocess.run([sys.executable, "-c", RUNNER.format(code=code, repeat=repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--only", choices=sorted(WORKLOADS))
    args = p.parse_args()
    names = [args.only] if args.only else list(WORKLOADS)
    print(f"{'workload':<24}{'compiled':>10}{'python':>10}{'speedup':>9}")
    for name in names:
        fast = run(WORKLOADS[name], "compiled", args.repeat)
        slow = run(WORKLOADS[name], "python", args.repeat)
        if fast["backend"] != "compiled":
            print(f"{name:<24}  compiled extension not built; both runs used python")
        print(f"{name:<24}{fast['seconds']:>10.3f}{slow['seconds']:>10.3f}{slow['seconds'] / fast['seconds']:>8.1f}x")


if __name__ == "__main__":
    main()
