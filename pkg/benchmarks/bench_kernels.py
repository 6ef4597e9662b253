"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each mode runs in its own interpreter because the backend is fixed at import.
"""
import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
import numpy as np
from hessencount import _kernels
from hessencount.gfq import count_hessenberg_bruteforce, field, operator_from_type, parse_type, zero_operator
from hessencount.hessenberg import HessFn, _neighbour_floor

def best(fn, repeat):
    fn()  # warm-up (compilation)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        times.append(time.perf_counter() - t0)
    return min(times), value

repeat = REPEAT
flags_zero = lambda: count_hessenberg_bruteforce((2, 3, 4, 4), zero_operator(field(3), 4))
T = operator_from_type(parse_type("(1,[2]);(1,[1]);(2,[1])"), field(5))
flags_mixed = lambda: count_hessenberg_bruteforce((2, 3, 5, 5, 5), T)
m = HessFn((3, 4, 5, 6, 7, 7, 7))
lo = _neighbour_floor(m)
content = np.ones(7, dtype=np.int64)
colorings = lambda: int(_kernels.ascent_counts(lo, content, len(m.edges())).sum())
out = {"jit": _kernels.JIT_ENABLED}
for name, fn in [("flags zero op n=4 q=3", flags_zero), ("flags mixed n=5 q=5", flags_mixed),
                 ("colorings n=7", colorings)]:
    t, v = best(fn, repeat)
    out[name] = [t, v]
print(json.dumps(out))
"""


def run(no_jit: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("HESSENCOUNT_NO_JIT", None)
    if no_jit:
        env["HESSENCOUNT_NO_JIT"] = "1"
    code = WORKLOAD.replace("REPEAT", str(repeat))
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    jit, py = run(False, args.repeat), run(True, args.repeat)
    print(f"{'workload':<24}{'numba (s)':>12}{'python (s)':>12}{'speedup':>10}  result")
    for name in (k for k in jit if k != "jit"):
        (tj, vj), (tp, vp) = jit[name], py[name]
        assert vj == vp, f"backends disagree on {name}: {vj} != {vp}"
        print(f"{name:<24}{tj:>12.4f}{tp:>12.4f}{tp / tj:>9.1f}x  {vj}")
    if not jit["jit"]:
        print("note: numba unavailable, both columns ran the fallback")


if __name__ == "__main__":
    main()
