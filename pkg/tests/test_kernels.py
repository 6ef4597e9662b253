import json
import os
import subprocess
import sys

import numpy as np

from hessencount import _kernels
from hessencount.gfq import enumerate_types, field, operator_from_type

PROBE = r"""
import json
from hessencount import _kernels
from hessencount.gfq import count_hessenberg_bruteforce, enumerate_types, field, operator_from_type
from hessencount.hessenberg import csqf_monomial, enumerate_hess
counts = [count_hessenberg_bruteforce(m, operator_from_type(t, field(q)))
          for q in (2, 3) for t in enumerate_types(3, q) for m in enumerate_hess(3)]
csfs = [csqf_monomial(m).dumps() for m in enumerate_hess(4)]
print(json.dumps({"jit": _kernels.JIT_ENABLED, "counts": counts, "csfs": csfs}))
"""


def _probe(no_jit):
    env = dict(os.environ)
    env.pop("HESSENCOUNT_NO_JIT", None)
    if no_jit:
        env["HESSENCOUNT_NO_JIT"] = "1"
    out = subprocess.run([sys.executable, "-c", PROBE], capture_output=True, env=env, check=True, text=True)
    return json.loads(out.stdout)


def test_pure_python_fallback_matches_compiled():
    compiled, pure = _probe(False), _probe(True)
    assert pure["jit"] is False
    assert compiled["counts"] == pure["counts"]
    assert compiled["csfs"] == pure["csfs"]


def test_ascent_counts_empty_and_single():
    lo = np.zeros(0, dtype=np.int64)
    assert list(_kernels.ascent_counts(lo, np.zeros(0, dtype=np.int64), 0)) == [1]
    lo = np.array([0, 0], dtype=np.int64)  # an edge 1-2
    assert list(_kernels.ascent_counts(lo, np.array([1, 1], dtype=np.int64), 1)) == [1, 1]
    assert list(_kernels.ascent_counts(lo, np.array([2], dtype=np.int64), 1)) == [0, 0]


def test_kernel_budget_sentinel():
    F = field(2)
    T_op = operator_from_type(enumerate_types(3, 2)[0], F)
    need = np.zeros(4, dtype=np.int64)
    got = _kernels.count_flags(T_op.array(), 2, np.asarray(F.add, dtype=np.int64),
                               np.asarray(F.mul, dtype=np.int64), np.asarray(F.neg, dtype=np.int64), need, 2)
    assert got == _kernels.BUDGET_EXCEEDED
