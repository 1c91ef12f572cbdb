#!/usr/bin/env python3
"""Compare the gmpy2 and fractions rational backends on real workloads.

Runs each workload in a subprocess with WKNOTS_BACKEND set, so the
backend choice in wknots.rational is fixed before any module loads.

Usage: python3 scripts/bench_backends.py
"""

import os
import subprocess
import sys

WORKLOADS = {
    "quotient-long-m4": """
from wknots.arrows import LONG, quotient
quotient(LONG, 4, {"TC", "4T"})
""",
    "quotient-strands3-m3": """
from wknots.arrows import strands, quotient
quotient(strands(3), 3, {"TC", "4T"})
""",
    "alexander-series-7_5": """
from wknots.alexander import alexander_matrix, knot_inventory
from wknots.gauss import pd_to_gauss
alexander_matrix(pd_to_gauss(knot_inventory()["7_5"]), d=6)
""",
    "zed-trefoil-d5": """
from wknots.wbraid import word
from wknots.gauss import braid_closure
from wknots.expansion import zed_knot, wheels_reduce
wheels_reduce(zed_knot(braid_closure(word(2, "s1 s1 s1")), 5))
""",
}

DRIVER = """
import time
import wknots.rational as R
t0 = time.perf_counter()
%s
print("%%s %%.3f" %% (R.BACKEND, time.perf_counter() - t0))
"""


def run(backend, code):
    env = dict(os.environ, WKNOTS_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", DRIVER % code],
                         env=env, capture_output=True, text=True, check=True)
    used, secs = out.stdout.split()
    if used != backend and backend != "auto":
        raise RuntimeError("backend %s unavailable (got %s)" % (backend,
                                                                used))
    return float(secs)


def main():
    print("%-24s %12s %12s %8s" % ("workload", "gmpy2", "fractions",
                                   "ratio"))
    for name, code in WORKLOADS.items():
        fast = run("auto", code)
        slow = run("fractions", code)
        print("%-24s %10.3fs %10.3fs %7.2fx" % (name, fast, slow,
                                                slow / fast))


if __name__ == "__main__":
    main()
