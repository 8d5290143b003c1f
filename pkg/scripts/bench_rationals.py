#!/usr/bin/env python3
"""Benchmark the two rational backends on the heavy exact-rank kernels.

Everything in the package is bignum-bound rather than loop-bound, so the
win comes from gmpy2's mpq kernels, not from compiling the loops.  Run:

    python3 scripts/bench_rationals.py
"""

import os
import subprocess
import sys
import time

KERNEL = r"""
import time
from asreg2.rationals import BACKEND
from asreg2.cyclotomic import zeta
from asreg2.algebra import quantum_spec, jordan_spec
from asreg2.automorphisms import make_cyclic_group
from asreg2.skew import quotient_by_ideal_e_dims
from asreg2.beilinson import gabriel_quiver_oracle

jobs = [
    ("ideal dims (1,1) alpha=zeta5 r=3 D=24",
     lambda: quotient_by_ideal_e_dims(quantum_spec(1, 1, zeta(5)), make_cyclic_group(quantum_spec(1, 1, zeta(5)), 3), 24)),
    ("ideal dims (1,3) r=6 D=96",
     lambda: quotient_by_ideal_e_dims(quantum_spec(1, 3, 1), make_cyclic_group(quantum_spec(1, 3, 1), 6), 96)),
    ("ideal dims jordan q=1 r=2 D=24",
     lambda: quotient_by_ideal_e_dims(jordan_spec(1), make_cyclic_group(jordan_spec(1), 2), 24)),
    ("gabriel oracle (3,5) r=4",
     lambda: gabriel_quiver_oracle(quantum_spec(3, 5, 1), make_cyclic_group(quantum_spec(3, 5, 1), 4))),
]
for name, job in jobs:
    t0 = time.perf_counter()
    job()
    print("%-44s %-10s %.3fs" % (name, BACKEND, time.perf_counter() - t0))
"""


def main():
    for backend in ("fraction", "gmpy2"):
        env = dict(os.environ, ASREG2_RATIONALS=backend)
        t0 = time.perf_counter()
        proc = subprocess.run([sys.executable, "-c", KERNEL], env=env,
                              capture_output=True, text=True)
        if proc.returncode != 0:
            print("backend %s unavailable:\n%s" % (backend, proc.stderr.strip()))
            continue
        sys.stdout.write(proc.stdout)
        print("%-44s %-10s %.3fs total" % ("", backend, time.perf_counter() - t0))


if __name__ == "__main__":
    main()
