"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 3] [--groups symmetric:5 ...]

Per-kernel timings are best-of-``repeat`` wall seconds on the same inputs;
the end-to-end row runs ``caminakit census`` in a subprocess with each
backend forced through ``CAMINAKIT_BACKEND``.
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time
import timeit

import numpy as np

from caminakit import kernels
from caminakit.catalog import make_group

DEFAULT_GROUPS = ["symmetric:4", "extraspecial:2:4:2", "symmetric:5", "frobenius:13:2:12",
                  "dihedral:256"]
E2E_GROUPS = ["extraspecial:2:4:2", "metacyclic:9:2:6", "frobenius:13:2:12", "symmetric:4"]


def kernel_calls(G, backend):
    t, inv = G.table, G.inverse
    cls = G.classes.class_of
    r = len(G.classes)
    gens = np.array([1, G.order // 2], dtype=np.int64)
    sub = np.nonzero(backend.closure(t, np.array([G.order // 2], dtype=np.int64)))[0].astype(np.int64)
    outside = np.setdiff1d(np.arange(G.order), sub).astype(np.int64)
    rng = np.random.default_rng(0)
    mat = rng.integers(0, 97, size=(r, r)).astype(np.int64)
    return {
        "is_associative": lambda: backend.is_associative(t),
        "conjugacy_labels": lambda: backend.conjugacy_labels(t, inv),
        "class_mult_coeffs": lambda: backend.class_mult_coeffs(t, inv, cls, r),
        "closure": lambda: backend.closure(t, gens),
        "coset_in_class": lambda: backend.coset_in_class(t, cls, outside, sub),
        "commutators_cover": lambda: backend.commutators_cover(t, inv, outside, sub),
        "rref_mod_p": lambda: backend.rref_mod_p(mat.copy(), 97),
    }


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def end_to_end(backend_name, groups):
    env = dict(os.environ, CAMINAKIT_BACKEND=backend_name)
    cmd = [sys.executable, "-m", "caminakit", "census", "--format", "json"]
    for g in groups:
        cmd += ["--group", g]
    start = time.perf_counter()
    subprocess.run(cmd, env=env, check=True, stdout=subprocess.DEVNULL)
    return time.perf_counter() - start


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--groups", nargs="+", default=DEFAULT_GROUPS)
    p.add_argument("--no-e2e", action="store_true", help="skip the end-to-end census run")
    args = p.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled backend not built; run `pip install --no-build-isolation -e .` first")
        return 1
    py, cy = backends["python"], backends["cython"]

    print(f"{'group':22s} {'kernel':18s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for spec in args.groups:
        G = make_group(spec)
        slow, fast = kernel_calls(G, py), kernel_calls(G, cy)
        for name in slow:
            a = best_of(slow[name], args.repeat)
            b = best_of(fast[name], args.repeat)
            print(f"{spec:22s} {name:18s} {a:10.5f} {b:10.5f} {a / max(b, 1e-9):7.1f}x")

    if not args.no_e2e:
        a = end_to_end("python", E2E_GROUPS)
        b = end_to_end("cython", E2E_GROUPS)
        print(f"\nend-to-end census of {len(E2E_GROUPS)} groups: "
              f"python {a:.2f}s, cython {b:.2f}s ({a / b:.2f}x)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
