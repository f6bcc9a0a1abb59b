"""Time the pure-Python and compiled kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints one row per kernel with both timings and the speedup.  The compiled
column is skipped when the extension has not been built.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from varietylab import kernels
from varietylab.algebra import FiniteMonoid
from varietylab.identities import compile_term, parse_identity


def transition_generators(states: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(0, states, size=(2, states), dtype=np.int32)


def workloads(backend, gens, cap):
    closure = backend.transformation_closure(gens, cap)
    if closure is None:
        raise SystemExit(f"closure exceeded cap {cap}; pick another seed")
    _, right, parent, letter = closure
    table = backend.cayley_table(right, parent, letter)
    return closure, table


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--states", type=int, default=8)
    ap.add_argument("--seed", type=int, default=2)
    ap.add_argument("--domain", type=int, default=600, help="elements tried per identity variable")
    args = ap.parse_args(argv)

    backends = {"python": kernels.get_backend("python")}
    if kernels.COMPILED is not None:
        backends["cython"] = kernels.get_backend("cython")

    gens = transition_generators(args.states, args.seed)
    py = backends["python"]
    (_, right, parent, letter), table = workloads(py, gens, 50_000)
    n = len(table)

    # composition tables are associative by construction; element 0 is the identity map
    M = FiniteMonoid(table, identity=0, check=False)
    # always holds, so every assignment is visited
    ident = parse_identity("(xy)^w (xy)^w = (xy)^w")
    names = ident.variables
    search = (M.table, M.omega_table, M.period_table, M.identity,
              compile_term(ident.lhs, names), compile_term(ident.rhs, names),
              len(names), np.arange(min(args.domain, M.size), dtype=np.int32), None)

    jobs = {
        f"transformation_closure ({n} elements)": lambda b: b.transformation_closure(gens, 50_000),
        f"cayley_table ({n}x{n})": lambda b: b.cayley_table(right, parent, letter),
        f"find_identity_failure ({min(args.domain, M.size)}^2 assignments)": lambda b: b.find_identity_failure(*search),
    }
    print(f"{'kernel':48} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, job in jobs.items():
        t = {k: min(timeit.repeat(lambda: job(b), number=1, repeat=args.repeat)) for k, b in backends.items()}
        cy = t.get("cython")
        cy_s = f"{cy:10.4f}" if cy is not None else f"{'n/a':>10}"
        speed = f"{t['python'] / cy:7.1f}x" if cy else f"{'':>8}"
        print(f"{name:48} {t['python']:10.4f} {cy_s} {speed}")


if __name__ == "__main__":
    main()
