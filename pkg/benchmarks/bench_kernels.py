"""Compare the pure and compiled verification kernels on a real workload.

Builds the (C, 3, J={2,3}) context (monoid order 757) and times each kernel
through every available backend: table composition, sparse algebra products,
the idempotent orthogonality sweep, the matrix-unit multiplicativity sweep of
the largest summand, and the block-level product check.  Run with

    python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

import numpy as np

from renner.algebra import MonoidAlgebra, _to_arrays
from renner.kernels import available_backends
from renner.monoid import build_context, enumerate_monoid


def timed(fn, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ctx = build_context("C", 3, {2, 3})
    monoid = enumerate_monoid(ctx)
    algebra = MonoidAlgebra(monoid)
    print("context: C rank 3 J={2,3}, monoid order %d" % monoid.order)

    maps = np.array(
        [
            [v - 1 for v in s.vertex_map()]
            for s in monoid.elements
        ],
        dtype=np.int8,
    )
    nvert = maps.shape[1]

    entries = list(ctx.cs.nonzero_entries())
    big = max(entries, key=lambda e: e.class_size)
    summand = algebra.summand(big)
    data = summand["data"]

    etas = []
    for face in ctx.lattice.faces:
        if not face.vertices:
            continue
        idx, num, _ = _to_arrays(algebra.eta_face(face).vec)
        etas.append((idx, num))

    he = algebra.eta_class(big)
    ia, na, da = _to_arrays(he.vec)

    from renner.rep import _decoration

    colmap, gelem, _ = _decoration(ctx, big)

    workloads = [
        (
            "compose_table (757 maps)",
            lambda mod: mod.compose_table(maps, nvert),
        ),
        (
            "sparse_mul (eta * eta)",
            lambda mod: mod.sparse_mul(monoid.table, ia, na, da, ia, na, da),
        ),
        (
            "eta_orthogonality (28 faces)",
            lambda mod: mod.eta_orthogonality(monoid.table, etas, monoid.order),
        ),
        (
            "psi_multiplicative (class %d)" % big.class_size,
            lambda mod: mod.psi_multiplicative(
                monoid.table,
                summand["indptr"],
                summand["indices"],
                summand["vals"],
                data.row,
                data.col,
                data.pel,
                data.wtab,
                summand["lookup"],
                summand["member"],
                summand["class_elems"],
                monoid.order,
            ),
        ),
        (
            "block_multiplicative (757^2)",
            lambda mod: mod.block_multiplicative(
                monoid.table, colmap, gelem, data.wtab
            ),
        ),
    ]

    backends = available_backends()
    print("backends:", ", ".join(sorted(backends)))
    header = "%-34s" % "kernel"
    for name in sorted(backends):
        header += " %12s" % name
    if len(backends) > 1:
        header += " %9s" % "speedup"
    print(header)
    for label, fn in workloads:
        times = {}
        for name, mod in backends.items():
            reps = 1 if "multiplicative" in label else 3
            times[name], _ = timed(lambda m=mod: fn(m), repeats=reps)
        line = "%-34s" % label
        for name in sorted(backends):
            line += " %10.4fs" % times[name]
        if "pure" in times and "compiled" in times and times["compiled"] > 0:
            line += " %8.1fx" % (times["pure"] / times["compiled"])
        print(line)


if __name__ == "__main__":
    main()
