"""Verification kernels: backend agreement, corruption detection, overflow."""

import random
from fractions import Fraction

import numpy as np
import pytest

from renner import kernels
from renner.algebra import MonoidAlgebra, _to_arrays
from renner.rep import _decoration

BACKENDS = sorted(kernels.available_backends().items())
BACKEND_IDS = [name for name, _ in BACKENDS]


def _maps_array(ctx):
    m = len(ctx.vertices)
    rows = []
    for s in ctx.monoid.elements:
        vm = s.vertex_map()
        rows.append([v - 1 if v else -1 for v in vm])
    return np.array(rows, dtype=np.int8), m


@pytest.fixture(scope="module")
def c2_alg(contexts):
    return MonoidAlgebra(contexts["c2"].monoid)


@pytest.mark.parametrize("name,mod", BACKENDS, ids=BACKEND_IDS)
def test_compose_table_matches_monoid(name, mod, a2):
    maps, m = _maps_array(a2)
    table = mod.compose_table(maps, m)
    assert np.array_equal(table, a2.monoid.table)


@pytest.mark.parametrize("name,mod", BACKENDS, ids=BACKEND_IDS)
def test_compose_table_reports_closure_failure(name, mod, a2):
    maps, m = _maps_array(a2)
    with pytest.raises(LookupError):
        mod.compose_table(maps[1:], m)


@pytest.mark.parametrize("name,mod", BACKENDS, ids=BACKEND_IDS)
def test_sparse_mul_matches_fraction_convolution(name, mod, a2):
    # integer coefficients: both backends handle these natively
    table = a2.monoid.table
    n = a2.monoid.order
    rng = random.Random(41)
    for _ in range(12):
        av = {i: Fraction(rng.randint(-6, 6)) for i in rng.sample(range(n), 5)}
        bv = {i: Fraction(rng.randint(-6, 6)) for i in rng.sample(range(n), 5)}
        av = {i: c for i, c in av.items() if c}
        bv = {i: c for i, c in bv.items() if c}
        expect = {}
        for i, c1 in av.items():
            for j, c2 in bv.items():
                k = int(table[i, j])
                expect[k] = expect.get(k, 0) + c1 * c2
        expect = {k: v for k, v in expect.items() if v}

        def arrays(vec):
            idx = sorted(vec)
            return (
                np.array(idx, dtype=np.int64),
                np.array([vec[i].numerator for i in idx], dtype=np.int64),
                np.array([vec[i].denominator for i in idx], dtype=np.int64),
            )

        ia, na, da = arrays(av)
        ib, nb, db = arrays(bv)
        oi, on, od = mod.sparse_mul(table, ia, na, da, ib, nb, db)
        got = {int(i): Fraction(int(u), int(v)) for i, u, v in zip(oi, on, od)}
        assert got == expect


def test_sparse_mul_overflow_falls_back_to_exact(a2):
    # squared 2**40 coefficients overflow the compiled 64-bit accumulator,
    # so the facade must hand the call to the exact pure path
    table = a2.monoid.table
    big = 1 << 40
    ia = np.array([1, 2], dtype=np.int64)
    na = np.array([big, big + 1], dtype=np.int64)
    da = np.array([1, 1], dtype=np.int64)
    oi, on, od = kernels.sparse_mul(table, ia, na, da, ia, na, da)
    pure = kernels.available_backends()["pure"]
    pi, pn, pd = pure.sparse_mul(table, ia, na, da, ia, na, da)
    assert np.array_equal(oi, pi)
    assert list(map(int, on)) == list(map(int, pn))
    assert list(map(int, od)) == list(map(int, pd))


def test_sparse_mul_facade_handles_rationals(a2):
    # the compiled kernel is integer-only; the facade falls back for these
    table = a2.monoid.table
    ia = np.array([3, 5], dtype=np.int64)
    na = np.array([1, -2], dtype=np.int64)
    da = np.array([2, 3], dtype=np.int64)
    oi, on, od = kernels.sparse_mul(table, ia, na, da, ia, na, da)
    pure = kernels.available_backends()["pure"]
    pi, pn, pd = pure.sparse_mul(table, ia, na, da, ia, na, da)
    assert np.array_equal(oi, pi)
    assert list(map(int, on)) == list(map(int, pn))
    assert list(map(int, od)) == list(map(int, pd))


@pytest.mark.parametrize("name,mod", BACKENDS, ids=BACKEND_IDS)
def test_eta_orthogonality_accepts_true_system(name, mod, c2, c2_alg):
    etas = []
    for f in c2.lattice.faces:
        idx, num, den = _to_arrays(c2_alg.eta_face(f).vec)
        assert (den == 1).all()
        etas.append((idx, num))
    assert mod.eta_orthogonality(c2.monoid.table, etas, c2.monoid.order) is None


@pytest.mark.parametrize("name,mod", BACKENDS, ids=BACKEND_IDS)
def test_eta_orthogonality_flags_corruption(name, mod, c2, c2_alg):
    etas = []
    for f in c2.lattice.faces:
        idx, num, _ = _to_arrays(c2_alg.eta_face(f).vec)
        etas.append((idx, num.copy()))
    etas[3][1][0] += 1
    witness = mod.eta_orthogonality(c2.monoid.table, etas, c2.monoid.order)
    assert witness is not None
    assert witness[0] == 3 or witness[1] == 3


@pytest.mark.parametrize("name,mod", BACKENDS, ids=BACKEND_IDS)
def test_centrality_accepts_class_idempotents(name, mod, c2, c2_alg):
    for e in c2.ctx.cs.entries if hasattr(c2, "ctx") else c2.cs.entries:
        idx, num, _ = _to_arrays(c2_alg.eta_class(e).vec)
        assert mod.centrality(c2.monoid.table, idx, num, c2.monoid.order) == -1


@pytest.mark.parametrize("name,mod", BACKENDS, ids=BACKEND_IDS)
def test_centrality_rejects_noncentral_element(name, mod, c2, c2_alg):
    e = c2.cs.nonzero_entries()[0]
    lo, _ = c2.monoid.class_range(e.eid)
    idx, num, _ = _to_arrays(c2_alg.basis(lo).vec)
    assert mod.centrality(c2.monoid.table, idx, num, c2.monoid.order) >= 0


def _summand_args(ctx, alg, entry):
    s = alg.summand(entry)
    data = ctx.monoid.class_data[entry.eid]
    return (
        ctx.monoid.table,
        s["indptr"],
        s["indices"],
        s["vals"],
        data.row,
        data.col,
        data.pel,
        data.wtab,
        s["lookup"],
        s["member"],
        s["class_elems"],
        ctx.monoid.order,
    )


@pytest.mark.parametrize("name,mod", BACKENDS, ids=BACKEND_IDS)
def test_summand_sweep_passes_on_true_data(name, mod, contexts):
    # the a2 sweep once crashed the compiled path when coefficient
    # cancellation re-zeroed accumulator slots mid-pass, so both contexts
    # stay here as regression anchors
    for key in ("a2", "c2"):
        ctx = contexts[key]
        alg = MonoidAlgebra(ctx.monoid)
        for e in ctx.cs.nonzero_entries():
            nbad, first = mod.psi_multiplicative(*_summand_args(ctx, alg, e))
            assert (nbad, first) == (0, None)


@pytest.mark.parametrize("name,mod", BACKENDS, ids=BACKEND_IDS)
def test_summand_sweep_flags_corruption(name, mod, c2, c2_alg):
    # corrupting a lower-ideal coefficient is invisible to the class
    # projection, so the poison must hit a leading class coefficient
    e = c2.cs.nonzero_entries()[1]
    args = list(_summand_args(c2, c2_alg, e))
    indptr, indices = args[1], args[2]
    member = args[9]
    vals = args[3].copy()
    pos = next(
        p for p in range(indptr[0], indptr[1]) if member[int(indices[p])] >= 0
    )
    vals[pos] += 1
    args[3] = vals
    nbad, first = mod.psi_multiplicative(*args)
    assert nbad > 0
    assert first is not None


@pytest.mark.parametrize("name,mod", BACKENDS, ids=BACKEND_IDS)
def test_block_bookkeeping_passes_on_true_data(name, mod, c2):
    for e in c2.cs.nonzero_entries():
        colmap, gelem, _ = _decoration(c2, e)
        data = c2.monoid.class_data[e.eid]
        nbad, first = mod.block_multiplicative(c2.monoid.table, colmap, gelem, data.wtab)
        assert (nbad, first) == (0, None)


@pytest.mark.parametrize("name,mod", BACKENDS, ids=BACKEND_IDS)
def test_block_bookkeeping_flags_corruption(name, mod, c2):
    e = c2.cs.nonzero_entries()[1]
    colmap, gelem, _ = _decoration(c2, e)
    data = c2.monoid.class_data[e.eid]
    bad_colmap = colmap.copy()
    lo, hi = c2.monoid.class_range(e.eid)
    bad_colmap[lo, 0], bad_colmap[lo, 1] = bad_colmap[lo, 1], bad_colmap[lo, 0]
    nbad, first = mod.block_multiplicative(c2.monoid.table, bad_colmap, gelem, data.wtab)
    assert nbad > 0


def test_backends_agree_on_everything(c2, c2_alg):
    mods = kernels.available_backends()
    if len(mods) < 2:
        pytest.skip("only one backend importable")
    pure, comp = mods["pure"], mods["compiled"]
    maps, m = _maps_array(c2)
    assert np.array_equal(pure.compose_table(maps, m), comp.compose_table(maps, m))
    for e in c2.cs.nonzero_entries():
        args = _summand_args(c2, c2_alg, e)
        assert pure.psi_multiplicative(*args) == comp.psi_multiplicative(*args)
        colmap, gelem, _ = _decoration(c2, e)
        data = c2.monoid.class_data[e.eid]
        assert pure.block_multiplicative(
            c2.monoid.table, colmap, gelem, data.wtab
        ) == comp.block_multiplicative(c2.monoid.table, colmap, gelem, data.wtab)


def test_compiled_backend_is_active_by_default():
    # the wheel ships a compiled core; unless RENNER_PURE is set it must load
    import os

    if os.environ.get("RENNER_PURE"):
        assert kernels.BACKEND == "pure"
    elif "compiled" in kernels.available_backends():
        assert kernels.BACKEND == "compiled"
