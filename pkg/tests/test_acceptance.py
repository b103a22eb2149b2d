"""Acceptance gate: the ten release criteria, one pass line each.

Each test prints `criterion N: PASS ...` on success so a plain test log reads
as the acceptance checklist.  Timed criteria assert their wall-clock budget.
"""

import time
from fractions import Fraction

from renner.algebra import MonoidAlgebra
from renner.monoid import build_context, enumerate_monoid, multiply, parse_element
from renner.oracle import center_dimension, match_rook, mobius_recursive, rook_monoid
from renner.polytope import mobius, subfaces
from renner.rep import all_irreducibles, char_table_of, chi_star, verify_block_form

ALL_KEYS = ("a1", "a2", "a3", "c2", "c3")


def test_criterion_01_c3_golden_values():
    start = time.monotonic()
    ctx = build_context("C", 3, {2, 3})
    enumerate_monoid(ctx)
    assert len(ctx.lattice.faces) == 28
    triangle = ctx.lattice.by_vertices[frozenset({1, 2, 3})]
    assert len(subfaces(ctx.lattice, triangle)) == 8
    sigma = parse_element(ctx, "face=[1,2,3,4,5,6];images=[2,3,1,6,4,5]")
    tri_entry = [e for e in ctx.cs.nonzero_entries() if e.X == frozenset({1, 2})][0]
    table = char_table_of(ctx, tri_entry)
    vals = tuple(
        chi_star(ctx, tri_entry, row, sigma) for row in range(table.nclasses)
    )
    assert vals == (2, 2, -2)
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    print(
        "criterion 1: PASS (28 faces, 8 subfaces of the triangle, "
        "chi* = (2, 2, -2), %.2fs)" % elapsed
    )


def test_criterion_02_rook_monoid_equivalence(contexts):
    start = time.monotonic()
    sizes = {}
    for key, n in (("a1", 2), ("a2", 3), ("a3", 4)):
        cert = match_rook(contexts[key].monoid)
        assert cert["n"] == n
        sizes[n] = cert["size"]
        assert rook_monoid(n).order == cert["size"]
    assert sizes == {2: 7, 3: 34, 4: 209}
    elapsed = time.monotonic() - start
    assert elapsed < 120.0
    print(
        "criterion 2: PASS (rook isomorphism certificates for sizes "
        "7, 34, 209; %.2fs)" % elapsed
    )


def test_criterion_03_dimension_bookkeeping(contexts, algebras):
    pairs = 0
    for key in ALL_KEYS:
        ctx = contexts[key]
        alg = algebras[key]
        total = 1 + sum(
            e.d_e ** 2 * e.wstar.order for e in ctx.cs.nonzero_entries()
        )
        assert total == ctx.monoid.order
        for e in ctx.cs.nonzero_entries():
            assert alg.summand_triangular(e)
            s = alg.summand(e)
            assert len(s["class_elems"]) == e.class_size
            pairs += 1
    print(
        "criterion 3: PASS (order formula and summand dimensions over "
        "%d entries in %d contexts)" % (pairs, len(ALL_KEYS))
    )


def test_criterion_04_idempotent_system(contexts, algebras):
    for key in ALL_KEYS:
        assert contexts[key].monoid.order <= 1000
        report = algebras[key].verify_idempotent_system()
        assert report["face_idempotents"] == len(contexts[key].lattice.faces)
    print(
        "criterion 4: PASS (orthogonality, Moebius inversion, centrality "
        "of the idempotent system in all %d contexts)" % len(ALL_KEYS)
    )


def test_criterion_05_matrix_unit_multiplicativity(contexts, algebras):
    checked = 0
    for key in ALL_KEYS:
        ctx = contexts[key]
        alg = algebras[key]
        for e in ctx.cs.entries:
            checked += alg.verify_summand_multiplicative(e)
        for e in ctx.cs.nonzero_entries():
            he = alg.eta_class(e)
            lo, hi = ctx.monoid.class_range(e.eid)
            step = max(1, (hi - lo) // 24)
            for i in range(lo, hi, step):
                x = alg.basis(i) * he
                assert alg.psi_inverse(e, alg.psi(e, x)) == x
    print(
        "criterion 5: PASS (psi multiplicative on %d ordered basis pairs, "
        "round trips exact)" % checked
    )


def test_criterion_06_induced_form_multiplicative(contexts):
    pair_total = 0
    for key in ALL_KEYS:
        ctx = contexts[key]
        n = ctx.monoid.order
        for e in ctx.cs.entries:
            pair_total += verify_block_form(ctx, e)
        irr = all_irreducibles(ctx)
        assert sum(r.degree ** 2 for r in irr) == n
        for r in irr:
            if r.matrix_rep is not None:
                assert r.degree == r.entry.d_e * r.matrix_rep.degree
        vectors = [r.character_vector() for r in irr]
        assert len(set(vectors)) == len(vectors)
    print(
        "criterion 6: PASS (induced forms multiplicative on %d ordered "
        "pairs, degrees and character vectors consistent)" % pair_total
    )


def test_criterion_07_traces_match_characters(contexts):
    compared = 0
    for key in ALL_KEYS:
        ctx = contexts[key]
        for r in all_irreducibles(ctx):
            if r.matrix_rep is None:
                continue
            for sigma in ctx.monoid.elements:
                mat = r.evaluate(sigma)
                trace = sum(mat[i][i] for i in range(len(mat)))
                assert trace == Fraction(r.character(sigma))
                compared += 1
    print(
        "criterion 7: PASS (matrix traces equal characters at %d "
        "element-representation pairs)" % compared
    )


def test_criterion_08_mobius_agreement(contexts):
    pairs = 0
    for key in ALL_KEYS:
        lattice = contexts[key].lattice
        sets = [f.vertices for f in lattice.faces]
        mu = mobius_recursive(sets)
        for i, fi in enumerate(lattice.faces):
            for j, fj in enumerate(lattice.faces):
                if fi.vertices <= fj.vertices:
                    assert mu[i, j] == mobius(fi, fj)
                    pairs += 1
    print(
        "criterion 8: PASS (closed form equals the defining recursion on "
        "%d comparable face pairs)" % pairs
    )


def test_criterion_09_center_dimensions(contexts):
    expected = {"a1": 4, "a2": 7, "c2": 9}
    for key, dim in expected.items():
        start = time.monotonic()
        ctx = contexts[key]
        assert center_dimension(ctx.monoid) == dim
        classes = 1 + sum(
            len(char_table_of(ctx, e).rows) for e in ctx.cs.nonzero_entries()
        )
        assert classes == dim
        elapsed = time.monotonic() - start
        assert elapsed < 60.0
    print(
        "criterion 9: PASS (center dimensions 4, 7, 9 match the class "
        "counts of the matrix decomposition)"
    )


def test_criterion_10_euler_relations(contexts):
    intervals = 0
    for key in ALL_KEYS:
        lattice = contexts[key].lattice
        for x in lattice.faces:
            for y in lattice.faces:
                if not x.vertices < y.vertices:
                    continue
                total = sum(
                    (-1) ** f.dim
                    for f in lattice.faces
                    if x.vertices <= f.vertices <= y.vertices
                )
                assert total == 0
                intervals += 1
    print(
        "criterion 10: PASS (Euler alternating sums vanish on %d proper "
        "intervals)" % intervals
    )
