"""Independent brute-force recomputations checked against the pipeline."""

import itertools
import math

import pytest

from renner.errors import GroupTooLarge, MismatchWitness
from renner.oracle import (
    PartialInjection,
    center_dimension,
    exhaustive_property_suite,
    match_rook,
    mobius_recursive,
    rook_monoid,
)

ROOK_SIZES = {1: 2, 2: 7, 3: 34, 4: 209, 5: 1546}


def test_rook_monoid_sizes():
    for n, size in ROOK_SIZES.items():
        rook = rook_monoid(n)
        assert rook.order == size
        expected = sum(
            math.comb(n, k) ** 2 * math.factorial(k) for k in range(n + 1)
        )
        assert size == expected
    with pytest.raises(GroupTooLarge):
        rook_monoid(6)


def test_rook_composition_is_associative():
    rook = rook_monoid(2)
    for i, j, k in itertools.product(range(rook.order), repeat=3):
        assert rook.mul(rook.mul(i, j), k) == rook.mul(i, rook.mul(j, k))


def test_partial_injection_composition():
    a = PartialInjection([2, 0, 1])
    b = PartialInjection([3, 1, 0])
    # apply a first, then b: 1 -> 2 -> 1, 3 -> 1 -> 3
    assert (a * b).images == (1, 0, 3)
    assert a.rank() == 2
    assert PartialInjection([0, 0, 0]).rank() == 0


def test_match_rook_certificates(contexts):
    for key, n in (("a1", 2), ("a2", 3), ("a3", 4)):
        cert = match_rook(contexts[key].monoid)
        assert cert["n"] == n
        assert cert["size"] == contexts[key].monoid.order
        assert sorted(cert["mapping"]) == list(range(contexts[key].monoid.order))


def test_match_rook_bounded(c3):
    with pytest.raises(GroupTooLarge):
        match_rook(c3.monoid)


def test_match_rook_rejects_corrupted_table(a2):
    class Shim:
        ctx = a2
        order = a2.monoid.order
        elements = a2.monoid.elements

        @staticmethod
        def mul_idx(i, j):
            got = a2.monoid.mul_idx(i, j)
            if (i, j) == (5, 7):
                return (got + 1) % a2.monoid.order
            return got

    with pytest.raises(MismatchWitness):
        match_rook(Shim())


def test_mobius_recursion_on_boolean_lattice():
    sets = [frozenset(s) for k in range(4) for s in itertools.combinations(range(3), k)]
    mu = mobius_recursive(sets)
    for (i, j), v in mu.items():
        assert v == (-1) ** (len(sets[j]) - len(sets[i]))
    # incomparable pairs are absent
    i01 = sets.index(frozenset({0, 1}))
    i02 = sets.index(frozenset({0, 2}))
    assert (i01, i02) not in mu


def test_mobius_recursion_matches_face_lattice(c2):
    from renner.polytope import mobius

    faces = c2.lattice.faces
    sets = [f.vertices for f in faces]
    mu = mobius_recursive(sets)
    for i, fi in enumerate(faces):
        for j, fj in enumerate(faces):
            if fi.vertices <= fj.vertices:
                assert mu[i, j] == mobius(fi, fj)


def test_center_dimensions(contexts):
    from renner.rep import char_table_of

    expected = {"a1": 4, "a2": 7, "a3": 12, "c2": 9}
    for key, dim in expected.items():
        ctx = contexts[key]
        assert center_dimension(ctx.monoid) == dim
        classes = 1 + sum(
            len(char_table_of(ctx, e).rows) for e in ctx.cs.nonzero_entries()
        )
        assert classes == dim


def test_center_dimension_bounds(c3, a2):
    # c3 fits the bound; a shim without a table must be rejected
    class NoTable:
        order = a2.monoid.order
        table = None

    with pytest.raises(GroupTooLarge):
        center_dimension(NoTable())


def test_property_suite_all_pass(contexts):
    for key in ("a1", "a2", "c2"):
        report = exhaustive_property_suite(contexts[key].monoid)
        assert len(report) >= 10
        failing = [r for r in report if r["status"] != "pass"]
        assert failing == []
        names = {r["check"] for r in report}
        assert "order-formula" in names
        assert "mobius-closed-form" in names
        for r in report:
            assert r["citation"]


def test_property_suite_seed_changes_nothing(a2):
    r1 = exhaustive_property_suite(a2.monoid, seed=1)
    r2 = exhaustive_property_suite(a2.monoid, seed=99)
    assert [x["status"] for x in r1] == [x["status"] for x in r2]
    assert [x["check"] for x in r1] == [x["check"] for x in r2]


def test_property_suite_detects_corruption(a1):
    import numpy as np

    class Shim:
        ctx = a1
        order = a1.monoid.order
        elements = a1.monoid.elements
        faithful = a1.monoid.faithful
        class_data = a1.monoid.class_data
        table = a1.monoid.table.copy()

        def idx(self, s):
            return a1.monoid.idx(s)

        def mul_idx(self, i, j):
            return int(self.table[i, j])

        def class_range(self, eid):
            return a1.monoid.class_range(eid)

    shim = Shim()
    shim.table[3, 4] = (shim.table[3, 4] + 1) % shim.order
    report = exhaustive_property_suite(shim)
    assert any(r["status"] == "fail" for r in report)
