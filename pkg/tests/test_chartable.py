"""Integer character tables via class-matrix splitting over a finite field."""

import math

import pytest

from renner.chartable import character_table
from renner.errors import GroupTooLarge
from renner.weyl import build_root_datum, element_order, enumerate_group

S3_ROWS = (
    (1, 1, -1),
    (1, 1, 1),
    (2, -1, 0),
)

B2_ROWS = (
    (1, 1, -1, -1, 1),
    (1, 1, -1, 1, -1),
    (1, 1, 1, -1, -1),
    (1, 1, 1, 1, 1),
    (2, -2, 0, 0, 0),
)

C3_ROWS = (
    (1, -1, 1, -1, -1, 1, 1, -1, -1, 1),
    (1, -1, 1, -1, 1, -1, -1, 1, -1, 1),
    (1, 1, 1, 1, -1, -1, -1, -1, 1, 1),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (2, -2, 2, -2, 0, 0, 0, 0, 1, -1),
    (2, 2, 2, 2, 0, 0, 0, 0, -1, -1),
    (3, -3, -1, 1, -1, -1, 1, 1, 0, 0),
    (3, -3, -1, 1, 1, 1, -1, -1, 0, 0),
    (3, 3, -1, -1, -1, 1, -1, 1, 0, 0),
    (3, 3, -1, -1, 1, -1, 1, -1, 0, 0),
)


@pytest.fixture(scope="module")
def c3_group():
    return enumerate_group(build_root_datum("C", 3))


@pytest.mark.parametrize(
    "gens,rows,sizes",
    [
        ((1, 2), S3_ROWS, (1, 2, 3)),
        ((2, 3), B2_ROWS, (1, 1, 2, 2, 2)),
        ((1, 2, 3), C3_ROWS, (1, 1, 3, 3, 6, 6, 6, 6, 8, 8)),
    ],
)
def test_frozen_tables(c3_group, gens, rows, sizes):
    handle = c3_group.subgroup(gens)
    table = character_table(handle)
    assert table.rows == rows
    assert tuple(table.classes.sizes) == sizes


def test_s4_degrees():
    group = enumerate_group(build_root_datum("A", 3))
    table = character_table(group.subgroup((1, 2, 3)))
    assert sorted(table.degrees) == [1, 1, 2, 3, 3]


def test_s5_degrees():
    group = enumerate_group(build_root_datum("A", 4))
    table = character_table(group.subgroup((1, 2, 3, 4)))
    assert sorted(table.degrees) == [1, 1, 4, 4, 5, 5, 6]


def test_degree_sum_of_squares(c3_group):
    for gens in ((1,), (1, 2), (2, 3), (1, 2, 3)):
        handle = c3_group.subgroup(gens)
        table = character_table(handle)
        assert sum(d * d for d in table.degrees) == handle.order
        assert all(d >= 1 for d in table.degrees)
        # rows are sorted by degree, then lex
        assert list(table.rows) == sorted(table.rows)


def test_trivial_and_sign_rows(c3_group):
    table = character_table(c3_group.subgroup((1, 2, 3)))
    r = table.nclasses
    assert (1,) * r in table.rows
    assert all(any(abs(v) != 1 for v in row) for row in table.rows if row[0] > 1)


def test_row_orthogonality_independent(c3_group):
    handle = c3_group.subgroup((1, 2, 3))
    table = character_table(handle)
    cls = handle.conjugacy_classes()
    reps_idx = [c[0] for c in cls.classes]
    inv_class = [cls.class_of[handle.inv(ri)] for ri in reps_idx]
    r = table.nclasses
    for a in range(r):
        for b in range(r):
            s = sum(
                cls.sizes[l] * table.value(a, l) * table.value(b, inv_class[l])
                for l in range(r)
            )
            assert s == (handle.order if a == b else 0)


def test_column_orthogonality(c3_group):
    handle = c3_group.subgroup((2, 3))
    table = character_table(handle)
    cls = handle.conjugacy_classes()
    r = table.nclasses
    for l in range(r):
        for m in range(r):
            s = sum(table.value(a, l) * table.value(a, m) for a in range(r))
            if l == m:
                assert s == handle.order // cls.sizes[l]
            else:
                assert s == 0


def test_values_constant_on_classes(c3_group):
    handle = c3_group.subgroup((2, 3))
    table = character_table(handle)
    for a in range(table.nclasses):
        for i in range(handle.order):
            expected = table.value(a, table.classes.class_of[i])
            assert table.chi_elem(a, i) == expected
    for w in handle.elements:
        ci = table.class_of_element(w)
        assert ci == table.classes.class_of[handle.index[w]]


def test_dixon_prime_properties(c3_group):
    handle = c3_group.subgroup((1, 2, 3))
    table = character_table(handle)
    exponent = 1
    for rep in handle.conjugacy_classes().reps:
        exponent = math.lcm(exponent, element_order(rep))
    assert table.prime % exponent == 1
    assert table.prime > 2 * int(math.isqrt(handle.order))


def test_trivial_group(c3_group):
    table = character_table(c3_group.subgroup(()))
    assert table.rows == ((1,),)
    assert table.degrees == (1,)


def test_bound_enforced(c3_group):
    with pytest.raises(GroupTooLarge):
        character_table(c3_group.subgroup((1, 2, 3)), bound=10)
