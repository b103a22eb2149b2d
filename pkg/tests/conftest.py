"""Shared fixtures: fully enumerated contexts for the five standing examples.

Building these is the expensive part of the suite, so they are session scoped
and shared by every test module.
"""

import pytest

from renner.algebra import MonoidAlgebra
from renner.monoid import build_context, enumerate_monoid

SPECS = {
    "a1": ("A", 1, frozenset()),
    "a2": ("A", 2, frozenset({2})),
    "a3": ("A", 3, frozenset({2, 3})),
    "c2": ("C", 2, frozenset({2})),
    "c3": ("C", 3, frozenset({2, 3})),
}

EXPECTED_ORDERS = {"a1": 7, "a2": 34, "a3": 209, "c2": 57, "c3": 757}


@pytest.fixture(scope="session")
def contexts():
    out = {}
    for key, (family, rank, J) in SPECS.items():
        ctx = build_context(family, rank, set(J))
        enumerate_monoid(ctx)
        out[key] = ctx
    return out


@pytest.fixture(scope="session")
def algebras(contexts):
    return {key: MonoidAlgebra(ctx.monoid) for key, ctx in contexts.items()}


@pytest.fixture(scope="session")
def a1(contexts):
    return contexts["a1"]


@pytest.fixture(scope="session")
def a2(contexts):
    return contexts["a2"]


@pytest.fixture(scope="session")
def a3(contexts):
    return contexts["a3"]


@pytest.fixture(scope="session")
def c2(contexts):
    return contexts["c2"]


@pytest.fixture(scope="session")
def c3(contexts):
    return contexts["c3"]
