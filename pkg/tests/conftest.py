"""Shared builders and hypothesis strategies for the test suite."""

from __future__ import annotations

from typing import Optional, Sequence

import pytest
from hypothesis import strategies as st

from kposet import LabeledPoset, build_digraph, build_poset
from kposet.hom import clear_cache


@pytest.fixture(autouse=True)
def _fresh_cache():
    # solver memoization is global; isolate tests from each other
    clear_cache()
    yield


def chain(labels: Sequence[int], *, k: Optional[int] = None, prefix: str = "e") -> LabeledPoset:
    """Build a chain e1 < e2 < ... with the given labels."""
    kk = k if k is not None else max(labels, default=0) + 1
    ids = [f"{prefix}{i + 1}" for i in range(len(labels))]
    covers = list(zip(ids, ids[1:]))
    return build_poset(kk, list(zip(ids, labels)), covers)


def antichain(labels: Sequence[int], *, k: Optional[int] = None, prefix: str = "a") -> LabeledPoset:
    kk = k if k is not None else max(labels, default=0) + 1
    return build_poset(kk, [(f"{prefix}{i + 1}", l) for i, l in enumerate(labels)], [])


# the two 4-chains whose product is the standard 5-element counterexample
def zig_chain() -> LabeledPoset:
    return chain([0, 1, 0, 2], k=3, prefix="e")


def zag_chain() -> LabeledPoset:
    return chain([1, 0, 1, 2], k=3, prefix="f")


def loop_graph():
    return build_digraph(["v"], [("v", "v")])


def square_graph():
    # 4 vertices, 5 edges, one symmetric pair
    return build_digraph(
        ["a", "b", "c", "d"],
        [("a", "b"), ("a", "d"), ("c", "d"), ("b", "c"), ("c", "b")],
    )


@st.composite
def posets(draw, max_n: int = 5, max_k: int = 3) -> LabeledPoset:
    """Random labeled poset; relation is generated acyclic by construction."""
    n = draw(st.integers(min_value=0, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=max_k))
    labels = draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n))
    ids = [f"x{i}" for i in range(n)]
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))),
            max_size=2 * n,
        )
    )
    covers = [(ids[i], ids[j]) for i, j in pairs if i < j < n]
    return build_poset(k, list(zip(ids, labels)), covers)


@st.composite
def digraphs(draw, max_n: int = 4):
    n = draw(st.integers(min_value=0, max_value=max_n))
    ids = [f"u{i}" for i in range(n)]
    edges = draw(
        st.lists(
            st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))),
            max_size=n * n,
        )
    )
    return build_digraph(ids, [(ids[i], ids[j]) for i, j in edges if i < n and j < n])
