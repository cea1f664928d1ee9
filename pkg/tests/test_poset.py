"""Construction, validation, and structural queries on labeled posets."""

import pytest
from hypothesis import given

from kposet import (
    CycleDetected,
    DuplicateId,
    LabelOutOfRange,
    UnknownElement,
    build_poset,
    connected_components,
    disjoint_union,
    induced_subposet,
    structure_report,
)

from .conftest import antichain, chain, posets, zag_chain, zig_chain


class TestBuildPoset:
    def test_empty_poset_is_valid(self):
        p = build_poset(1, [], [])
        assert p.n == 0
        assert len(p) == 0
        assert p.elements == ()
        assert p.covers == ()

    def test_four_chain(self):
        p = zig_chain()
        assert p.elements == ("e1", "e2", "e3", "e4")
        assert p.label == {"e1": 0, "e2": 1, "e3": 0, "e4": 2}
        assert p.covers == (("e1", "e2"), ("e2", "e3"), ("e3", "e4"))
        assert len(p.closure) == 6

    def test_redundant_pair_is_reduced(self):
        # (e1, e3) is implied by transitivity; covers stay minimal
        p = build_poset(
            3,
            [("e1", 0), ("e2", 1), ("e3", 0), ("e4", 2)],
            [("e1", "e2"), ("e2", "e3"), ("e3", "e4"), ("e1", "e3")],
        )
        assert p == zig_chain()
        assert p.covers == (("e1", "e2"), ("e2", "e3"), ("e3", "e4"))

    def test_input_order_does_not_matter(self):
        p = build_poset(2, [("b", 1), ("a", 0)], [("a", "b")])
        q = build_poset(2, [("a", 0), ("b", 1)], [("a", "b")])
        assert p == q
        assert hash(p) == hash(q)

    def test_k_must_be_positive(self):
        with pytest.raises(ValueError):
            build_poset(0, [], [])

    def test_duplicate_id(self):
        with pytest.raises(DuplicateId):
            build_poset(2, [("a", 0), ("a", 1)], [])

    def test_label_out_of_range(self):
        with pytest.raises(LabelOutOfRange):
            build_poset(2, [("a", 2)], [])
        with pytest.raises(LabelOutOfRange):
            build_poset(2, [("a", -1)], [])
        with pytest.raises(LabelOutOfRange):
            build_poset(2, [("a", True)], [])  # bools are not labels

    def test_unknown_cover_endpoint(self):
        with pytest.raises(UnknownElement):
            build_poset(2, [("a", 0)], [("a", "b")])

    def test_two_cycle_rejected(self):
        with pytest.raises(CycleDetected):
            build_poset(2, [("a", 0), ("b", 1)], [("a", "b"), ("b", "a")])

    def test_self_pair_rejected(self):
        with pytest.raises(CycleDetected):
            build_poset(2, [("a", 0)], [("a", "a")])

    def test_long_cycle_rejected(self):
        with pytest.raises(CycleDetected):
            build_poset(
                2,
                [("a", 0), ("b", 0), ("c", 0)],
                [("a", "b"), ("b", "c"), ("c", "a")],
            )


class TestQueries:
    def test_le_lt_comparable(self):
        p = zig_chain()
        assert p.le("e1", "e1")
        assert p.le("e1", "e3")  # transitive, not a cover
        assert p.lt("e1", "e3")
        assert not p.lt("e1", "e1")
        assert not p.le("e3", "e1")
        assert p.comparable("e1", "e4")

    def test_incomparable(self):
        p = antichain([0, 0])
        assert not p.comparable("a1", "a2")
        assert p.comparable("a1", "a1")

    def test_unknown_element(self):
        p = zig_chain()
        with pytest.raises(UnknownElement):
            p.index("nope")
        with pytest.raises(UnknownElement):
            p.le("e1", "nope")


class TestInducedSubposet:
    def test_comparability_survives_restriction(self):
        # e1 < e3 holds even though it is not a cover of the chain
        p = induced_subposet(zig_chain(), {"e1", "e3"})
        assert p.elements == ("e1", "e3")
        assert p.label == {"e1": 0, "e3": 0}
        assert p.covers == (("e1", "e3"),)

    def test_full_subset_is_identity(self):
        p = zig_chain()
        assert induced_subposet(p, set(p.elements)) == p

    def test_empty_subset(self):
        p = induced_subposet(zig_chain(), set())
        assert p.n == 0

    def test_unknown_member(self):
        with pytest.raises(UnknownElement):
            induced_subposet(zig_chain(), {"e1", "zz"})


class TestComponents:
    def test_two_chains(self):
        u = disjoint_union([chain([0, 1, 0]), chain([0, 1, 0])])
        parts = connected_components(u)
        assert len(parts) == 2
        assert [c.n for c in parts] == [3, 3]

    def test_connected_poset(self):
        parts = connected_components(zig_chain())
        assert len(parts) == 1
        assert parts[0] == zig_chain()

    def test_empty(self):
        assert connected_components(build_poset(1, [], [])) == []


class TestStructureReport:
    def test_chain(self):
        r = structure_report(zig_chain())
        assert r.is_connected
        assert r.is_chain
        assert r.is_lattice
        assert r.component_count == 1
        assert r.bounds is not None
        assert (r.bounds.top_id, r.bounds.top_label) == ("e4", 2)
        assert (r.bounds.bottom_id, r.bounds.bottom_label) == ("e1", 0)

    def test_antichain(self):
        r = structure_report(antichain([0, 0, 0]))
        assert not r.is_chain
        assert not r.is_lattice
        assert r.bounds is None
        assert r.component_count == 3

    def test_empty_poset(self):
        r = structure_report(build_poset(1, [], []))
        assert not r.is_connected
        assert r.is_chain
        assert r.is_lattice
        assert r.bounds is None
        assert r.component_count == 0

    def test_bounded_but_not_lattice(self):
        # two parallel middle pairs: bounds exist, lub of the pair does not
        p = build_poset(
            2,
            [("bot", 0), ("m1", 0), ("m2", 0), ("n1", 0), ("n2", 0), ("top", 0)],
            [
                ("bot", "m1"),
                ("bot", "m2"),
                ("m1", "n1"),
                ("m1", "n2"),
                ("m2", "n1"),
                ("m2", "n2"),
                ("n1", "top"),
                ("n2", "top"),
            ],
        )
        r = structure_report(p)
        assert r.bounds is not None
        assert not r.is_lattice

    def test_product_counterexample_is_not_a_lattice(self):
        from kposet import label_matching_product

        prod = label_matching_product([zig_chain(), zag_chain()])
        r = structure_report(prod)
        assert not r.is_lattice
        assert r.bounds is None


@given(posets())
def test_closure_is_transitive_and_irreflexive(p):
    pairs = p.closure
    for x, y in pairs:
        assert x != y
        assert (y, x) not in pairs
        for y2, z in pairs:
            if y2 == y:
                assert (x, z) in pairs


@given(posets())
def test_covers_regenerate_the_poset(p):
    q = build_poset(p.k, [(x, p.label[x]) for x in p.elements], list(p.covers))
    assert q == p


@given(posets())
def test_no_cover_is_redundant(p):
    # removing any cover must lose at least one comparability
    for c in p.covers:
        rest = [d for d in p.covers if d != c]
        q = build_poset(p.k, [(x, p.label[x]) for x in p.elements], rest)
        assert c not in q.closure


@given(posets())
def test_components_partition_the_elements(p):
    parts = connected_components(p)
    seen = [x for part in parts for x in part.elements]
    assert sorted(seen) == list(p.elements)
