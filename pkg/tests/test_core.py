import pytest
from hypothesis import given, strategies as st

from bitrans import (
    BiInstance,
    BitSet,
    Hypergraph,
    SolutionSet,
    bit_indices,
    blue_star,
    f_predicate,
    hit_edges,
    is_transversal,
    minimize_within,
    s_of_b,
)
from conftest import U, V, W, X, B1, B2, B3, bi_instances, hypergraphs


def test_bit_indices_ascending():
    assert list(bit_indices(0)) == []
    assert list(bit_indices(0b101001)) == [0, 3, 5]


class TestBitSet:
    def test_construction_and_iteration(self):
        s = BitSet([3, 0, 5])
        assert s.mask == 0b101001
        assert list(s) == [0, 3, 5]
        assert s.members == (0, 3, 5)
        assert len(s) == 3
        assert 3 in s and 1 not in s

    def test_from_mask(self):
        assert BitSet.from_mask(0b110) == BitSet([1, 2])
        with pytest.raises(ValueError):
            BitSet.from_mask(-1)

    def test_rejects_bad_members(self):
        with pytest.raises(ValueError):
            BitSet([-1])
        with pytest.raises(ValueError):
            BitSet([(0,)])

    def test_subset_operators_follow_frozenset(self):
        a, b = BitSet([0, 1]), BitSet([0, 1, 2])
        assert a <= b and a < b and b >= a and b > a
        assert not (b <= a)
        c = BitSet([0, 3])
        # incomparable: all four strict/loose comparisons are false
        assert not (a <= c) and not (c <= a) and not (a < c) and not (c < a)

    def test_set_algebra(self):
        a, b = BitSet([0, 1, 2]), BitSet([1, 3])
        assert a & b == BitSet([1])
        assert a | b == BitSet([0, 1, 2, 3])
        assert a - b == BitSet([0, 2])
        assert a.isdisjoint(BitSet([3]))
        assert not a.isdisjoint(b)

    def test_hashable_and_eq(self):
        assert {BitSet([1, 2]): "x"}[BitSet([2, 1])] == "x"
        assert BitSet() == BitSet([])
        assert BitSet([0]) != BitSet([1])


class TestSolutionSet:
    def test_canonical_order(self):
        s = SolutionSet([BitSet([1, 3]), BitSet([0, 2]), BitSet([0, 1])])
        assert [t.members for t in s] == [(0, 1), (0, 2), (1, 3)]

    def test_rejects_duplicates_and_comparable(self):
        with pytest.raises(ValueError):
            SolutionSet([BitSet([0]), BitSet([0])])
        with pytest.raises(ValueError):
            SolutionSet([BitSet([0]), BitSet([0, 1])])

    def test_minimal_reduces(self):
        s = SolutionSet.minimal([BitSet([0, 1]), BitSet([0]), BitSet([1, 2]), BitSet([0, 1, 2])])
        assert [t.members for t in s] == [(0,), (1, 2)]

    def test_membership_and_len(self):
        s = SolutionSet([BitSet([0]), BitSet([1, 2])])
        assert BitSet([0]) in s and BitSet([2]) not in s
        assert len(s) == 2


class TestHypergraph:
    def test_validation(self):
        with pytest.raises(ValueError):
            Hypergraph(2, (BitSet([5]),))
        with pytest.raises(ValueError):
            Hypergraph(2, (), labels=("a",))
        with pytest.raises(ValueError):
            Hypergraph(2, (), labels=("a", "a"))

    def test_edge_coercion(self):
        h = Hypergraph(3, ([0, 2], [1]))
        assert all(isinstance(e, BitSet) for e in h.edges)

    def test_dimension_degree_star(self, running_example):
        red = running_example.red
        assert red.dimension() == 3
        assert red.degree(U) == 2 and red.degree(W) == 1
        assert red.star(V) == BitSet([1, 2])
        assert Hypergraph(3).dimension() == 0

    def test_normalized_dedups_keep_first(self):
        h = Hypergraph(3, ([0, 1], [2], [0, 1], [2]))
        assert Hypergraph(3, ([0, 1], [2])) == h.normalized()

    def test_minimal_edges(self):
        h = Hypergraph(4, ([0, 1, 2], [0, 1], [3], [0, 1]))
        assert [e.members for e in h.minimal_edges()] == [(0, 1), (3,)]

    def test_has_empty_edge(self):
        assert Hypergraph(2, ([],)).has_empty_edge()
        assert not Hypergraph(2, ([0],)).has_empty_edge()


class TestBiInstance:
    def test_universe_must_match(self):
        with pytest.raises(ValueError):
            BiInstance(Hypergraph(2), Hypergraph(3))

    def test_from_edges(self, running_example):
        assert running_example.vertex_count == 4
        assert running_example.red.edges[0] == BitSet([U, X])
        assert running_example.blue.edges[2] == BitSet([X])
        assert running_example.labels == ("u", "v", "w", "x")


def test_is_transversal_and_hit_edges(running_example):
    assert is_transversal(BitSet([U, W]), running_example.red)
    assert not is_transversal(BitSet([U]), running_example.red)
    assert hit_edges(BitSet([U, W]), running_example.blue) == BitSet([B1])
    assert hit_edges(BitSet([X]), running_example.blue) == BitSet([B2, B3])
    # the empty set is a transversal of an edge-less hypergraph only
    assert is_transversal(BitSet(), Hypergraph(3))
    assert not is_transversal(BitSet(), Hypergraph(3, ([0],)))


def test_blue_star(running_example):
    assert blue_star(U, running_example) == BitSet([B1])
    assert blue_star(V, running_example) == BitSet([B1, B2])
    assert blue_star(W, running_example) == BitSet([B1])
    assert blue_star(X, running_example) == BitSet([B2, B3])


def test_s_of_b_examples(running_example):
    assert s_of_b(BitSet([B1]), running_example) == BitSet([U, W])
    assert s_of_b(BitSet([B2]), running_example) == BitSet()
    assert s_of_b(BitSet([B2, B3]), running_example) == BitSet([X])
    assert s_of_b(BitSet([B1, B2, B3]), running_example) == BitSet([U, V, W, X])


def test_f_predicate(running_example):
    assert f_predicate(BitSet([B1]), running_example)
    assert not f_predicate(BitSet([B2, B3]), running_example)
    assert f_predicate(BitSet([B1, B2, B3]), running_example)


def test_minimize_within_removes_highest_first(running_example):
    assert minimize_within(BitSet([U, V, W, X]), running_example.red) == BitSet([U, V])
    assert minimize_within(BitSet([U, W]), running_example.red) == BitSet([U, W])
    with pytest.raises(ValueError):
        minimize_within(BitSet([U]), running_example.red)  # not a transversal to begin with


@given(bi_instances())
def test_s_of_b_membership_equivalence(inst):
    for mask in range(1 << len(inst.blue.edges)):
        b = BitSet.from_mask(mask)
        sb = s_of_b(b, inst)
        for x in range(inst.vertex_count):
            assert (x in sb) == (blue_star(x, inst) <= b)


@given(bi_instances())
def test_f_predicate_is_monotone(inst):
    m = len(inst.blue.edges)
    for mask in range(1 << m):
        if f_predicate(BitSet.from_mask(mask), inst):
            for j in range(m):
                assert f_predicate(BitSet.from_mask(mask | (1 << j)), inst)


@given(hypergraphs(), st.integers(min_value=0, max_value=255))
def test_minimize_within_yields_minimal_transversal(h, raw):
    s = BitSet.from_mask(raw & ((1 << h.vertex_count) - 1))
    if not is_transversal(s, h):
        return
    m = minimize_within(s, h)
    assert m <= s
    assert is_transversal(m, h)
    for v in m:
        assert not is_transversal(m - BitSet([v]), h)
