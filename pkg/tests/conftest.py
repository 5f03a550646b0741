import pytest
from hypothesis import strategies as st

from bitrans import BiInstance, BitSet, Formula3, Hypergraph

# vertex and blue-edge indices of the running four-vertex example
U, V, W, X = range(4)
B1, B2, B3 = range(3)


def make_running_example() -> BiInstance:
    return BiInstance.from_edges(
        4,
        [[U, X], [U, V], [V, W, X]],
        [[U, V, W], [V, X], [X]],
        labels=["u", "v", "w", "x"],
    )


RUNNING_EXAMPLE_TEXT = """\
vertices: u v w x
red: u x
red: u v
red: v w x
blue: u v w
blue: v x
blue: x
"""

RUNNING_FORMULA = "(c1 | (c2 & c3)) & (c1 | (c1 & c2)) & ((c1 & c2) | c1 | (c2 & c3))"


@pytest.fixture
def running_example() -> BiInstance:
    return make_running_example()


@st.composite
def hypergraphs(draw, max_vertices: int = 8, max_edges: int = 6, min_edge_size: int = 1):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    lo = 0 if min_edge_size == 0 else 1
    masks = draw(
        st.lists(st.integers(min_value=lo, max_value=(1 << n) - 1), min_size=1, max_size=max_edges)
    )
    return Hypergraph(n, tuple(BitSet.from_mask(k) for k in masks))


@st.composite
def bi_instances(draw, max_vertices: int = 7, max_red: int = 4, max_blue: int = 5):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    red = draw(
        st.lists(st.integers(min_value=1, max_value=(1 << n) - 1), min_size=1, max_size=max_red)
    )
    blue = draw(
        st.lists(st.integers(min_value=0, max_value=(1 << n) - 1), min_size=0, max_size=max_blue)
    )
    return BiInstance(
        Hypergraph(n, tuple(BitSet.from_mask(k) for k in red)),
        Hypergraph(n, tuple(BitSet.from_mask(k) for k in blue)),
    )


@st.composite
def formulas(draw, max_variables: int = 5, max_clauses: int = 4, max_terms: int = 3):
    nv = draw(st.integers(min_value=1, max_value=max_variables))
    clauses = draw(
        st.lists(
            st.lists(
                st.integers(min_value=0, max_value=(1 << nv) - 1),
                min_size=1,
                max_size=max_terms,
            ),
            min_size=1,
            max_size=max_clauses,
        )
    )
    return Formula3(
        nv, tuple(tuple(BitSet.from_mask(k) for k in cl) for cl in clauses)
    )
