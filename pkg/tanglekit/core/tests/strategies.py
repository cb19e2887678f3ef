"""hypothesis strategies for small graphs."""

import itertools

from hypothesis import strategies as st

from tanglekit.core import graph


@st.composite
def graphs(draw, min_vertices=1, max_vertices=8):
    num = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    pairs = list(itertools.combinations(range(num), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph.build_graph(num, [pair for pair, kept in zip(pairs, keep) if kept])


@st.composite
def connected_graphs(draw, min_vertices=1, max_vertices=8):
    """A random spanning tree plus random extra edges."""
    num = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    edges = [
        (draw(st.integers(min_value=0, max_value=vtx - 1)), vtx)
        for vtx in range(1, num)
    ]
    pairs = list(itertools.combinations(range(num), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges.extend(pair for pair, kept in zip(pairs, keep) if kept)
    return graph.build_graph(num, edges)


@st.composite
def graphs_with_ends(draw, max_vertices=8):
    """A graph with nonempty, disjoint vertex sets S and T."""
    g = draw(graphs(min_vertices=2, max_vertices=max_vertices))
    order = draw(st.permutations(list(g.vertices)))
    cut = draw(st.integers(min_value=1, max_value=g.vertex_count - 1))
    end = draw(st.integers(min_value=cut + 1, max_value=g.vertex_count))
    return g, frozenset(order[:cut]), frozenset(order[cut:end])
