#! /usr/bin/env python3
""" Tests for graph construction, components, and disjoint paths. """

import unittest

from hypothesis import given, settings
import networkx as nx

from tanglekit.core import errors, fixtures, graph, grid, report
from tanglekit.core.tests import strategies


class TestBuildGraph(unittest.TestCase):
    """ Tests for building graphs. """

    def test_rejects_loops(self):
        """ Loops are rejected. """
        with self.assertRaises(errors.LoopEdge):
            graph.build_graph(2, [(1, 1)])

    def test_rejects_unknown_vertices(self):
        """ Edges to unknown vertices are rejected. """
        with self.assertRaises(errors.VertexOutOfRange):
            graph.build_graph(2, [(0, 2)])

    def test_merges_duplicates(self):
        """ Repeated edges, in either direction, are merged. """
        g = graph.build_graph(3, [(0, 1), (1, 0), (0, 1), (2, 1)])
        self.assertEqual(g.edges, ((0, 1), (1, 2)))
        self.assertEqual(g.neighbors(1), frozenset({0, 2}))

    def test_induced_keeps_labels(self):
        """ Induced subgraphs name their vertices by the parent's ids. """
        w3 = grid.make_grid(3).graph
        sub = w3.induced([4, 1, 5])
        self.assertEqual(sub.labels, (1, 4, 5))
        self.assertEqual(sub.label_edges(), frozenset({(1, 4), (4, 5)}))
        self.assertEqual(sub.local_of(5), 2)
        with self.assertRaises(errors.VertexOutOfRange):
            sub.local_of(0)


class TestComponents(unittest.TestCase):
    """ Tests for components and paths. """

    def test_corner_cut(self):
        """ Cutting off a corner of W_3 leaves two components. """
        w3 = grid.make_grid(3).graph
        self.assertEqual(
            graph.components(w3, {1, 3}),
            [frozenset({0}), frozenset({2, 4, 5, 6, 7, 8})],
        )

    def test_partition(self):
        """ The components of W_3 minus the middle column partition the rest. """
        w3 = grid.make_grid(3).graph
        parts = graph.components(w3, {1, 4, 7})
        self.assertEqual(parts, [frozenset({0, 3, 6}), frozenset({2, 5, 8})])
        self.assertTrue(graph.components_report(w3, {1, 4, 7}, parts).passed)

    def test_broken_partitions(self):
        """ Missing, shared, split, empty, and removed vertices are each reported. """
        w3 = grid.make_grid(3).graph
        cases = [
            [frozenset({0, 3, 6})],
            [frozenset({0, 3, 6}), frozenset({2, 5, 6, 8})],
            [frozenset({0, 6}), frozenset({3}), frozenset({2, 5, 8})],
            [frozenset({0, 3, 6}), frozenset(), frozenset({2, 5, 8})],
            [frozenset({0, 1, 3, 6}), frozenset({2, 5, 8})],
        ]
        for parts in cases:
            rep = graph.components_report(w3, {1, 4, 7}, parts)
            self.assertEqual(
                rep.kinds(), [report.ViolationKind.NOT_A_PARTITION], str(parts)
            )

    def test_is_path(self):
        """ Tests path recognition. """
        w3 = grid.make_grid(3).graph
        self.assertTrue(graph.is_path(w3, (0, 1, 4, 7)))
        self.assertFalse(graph.is_path(w3, (0, 4)))
        self.assertFalse(graph.is_path(w3, (0, 1, 0)))
        self.assertFalse(graph.is_path(w3, ()))


class TestDisjointPaths(unittest.TestCase):
    """ Tests for vertex-disjoint paths. """

    def test_rows_of_w3(self):
        """ The top and bottom rows of W_3 are joined by three disjoint paths. """
        w3 = grid.make_grid(3).graph
        paths = graph.max_disjoint_paths(w3, {0, 1, 2}, {6, 7, 8})
        self.assertEqual(len(paths), 3)
        used = [vtx for path in paths for vtx in path]
        self.assertEqual(len(used), len(set(used)))
        for path in paths:
            self.assertTrue(graph.is_path(w3, path))
            self.assertIn(path[0], {0, 1, 2})
            self.assertIn(path[-1], {6, 7, 8})

    def test_shared_end_is_a_trivial_path(self):
        """ A vertex in both ends is a one-vertex path. """
        paths = graph.max_disjoint_paths(fixtures.path_graph(3), {1}, {1})
        self.assertEqual(paths, [(1,)])

    def test_forbidden_vertices(self):
        """ Paths avoid forbidden vertices. """
        path = fixtures.path_graph(3)
        self.assertEqual(graph.max_disjoint_paths(path, {0}, {2}), [(0, 1, 2)])
        self.assertEqual(graph.max_disjoint_paths(path, {0}, {2}, {1}), [])

    def test_brute_separator(self):
        """ Tests the exhaustive minimum separator. """
        w3 = grid.make_grid(3).graph
        self.assertEqual(graph.brute_min_separator(w3, {0, 1, 2}, {6, 7, 8}), 3)
        # Deleting the source itself separates.
        self.assertEqual(graph.brute_min_separator(w3, {0}, {8}), 1)

    def test_brute_separator_cap(self):
        """ The exhaustive separator refuses large graphs. """
        with self.assertRaises(errors.InstanceTooLarge):
            graph.brute_min_separator(fixtures.path_graph(5), {0}, {4}, vertex_cap=4)

    @settings(max_examples=60, deadline=None)
    @given(strategies.graphs_with_ends(max_vertices=8))
    def test_menger(self, data):
        """ The number of paths equals the minimum separator size. """
        g, sources, sinks = data
        self.assertEqual(
            len(graph.max_disjoint_paths(g, sources, sinks)),
            graph.brute_min_separator(g, sources, sinks),
        )


class TestConnectivity(unittest.TestCase):
    """ Tests for vertex connectivity. """

    def test_known_values(self):
        """ Tests complete graphs, grids, and cycles. """
        self.assertEqual(graph.vertex_connectivity(fixtures.complete_graph(6)), 5)
        self.assertEqual(graph.vertex_connectivity(grid.make_grid(3).graph), 2)
        self.assertEqual(graph.vertex_connectivity(fixtures.cycle_graph(5)), 2)
        self.assertEqual(graph.vertex_connectivity(fixtures.path_graph(4)), 1)
        self.assertEqual(graph.vertex_connectivity(graph.build_graph(3, [(0, 1)])), 0)

    @settings(max_examples=60, deadline=None)
    @given(strategies.graphs(min_vertices=2, max_vertices=8))
    def test_matches_networkx(self, g):
        """ Vertex connectivity agrees with networkx. """
        self.assertEqual(
            graph.vertex_connectivity(g), nx.node_connectivity(g.to_networkx())
        )


if __name__ == "__main__":
    unittest.main()
