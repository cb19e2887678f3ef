"""The r x r grid W_r, its rows, columns, and crosses.

Vertex (i, j), with 1 <= i, j <= r, has id (i - 1) * r + (j - 1). Row 1 is drawn on top.
"""

import numpy as np

from tanglekit.core import graph, surface


class GridGraph:
    """W_r together with its coordinate map."""

    def __init__(self, r):
        assert r >= 1, f"The grid size must be at least 1, but is: {r}"
        self.r = r
        edges = []
        for i in range(1, r + 1):
            for j in range(1, r + 1):
                if j < r:
                    edges.append((self.vertex(i, j), self.vertex(i, j + 1)))
                if i < r:
                    edges.append((self.vertex(i, j), self.vertex(i + 1, j)))
        self.graph = graph.build_graph(r * r, edges)

    def vertex(self, i, j):
        return (i - 1) * self.r + (j - 1)

    def coord(self, vtx):
        return (vtx // self.r + 1, vtx % self.r + 1)

    def row(self, i):
        return frozenset(self.vertex(i, j) for j in range(1, self.r + 1))

    def column(self, j):
        return frozenset(self.vertex(i, j) for i in range(1, self.r + 1))

    def cross(self, i, j):
        return self.row(i) | self.column(j)

    def contains_cross(self, side):
        return contains_cross(self, side)

    def __repr__(self):
        return f"GridGraph(r={self.r})"


def make_grid(r):
    return GridGraph(r)


def contains_cross(w, side):
    """Whether side contains some row together with some column.

    A row and a column always meet, so it suffices that some full row and some full
    column lie in side.
    """
    mask = np.zeros(w.r * w.r, dtype=bool)
    ids = [vtx for vtx in side if 0 <= vtx < w.r * w.r]
    mask[ids] = True
    mask = mask.reshape(w.r, w.r)
    return bool(mask.all(axis=1).any() and mask.all(axis=0).any())


def planar_rotation(w):
    """The straight-line plane embedding of W_r.

    Each vertex lists its neighbors counterclockwise starting from the east.
    """
    rotation = []
    for vtx in w.graph.vertices:
        i, j = w.coord(vtx)
        nbrs = []
        for d_i, d_j in [(0, 1), (-1, 0), (0, -1), (1, 0)]:
            if 1 <= i + d_i <= w.r and 1 <= j + d_j <= w.r:
                nbrs.append(w.vertex(i + d_i, j + d_j))
        rotation.append(tuple(nbrs))
    return surface.RotationSystem(w.graph, rotation)
