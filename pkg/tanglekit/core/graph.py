"""Graphs, connectivity, and vertex-disjoint paths.

A Graph has vertex ids 0..vertex_count-1. A graph that lives inside a larger one (G - A,
a vortex, G0) additionally carries labels: labels[v] is the id of vertex v in the host.
Plain graphs are labelled by their own ids.
"""

import itertools
import logging
import typing

import networkx as nx

from tanglekit.core import defaults, errors, report, utils


# A path is an ordered tuple of distinct vertex ids.
Path = typing.Tuple[int, ...]

# Terminal nodes of the split-vertex flow network.
_SOURCE = "source"
_SINK = "sink"


class Graph:
    """An immutable simple undirected graph.

    Construct through build_graph() (validating) or Graph.from_labelled(). The
    constructor itself assumes normalized, validated edges.
    """

    def __init__(self, vertex_count, edges, labels=None):
        self.vertex_count = vertex_count
        # Each edge is a pair (u, v) with u < v.
        self.edges = tuple(sorted(edges))
        adj: typing.List[typing.Set[int]] = [set() for _ in range(vertex_count)]
        for src, dst in self.edges:
            adj[src].add(dst)
            adj[dst].add(src)
        self.adjacency = tuple(frozenset(nbrs) for nbrs in adj)
        self.labels = (
            tuple(range(vertex_count)) if labels is None else tuple(labels)
        )
        assert len(self.labels) == vertex_count, "One label per vertex is required."
        self._index = {label: vtx for vtx, label in enumerate(self.labels)}
        assert len(self._index) == vertex_count, "Labels must be distinct."

    @staticmethod
    def from_labelled(vertex_labels, label_edges):
        """Build a graph whose vertices are named by arbitrary distinct host ids."""
        labels = sorted(set(vertex_labels))
        index = {label: vtx for vtx, label in enumerate(labels)}
        edges = set()
        for src, dst in label_edges:
            if src == dst:
                raise errors.LoopEdge(f"Loop at vertex {src}")
            if src not in index or dst not in index:
                raise errors.VertexOutOfRange(
                    f"Edge ({src}, {dst}) leaves the vertex set {labels}"
                )
            src, dst = index[src], index[dst]
            edges.add((min(src, dst), max(src, dst)))
        return Graph(len(labels), edges, labels)

    @property
    def vertices(self):
        return range(self.vertex_count)

    @property
    def num_edges(self):
        return len(self.edges)

    def neighbors(self, vtx):
        return self.adjacency[vtx]

    def degree(self, vtx):
        return len(self.adjacency[vtx])

    def degrees(self):
        return [len(nbrs) for nbrs in self.adjacency]

    def min_degree(self):
        return min(self.degrees()) if self.vertex_count else 0

    def has_edge(self, src, dst):
        return dst in self.adjacency[src]

    def is_complete(self):
        return self.num_edges == self.vertex_count * (self.vertex_count - 1) // 2

    def is_connected(self):
        if self.vertex_count == 0:
            return False
        return nx.is_connected(self.to_networkx())

    def label_of(self, vtx):
        return self.labels[vtx]

    def labels_of(self, vertices):
        return frozenset(self.labels[vtx] for vtx in vertices)

    def has_label(self, label):
        return label in self._index

    def local_of(self, label):
        if label not in self._index:
            raise errors.VertexOutOfRange(f"Vertex {label} is not in this graph")
        return self._index[label]

    def locals_of(self, labels):
        return frozenset(self.local_of(label) for label in labels)

    def label_edges(self):
        """Edges named by labels, each as a (smaller, larger) pair."""
        pairs = ((self.labels[src], self.labels[dst]) for src, dst in self.edges)
        return frozenset((min(pair), max(pair)) for pair in pairs)

    def label_neighbors(self, label):
        return self.labels_of(self.adjacency[self.local_of(label)])

    def induced(self, keep):
        """The subgraph induced by keep (local ids), relabelled to 0..len(keep)-1.

        Vertex i of the result is the i-th smallest id in keep; its label is the label
        that vertex had here.
        """
        keep = sorted(set(keep))
        index = {vtx: idx for idx, vtx in enumerate(keep)}
        edges = [
            (index[src], index[dst])
            for src, dst in self.edges
            if src in index and dst in index
        ]
        return Graph(len(keep), edges, [self.labels[vtx] for vtx in keep])

    def to_networkx(self, labelled=False):
        """A fresh networkx.Graph copy; nodes are labels if labelled is True."""
        nxg = nx.Graph()
        if labelled:
            nxg.add_nodes_from(self.labels)
            nxg.add_edges_from(
                (self.labels[src], self.labels[dst]) for src, dst in self.edges
            )
        else:
            nxg.add_nodes_from(range(self.vertex_count))
            nxg.add_edges_from(self.edges)
        return nxg

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edges, self.labels))

    def __repr__(self):
        return f"Graph(n={self.vertex_count}, m={self.num_edges})"


def build_graph(vertex_count, edges):
    """Validate and build a graph on the vertex ids 0..vertex_count-1.

    Duplicate edges (in either orientation) are merged.
    """
    if vertex_count < 0:
        raise errors.VertexOutOfRange(
            f"The vertex count cannot be negative, but is: {vertex_count}"
        )
    normalized = set()
    for src, dst in edges:
        if src == dst:
            raise errors.LoopEdge(f"Loop at vertex {src}")
        for vtx in (src, dst):
            if not 0 <= vtx < vertex_count:
                raise errors.VertexOutOfRange(
                    f"Vertex {vtx} is outside 0..{vertex_count - 1}"
                )
        normalized.add((min(src, dst), max(src, dst)))
    return Graph(vertex_count, normalized)


def is_path(g, vertices):
    """Whether vertices is a path of g: distinct, consecutive ones adjacent."""
    if not vertices or len(set(vertices)) != len(vertices):
        return False
    if any(not 0 <= vtx < g.vertex_count for vtx in vertices):
        return False
    return all(g.has_edge(src, dst) for src, dst in zip(vertices, vertices[1:]))


def components(g, removed=frozenset()):
    """The components of g - removed, ordered by their smallest vertex."""
    nxg = g.to_networkx()
    nxg.remove_nodes_from(removed)
    return sorted((frozenset(comp) for comp in nx.connected_components(nxg)), key=min)


def components_report(g, removed, parts):
    """Check that parts are the components of g - removed.

    The parts must be nonempty, pairwise disjoint and connected, must cover every
    vertex outside removed, and no edge may join two of them.
    """
    rep = report.Report("components")
    rep.checked = 1
    kind = report.ViolationKind.NOT_A_PARTITION
    removed = frozenset(removed)
    owner: typing.Dict[int, int] = {}
    nxg = g.to_networkx()
    for idx, part in enumerate(parts):
        if not part:
            rep.add(kind, f"part {idx} is empty", (idx,))
            continue
        for vtx in sorted(part):
            if vtx in owner:
                rep.add(
                    kind, f"vertex {vtx} is in parts {owner[vtx]} and {idx}", (vtx,)
                )
            owner[vtx] = idx
        if part & removed:
            rep.add(kind, f"part {idx} meets the removed vertices", (idx,))
        elif not nx.is_connected(nxg.subgraph(part)):
            rep.add(kind, f"part {idx} is not connected", (idx,))
    missing = set(g.vertices) - removed - set(owner)
    if missing:
        rep.add(kind, f"vertices {utils.set_to_str(missing)} are in no part")
    for src, dst in g.edges:
        if src in owner and dst in owner and owner[src] != owner[dst]:
            rep.add(
                kind,
                f"edge ({src}, {dst}) joins parts {owner[src]} and {owner[dst]}",
                (src, dst),
            )
    return rep


def max_disjoint_paths(g, sources, sinks, forbidden=frozenset()):
    """A maximum set of pairwise vertex-disjoint sources-sinks paths avoiding forbidden.

    Each path meets sources only in its first vertex and sinks only in its last one; a
    vertex of sources & sinks yields a trivial one-vertex path. By Menger's theorem the
    number of paths equals the smallest number of vertices meeting every such path.
    Computed as a unit max-flow on the split-vertex digraph (v_in -> v_out has
    capacity 1).
    """
    sources, sinks = frozenset(sources), frozenset(sinks)
    forbidden = frozenset(forbidden)
    assert sources and sinks, "Sources and sinks must be nonempty."
    assert not forbidden & (sources | sinks), "Forbidden vertices must avoid the ends."

    dig = nx.DiGraph()
    dig.add_nodes_from([_SOURCE, _SINK])
    for vtx in g.vertices:
        if vtx not in forbidden:
            dig.add_edge((vtx, 0), (vtx, 1), capacity=1)
    for src, dst in g.edges:
        if src in forbidden or dst in forbidden:
            continue
        dig.add_edge((src, 1), (dst, 0), capacity=1)
        dig.add_edge((dst, 1), (src, 0), capacity=1)
    for vtx in sorted(sources):
        dig.add_edge(_SOURCE, (vtx, 0), capacity=1)
    for vtx in sorted(sinks):
        dig.add_edge((vtx, 1), _SINK, capacity=1)

    _, flow = nx.maximum_flow(dig, _SOURCE, _SINK)

    paths = []
    for start in sorted(sources):
        if flow[_SOURCE].get((start, 0), 0) < 1:
            continue
        walk = [start]
        node = (start, 1)
        while True:
            nxt = next(dst for dst, amt in flow[node].items() if amt > 0)
            flow[node][nxt] -= 1
            if nxt == _SINK:
                break
            walk.append(nxt[0])
            node = (nxt[0], 1)
        # Trim so that the path meets sources and sinks only at its ends.
        first = max(idx for idx, vtx in enumerate(walk) if vtx in sources)
        last = next(idx for idx in range(first, len(walk)) if walk[idx] in sinks)
        paths.append(tuple(walk[first : last + 1]))
    return sorted(paths)


def _reaches(adj_masks, start, target, removed):
    """Bitmask BFS: whether any vertex of start reaches target in g - removed."""
    seen = start & ~removed
    frontier = seen
    while frontier:
        if seen & target:
            return True
        nbrs = 0
        rest = frontier
        while rest:
            low = rest & -rest
            nbrs |= adj_masks[low.bit_length() - 1]
            rest ^= low
        frontier = nbrs & ~seen & ~removed
        seen |= frontier
    return bool(seen & target)


def brute_min_separator(g, sources, sinks, vertex_cap=None):
    """The minimum number of vertices whose deletion separates sources from sinks.

    The deleted set may contain sources and sinks. Exhaustive subset search; serves as
    an independent oracle for max_disjoint_paths().
    """
    vertex_cap = defaults.DEFAULTS["vertex_cap"] if vertex_cap is None else vertex_cap
    if g.vertex_count > vertex_cap:
        raise errors.InstanceTooLarge(
            f"Exhaustive separator search is capped at {vertex_cap} vertices, "
            f"but the graph has {g.vertex_count}"
        )
    adj_masks = [utils.to_mask(g.neighbors(vtx)) for vtx in g.vertices]
    src_mask, snk_mask = utils.to_mask(sources), utils.to_mask(sinks)
    for size in range(g.vertex_count + 1):
        for removed in itertools.combinations(g.vertices, size):
            rem_mask = utils.to_mask(removed)
            if not _reaches(adj_masks, src_mask, snk_mask & ~rem_mask, rem_mask):
                return size
    raise AssertionError("Deleting every vertex always separates.")


def local_connectivity(g, src, dst):
    """The number of internally disjoint src-dst paths, for non-adjacent src, dst."""
    assert src != dst, "Ends must be distinct."
    assert not g.has_edge(src, dst), "Ends must be non-adjacent."
    src_nbrs, dst_nbrs = g.neighbors(src), g.neighbors(dst)
    if not src_nbrs or not dst_nbrs:
        return 0
    return len(max_disjoint_paths(g, src_nbrs, dst_nbrs, {src, dst}))


def vertex_connectivity(g):
    """kappa(g): n - 1 for complete graphs, else the minimum local connectivity."""
    if g.is_complete():
        return max(g.vertex_count - 1, 0)
    best = g.vertex_count - 1
    for src, dst in itertools.combinations(g.vertices, 2):
        if not g.has_edge(src, dst):
            best = min(best, local_connectivity(g, src, dst))
            if best == 0:
                break
    logging.debug("Vertex connectivity of %r: %d", g, best)
    return best
