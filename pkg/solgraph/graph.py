# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

"""the solubility graph, its invariants and its edge-list format

Adjacency is stored as one bit-packed row per vertex. Vertex ``i`` is the
``i``-th element, in the group's enumeration order, lying outside the
soluble radical.
"""

import logging
from math import comb

import attr
import numpy as np
from clize.util import property_once

from solgraph import errors, solubility

logger = logging.getLogger(__name__)


@attr.s(eq=False)
class SolubilityGraph(object):
    """An undirected graph on ``n`` vertices.

    :param rows: ``uint8`` array of shape ``(n, ceil(n / 8))`` holding the
        adjacency rows packed with `numpy.packbits`.
    :param vertex_elements: The group element of each vertex, or ``None``
        for graphs read from an edge list.
    """

    n = attr.ib()
    rows = attr.ib(repr=False)
    vertex_elements = attr.ib(default=None, repr=False)
    name = attr.ib(default=None)

    @classmethod
    def from_adjacency(cls, adjacency, vertex_elements=None, name=None):
        adjacency = np.asarray(adjacency, dtype=bool)
        n = adjacency.shape[0]
        if adjacency.shape != (n, n):
            raise ValueError("adjacency matrix must be square")
        if (adjacency != adjacency.T).any() or adjacency.diagonal().any():
            raise ValueError("adjacency must be symmetric with a zero "
                             "diagonal")
        return cls(n, np.packbits(adjacency, axis=1), vertex_elements, name)

    @property
    def adjacency(self):
        """Dense boolean adjacency matrix."""
        return np.unpackbits(self.rows, axis=1, count=self.n).astype(bool)

    def neighbors(self, i):
        row = np.unpackbits(self.rows[i], count=self.n)
        return np.flatnonzero(row)

    def has_edge(self, i, j):
        return bool(self.rows[i, j >> 3] & (0x80 >> (j & 7)))

    def degrees(self):
        return np.unpackbits(self.rows, axis=1, count=self.n).sum(axis=1)

    def vertex_of(self, element):
        if self.vertex_elements is None:
            raise ValueError("graph has no element labels")
        try:
            return self._vertex_index[element]
        except KeyError:
            raise errors.NotAVertex(
                "{0} is not a vertex of {1}".format(element, self.name))

    @property_once
    def _vertex_index(self):
        return {x: i for i, x in enumerate(self.vertex_elements)}

    def relabel(self, order):
        """Returns the graph whose vertex ``k`` is this graph's vertex
        ``order[k]``."""
        order = np.asarray(order)
        if sorted(order.tolist()) != list(range(self.n)):
            raise ValueError("not a permutation of the vertices")
        adjacency = self.adjacency[np.ix_(order, order)]
        elements = None
        if self.vertex_elements is not None:
            elements = tuple(self.vertex_elements[i] for i in order)
        return SolubilityGraph.from_adjacency(adjacency, elements, self.name)

    def __eq__(self, other):
        if not isinstance(other, SolubilityGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.rows, other.rows)

    def __ne__(self, other):
        ret = self.__eq__(other)
        return ret if ret is NotImplemented else not ret

    __hash__ = None


def build_graph(ctx):
    """Materializes the solubility graph of the context's group.

    :raises: `.TierError` for soluble groups and outside the full-graph
        tier.
    """
    group = ctx.group
    if ctx.is_soluble:
        raise errors.TierError(
            "{0} is soluble, so its solubility graph has no vertices"
            .format(group))
    if not ctx.full_graph:
        raise errors.TierError(
            "the graph of {0} is outside the full-graph tier".format(group))
    elements = group.elements()
    vertex_of = np.full(len(elements), -1, dtype=np.int64)
    in_radical = set(ctx.radical.elements())
    vertices = []
    for i, x in enumerate(elements):
        if x not in in_radical:
            vertex_of[i] = len(vertices)
            vertices.append(x)
    n = len(vertices)
    adjacency = np.zeros((n, n), dtype=bool)
    for v, x in enumerate(vertices):
        members = np.fromiter(
            solubility.solubilizer_member_indices(ctx, x), dtype=np.int64)
        targets = vertex_of[members]
        adjacency[v, targets[targets >= 0]] = True
        adjacency[v, v] = False
    logger.info("%s: graph with %d vertices", group, n)
    return SolubilityGraph.from_adjacency(adjacency, tuple(vertices),
                                          group.name)


def direct_edge_count(g):
    """Number of set bits in the upper triangle of the adjacency matrix."""
    if g.n == 0:
        return 0
    return int(np.triu(g.adjacency, 1).sum())


def find_triangle(g):
    adjacency = g.adjacency
    a = adjacency.astype(np.float32)
    paths = (a @ a) * a
    hits = np.argwhere(paths > 0)
    if not len(hits):
        return None
    i, j = (int(v) for v in hits[0])
    k = int(np.flatnonzero(adjacency[i] & adjacency[j])[0])
    return tuple(sorted((i, j, k)))


def girth(g):
    """Length of a shortest cycle, or ``None`` for a forest."""
    if find_triangle(g) is not None:
        return 3
    adjacency = g.adjacency
    best = None
    for source in range(g.n):
        dist = np.full(g.n, -1)
        parent = np.full(g.n, -1)
        dist[source] = 0
        queue = [source]
        for u in queue:
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in np.flatnonzero(adjacency[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = int(length)
    return best


def distance_profile(g):
    """Returns ``(is_connected, diameter)`` from powers of the reachability
    matrix. The diameter is ``None`` when the graph is disconnected."""
    if g.n == 0:
        return False, None
    a = g.adjacency.astype(np.float32)
    reach = np.eye(g.n, dtype=bool)
    steps = 0
    while not reach.all():
        grown = reach | ((reach.astype(np.float32) @ a) > 0)
        if (grown == reach).all():
            return False, None
        reach = grown
        steps += 1
    return True, steps


def diameter(g):
    return distance_profile(g)[1]


def find_k4(g):
    """A 4-clique as a sorted vertex tuple, or ``None``."""
    adjacency = g.adjacency
    for u in range(g.n):
        for v in np.flatnonzero(adjacency[u, u + 1:]) + u + 1:
            common = adjacency[u] & adjacency[v]
            common[:v + 1] = False
            for w in np.flatnonzero(common):
                rest = common & adjacency[w]
                rest[:w + 1] = False
                found = np.flatnonzero(rest)
                if len(found):
                    return (u, int(v), int(w), int(found[0]))
    return None


@attr.s(frozen=True)
class GraphMetrics(object):
    """Invariants of a solubility graph."""

    n = attr.ib()
    edge_count = attr.ib()
    degree_sequence = attr.ib(converter=tuple, repr=False)
    girth = attr.ib()
    diameter = attr.ib()
    is_connected = attr.ib()
    has_k4 = attr.ib()
    k4 = attr.ib()
    triangle = attr.ib()
    is_regular = attr.ib()
    dirac_holds = attr.ib()
    ore_bondy_edge_bound_holds = attr.ib()

    @property
    def min_degree(self):
        return self.degree_sequence[-1] if self.degree_sequence else None

    @property
    def max_degree(self):
        return self.degree_sequence[0] if self.degree_sequence else None


def ore_bondy_bound(n):
    """Edge count from which a graph on ``n >= 3`` vertices is
    Hamiltonian."""
    return comb(n - 1, 2) + 2


def metrics(g):
    degrees = sorted((int(d) for d in g.degrees()), reverse=True)
    edge_count = sum(degrees) // 2
    triangle = find_triangle(g) if g.n else None
    connected, diam = distance_profile(g)
    k4 = find_k4(g)
    n = g.n
    ret = GraphMetrics(
        n=n,
        edge_count=edge_count,
        degree_sequence=degrees,
        girth=3 if triangle else girth(g),
        diameter=diam,
        is_connected=connected,
        has_k4=k4 is not None,
        k4=k4,
        triangle=triangle,
        is_regular=len(set(degrees)) <= 1,
        dirac_holds=n >= 3 and 2 * degrees[-1] >= n,
        ore_bondy_edge_bound_holds=n >= 3 and edge_count >= ore_bondy_bound(n),
    )
    logger.debug("%s: %d edges, girth %s, diameter %s",
                 g.name, edge_count, ret.girth, diam)
    return ret


def to_edge_list(g):
    """Text export: an ``n m`` header, then one ``i j`` line per edge with
    ``i < j``, 0-based, sorted."""
    pairs = np.argwhere(np.triu(g.adjacency, 1))
    lines = ['{0} {1}'.format(g.n, len(pairs))]
    lines.extend('{0} {1}'.format(i, j) for i, j in pairs)
    return '\n'.join(lines) + '\n'


def from_edge_list(text, name=None):
    """Reads the format written by `to_edge_list`."""
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines or len(lines[0]) != 2:
        raise ValueError("edge list must start with an 'n m' header")
    n, m = (int(v) for v in lines[0])
    if len(lines) - 1 != m:
        raise ValueError("header announces {0} edges, found {1}".format(
            m, len(lines) - 1))
    adjacency = np.zeros((n, n), dtype=bool)
    for fields in lines[1:]:
        i, j = (int(v) for v in fields)
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise ValueError("invalid edge {0} {1}".format(i, j))
        adjacency[i, j] = adjacency[j, i] = True
    return SolubilityGraph.from_adjacency(adjacency, name=name)
