# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

"""canonical certificates and isomorphism of solubility graphs

Graphs are first reduced by collapsing twin classes: vertices with equal
closed neighbourhoods, then, among the remaining vertices, those with equal
open neighbourhoods. Members of a twin class are interchangeable, so only
the reduced graph, coloured by class size and kind, is canonically labeled.
The labeling search individualizes one vertex of the first smallest
non-singleton colour cell at a time, refines, and keeps the leaf with the
largest encoding. Automorphisms found by meeting an already seen leaf prune
children lying in one orbit.
"""

import hashlib
import logging
import struct

import attr
import numpy as np

from solgraph import errors

logger = logging.getLogger(__name__)


DEFAULT_NODE_BUDGET = 10 ** 6
"""Maximum number of search-tree nodes explored per graph."""

CLOSED = 0
OPEN = 1


def twin_classes(adjacency):
    """Partitions the vertices into twin classes.

    :returns: A list of ``(members, kind)`` pairs ordered by smallest member,
        ``kind`` being `CLOSED` (mutually adjacent twins, and singletons) or
        `OPEN` (mutually non-adjacent twins).
    """
    adjacency = np.asarray(adjacency, dtype=bool)
    n = adjacency.shape[0]
    closed_rows = adjacency | np.eye(n, dtype=bool)
    groups = {}
    for v in range(n):
        groups.setdefault(np.packbits(closed_rows[v]).tobytes(), []).append(v)
    classes = []
    singles = []
    for members in groups.values():
        if len(members) > 1:
            classes.append((tuple(members), CLOSED))
        else:
            singles.append(members[0])
    groups = {}
    for v in singles:
        groups.setdefault(np.packbits(adjacency[v]).tobytes(), []).append(v)
    for members in groups.values():
        classes.append((tuple(members), OPEN if len(members) > 1 else CLOSED))
    classes.sort(key=lambda c: c[0][0])
    return classes


def _compress(colors):
    if not len(colors):
        return np.zeros(0, dtype=np.int64)
    return np.unique(colors, return_inverse=True)[1].reshape(-1)


def refine(adjacency, colors):
    """Color refinement: splits color cells by the number of neighbours in
    each cell until the partition is stable.

    Colors are renumbered by sorting ``(old color, neighbour counts)``, so
    the result does not depend on vertex numbering and a vertex keeps
    sorting before every vertex it was colored before.
    """
    a = np.asarray(adjacency, dtype=np.float32)
    colors = _compress(np.asarray(colors))
    m = len(colors)
    if m == 0:
        return colors
    k = int(colors.max()) + 1
    rows = np.arange(m)
    while True:
        onehot = np.zeros((m, k), dtype=np.float32)
        onehot[rows, colors] = 1
        counts = np.rint(a @ onehot).astype(np.int64)
        signature = np.column_stack([colors, counts])
        _, new = np.unique(signature, axis=0, return_inverse=True)
        new = new.reshape(-1)
        new_k = int(new.max()) + 1
        if new_k == k:
            return new
        colors, k = new, new_k


def individualize(colors, v):
    """Gives ``v`` a color of its own, sorting just before the rest of its
    former cell."""
    ret = np.asarray(colors) * 2 + 1
    ret[v] -= 1
    return _compress(ret)


def target_cell(colors):
    """Vertices of the first smallest non-singleton cell, or ``None`` when
    the coloring is discrete."""
    counts = np.bincount(colors)
    sizes = np.where(counts > 1, counts, np.iinfo(np.int64).max)
    if (counts <= 1).all():
        return None
    color = int(np.argmin(sizes))
    return np.flatnonzero(colors == color)


class _Search(object):
    def __init__(self, adjacency, colors, budget):
        self.adjacency = np.asarray(adjacency, dtype=bool)
        self.a = self.adjacency.astype(np.float32)
        self.initial = colors
        self.budget = budget
        self.nodes = 0
        self.best = None
        self.best_order = None
        self.leaves = {}
        self.automorphisms = []

    def run(self):
        root = refine(self.a, self.initial)
        self.root_colors = root
        self._visit(root, [])
        return self.best_order

    def _leaf(self, colors):
        order = np.argsort(colors, kind='stable')
        encoding = np.packbits(self.adjacency[np.ix_(order, order)]).tobytes()
        seen = self.leaves.get(encoding)
        if seen is not None:
            aut = np.empty_like(order)
            aut[seen] = order
            self.automorphisms.append(aut)
            return
        self.leaves[encoding] = order
        if self.best is None or encoding > self.best:
            self.best = encoding
            self.best_order = order

    def _orbits(self, path, cell):
        parent = {int(v): int(v) for v in cell}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for aut in self.automorphisms:
            if any(aut[p] != p for p in path):
                continue
            for v in cell:
                a, b = find(int(v)), find(int(aut[v]))
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return find

    def _visit(self, colors, path):
        self.nodes += 1
        if self.nodes > self.budget:
            raise errors.IsomorphismBudgetExceeded(
                self.budget, cell_invariants(self.root_colors))
        cell = target_cell(colors)
        if cell is None:
            self._leaf(colors)
            return
        explored = []
        for v in cell:
            v = int(v)
            if explored:
                find = self._orbits(path, cell)
                if any(find(v) == find(u) for u in explored):
                    continue
            explored.append(v)
            child = refine(self.a, individualize(colors, v))
            self._visit(child, path + [v])


def cell_invariants(colors):
    """Summary of a refined coloring: the number of cells and the sorted
    cell sizes."""
    counts = np.bincount(colors) if len(colors) else np.zeros(0, dtype=int)
    return {'cells': len(counts),
            'cell_sizes': sorted((int(c) for c in counts), reverse=True)}


@attr.s(frozen=True)
class GraphCertificate(object):
    """A canonical form of a graph.

    :param bytes encoding: Vertex count as 4 big-endian bytes followed by
        the adjacency matrix, relabeled canonically, packed row-major with
        `numpy.packbits`.
    :param labeling: ``labeling[k]`` is the vertex placed at canonical
        position ``k``.
    :param int nodes: Search-tree nodes explored.
    """

    encoding = attr.ib(repr=False)
    labeling = attr.ib(converter=tuple, repr=False)
    nodes = attr.ib()
    reduced_size = attr.ib()

    def hex(self):
        return self.encoding.hex()

    def digest(self):
        return hashlib.sha256(self.encoding).hexdigest()


def encode(adjacency):
    adjacency = np.asarray(adjacency, dtype=bool)
    return (struct.pack('>I', adjacency.shape[0])
            + np.packbits(adjacency).tobytes())


def _reduce(adjacency):
    classes = twin_classes(adjacency)
    reps = [members[0] for members, _ in classes]
    reduced = adjacency[np.ix_(reps, reps)]
    labels = [(len(members), kind) for members, kind in classes]
    ranks = {label: i for i, label in enumerate(sorted(set(labels)))}
    colors = np.array([ranks[label] for label in labels], dtype=np.int64)
    return classes, reduced, colors


def canonical_certificate(g, budget=DEFAULT_NODE_BUDGET):
    """Canonically labels the graph ``g``.

    :raises: `.IsomorphismBudgetExceeded` when the search needs more than
        ``budget`` nodes.
    """
    adjacency = g.adjacency
    if g.n == 0:
        return GraphCertificate(encode(adjacency), (), 0, 0)
    classes, reduced, colors = _reduce(adjacency)
    search = _Search(reduced, colors, budget)
    order = search.run()
    labeling = [v for k in order for v in classes[k][0]]
    encoding = encode(adjacency[np.ix_(labeling, labeling)])
    logger.debug("%s: %d twin classes, %d search nodes, %d automorphisms",
                 g.name, len(classes), search.nodes,
                 len(search.automorphisms))
    return GraphCertificate(encoding, labeling, search.nodes, len(classes))


def color_histogram(adjacency_a, adjacency_b):
    """Refines the disjoint union of two graphs and returns the color
    histogram of each side."""
    na = adjacency_a.shape[0]
    nb = adjacency_b.shape[0]
    union = np.zeros((na + nb, na + nb), dtype=bool)
    union[:na, :na] = adjacency_a
    union[na:, na:] = adjacency_b
    colors = refine(union, np.zeros(na + nb, dtype=np.int64))
    k = int(colors.max()) + 1 if len(colors) else 0
    return (np.bincount(colors[:na], minlength=k).tolist(),
            np.bincount(colors[na:], minlength=k).tolist())


@attr.s(frozen=True)
class IsomorphismResult(object):
    """Outcome of `are_isomorphic`.

    :param bijection: When isomorphic, ``bijection[i]`` is the vertex of the
        second graph matched with vertex ``i`` of the first.
    :param str reason: Which test decided.
    """

    isomorphic = attr.ib()
    reason = attr.ib()
    bijection = attr.ib(default=None, repr=False)
    certificates = attr.ib(default=None, repr=False)

    def __bool__(self):
        return self.isomorphic


def verify_bijection(adjacency_a, adjacency_b, bijection):
    bijection = np.asarray(bijection)
    return (sorted(bijection.tolist()) == list(range(len(bijection)))
            and np.array_equal(adjacency_a,
                               adjacency_b[np.ix_(bijection, bijection)]))


def are_isomorphic(g1, g2, budget=DEFAULT_NODE_BUDGET, certificates=None):
    """Decides whether two graphs are isomorphic.

    Cheap invariants are compared first. Otherwise canonical certificates
    decide, and a positive answer comes with a vertex bijection that has
    been checked on every pair of vertices.

    :param certificates: Already computed certificates of ``g1`` and
        ``g2``.
    :raises: `.IsomorphismBudgetExceeded`, `.CanonicalizationError`
    """
    if g1.n != g2.n:
        return IsomorphismResult(False, 'vertex count')
    if sorted(g1.degrees().tolist()) != sorted(g2.degrees().tolist()):
        return IsomorphismResult(False, 'degree sequence')
    a1 = g1.adjacency
    a2 = g2.adjacency
    left, right = color_histogram(a1, a2)
    if left != right:
        return IsomorphismResult(False, 'color refinement')
    if certificates is None:
        certificates = (canonical_certificate(g1, budget),
                        canonical_certificate(g2, budget))
    c1, c2 = certificates
    if c1.encoding != c2.encoding:
        return IsomorphismResult(False, 'certificate', None, certificates)
    bijection = np.empty(g1.n, dtype=np.int64)
    bijection[list(c1.labeling)] = list(c2.labeling)
    if not verify_bijection(a1, a2, bijection):
        raise errors.CanonicalizationError(
            "equal certificates for {0} and {1} but the derived bijection "
            "does not preserve adjacency".format(g1.name, g2.name))
    return IsomorphismResult(True, 'certificate',
                             tuple(int(v) for v in bijection), certificates)
