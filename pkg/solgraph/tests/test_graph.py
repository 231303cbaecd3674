# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

import random

import numpy as np

from solgraph import catalog, errors, graph, permgroup, solubility
from solgraph.graph import SolubilityGraph
from solgraph.tests.util import Fixtures, Tests, shared_session


def from_edges(n, edges, name=None):
    adjacency = np.zeros((n, n), dtype=bool)
    for i, j in edges:
        adjacency[i, j] = adjacency[j, i] = True
    return SolubilityGraph.from_adjacency(adjacency, name=name)


def cycle(n):
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


class MetricsTests(Fixtures):
    def _test(self, g, edges, girth, diameter, connected, k4, regular, dirac,
              ore_bondy):
        m = graph.metrics(g)
        self.assertEqual(m.edge_count, edges)
        self.assertEqual(graph.direct_edge_count(g), edges)
        self.assertEqual(m.girth, girth)
        self.assertEqual(m.diameter, diameter)
        self.assertEqual(m.is_connected, connected)
        self.assertEqual(m.has_k4, k4)
        self.assertEqual(m.is_regular, regular)
        self.assertEqual(m.dirac_holds, dirac)
        self.assertEqual(m.ore_bondy_edge_bound_holds, ore_bondy)

    k4 = complete(4), 6, 3, 1, True, True, True, True, True
    k5 = complete(5), 10, 3, 1, True, True, True, True, True
    c4 = cycle(4), 4, 4, 2, True, False, True, True, False
    c5 = cycle(5), 5, 5, 2, True, False, True, False, False
    path = from_edges(4, [(0, 1), (1, 2), (2, 3)]), \
        3, None, 3, True, False, False, False, False
    two_edges = from_edges(4, [(0, 1), (2, 3)]), \
        2, None, None, False, False, True, False, False
    triangle_with_tail = from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]), \
        4, 3, 2, True, False, False, False, False


class SmallGraphTests(Tests):
    def test_triangle_witness(self):
        g = from_edges(5, [(0, 1), (1, 3), (3, 4), (1, 4)])
        self.assertEqual(graph.find_triangle(g), (1, 3, 4))
        self.assertIsNone(graph.find_triangle(cycle(6)))

    def test_k4_witness(self):
        g = complete(5)
        self.assertEqual(graph.find_k4(g), (0, 1, 2, 3))
        self.assertIsNone(graph.find_k4(cycle(6)))

    def test_girth_of_long_cycles(self):
        self.assertEqual(graph.girth(cycle(7)), 7)
        g = from_edges(8, [(i, (i + 1) % 6) for i in range(6)]
                       + [(6, 7), (7, 0)])
        self.assertEqual(graph.girth(g), 6)

    def test_has_edge_and_neighbors(self):
        g = from_edges(10, [(0, 9), (3, 8), (8, 9)])
        self.assertTrue(g.has_edge(0, 9))
        self.assertTrue(g.has_edge(9, 0))
        self.assertFalse(g.has_edge(0, 8))
        self.assertEqual(g.neighbors(9).tolist(), [0, 8])
        self.assertEqual(g.degrees().tolist(),
                         [1, 0, 0, 1, 0, 0, 0, 0, 2, 2])

    def test_rejects_bad_adjacency(self):
        self.assertRaises(ValueError, SolubilityGraph.from_adjacency,
                          np.ones((3, 3), dtype=bool))
        self.assertRaises(ValueError, SolubilityGraph.from_adjacency,
                          np.array([[0, 1], [0, 0]], dtype=bool))
        self.assertRaises(ValueError, SolubilityGraph.from_adjacency,
                          np.zeros((2, 3), dtype=bool))

    def test_relabel(self):
        g = from_edges(4, [(0, 1), (1, 2), (2, 3)])
        order = [2, 0, 3, 1]
        h = g.relabel(order)
        for k in range(4):
            for l in range(4):
                self.assertEqual(h.has_edge(k, l),
                                 g.has_edge(order[k], order[l]))
        self.assertRaises(ValueError, g.relabel, [0, 0, 1, 2])

    def test_equality(self):
        self.assertEqual(cycle(5), cycle(5))
        self.assertNotEqual(cycle(5), complete(5))
        self.assertNotEqual(cycle(5), cycle(6))


class EdgeListTests(Tests):
    def test_format(self):
        self.assertEqual(graph.to_edge_list(cycle(5)),
                         '5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n')
        self.assertEqual(graph.to_edge_list(from_edges(3, [])), '3 0\n')

    def test_read_back(self):
        g = cycle(9)
        self.assertEqual(graph.from_edge_list(graph.to_edge_list(g)), g)

    def test_errors(self):
        self.assertRaises(ValueError, graph.from_edge_list, '')
        self.assertRaises(ValueError, graph.from_edge_list, '3 2\n0 1\n')
        self.assertRaises(ValueError, graph.from_edge_list, '3 1\n1 1\n')
        self.assertRaises(ValueError, graph.from_edge_list, '3 1\n0 3\n')


class SolubilityGraphTests(Tests):
    def test_a5(self):
        s = shared_session()
        g = s.graph('A5')
        self.assertEqual(g.n, 59)
        self.assertEqual(graph.direct_edge_count(g), 571)
        m = s.metrics('A5')
        self.assertEqual(m.girth, 3)
        self.assertTrue(m.is_connected)
        self.assertLessEqual(m.diameter, 5)
        self.assertTrue(m.has_k4)
        self.assertFalse(m.is_regular)
        self.assertEqual(m.min_degree, 8)

    def test_adjacency_matches_pair_tests(self):
        g = shared_session().graph('A5')
        elements = g.vertex_elements
        for i in range(g.n):
            for j in range(i + 1, g.n):
                self.assertEqual(
                    g.has_edge(i, j),
                    permgroup.generates_soluble((elements[i], elements[j])))

    def test_k4_and_triangle_are_cliques(self):
        s = shared_session()
        for spec in ('A5', 'SL(2,5)', 'PSL(2,7)'):
            g = s.graph(spec)
            m = s.metrics(spec)
            for clique in (m.k4, m.triangle):
                for a in clique:
                    for b in clique:
                        if a != b:
                            self.assertTrue(g.has_edge(a, b))

    def test_radical_elements_are_excluded(self):
        s = shared_session()
        g = s.graph('SL(2,5)')
        self.assertEqual(g.n, 118)
        radical = s.context('SL(2,5)').radical
        self.assertFalse(any(radical.contains(x) for x in g.vertex_elements))
        x = g.vertex_elements[10]
        self.assertEqual(g.vertex_of(x), 10)
        self.assertRaises(errors.NotAVertex, g.vertex_of,
                          radical.identity())

    def test_degrees_match_formula(self):
        s = shared_session()
        ctx = s.context('C3 x A5')
        g = s.graph('C3 x A5')
        degrees = g.degrees()
        for v in range(0, g.n, 7):
            self.assertEqual(int(degrees[v]), solubility.vertex_degree(
                ctx, g.vertex_elements[v]))

    def test_soluble_group_has_no_graph(self):
        ctx = shared_session().context('S4')
        self.assertRaises(errors.TierError, graph.build_graph, ctx)

    def test_invariant_only_tier(self):
        group = catalog.build('A5')
        ctx = solubility.solubility_context(group, full_graph=False)
        self.assertRaises(errors.TierError, graph.build_graph, ctx)

    def test_relabel_keeps_metrics(self):
        g = shared_session().graph('A5')
        order = list(range(g.n))
        random.Random(0).shuffle(order)
        m1 = graph.metrics(g)
        m2 = graph.metrics(g.relabel(order))
        self.assertEqual(m1.edge_count, m2.edge_count)
        self.assertEqual(m1.degree_sequence, m2.degree_sequence)
        self.assertEqual(m1.diameter, m2.diameter)

    def test_ore_bondy_bound(self):
        self.assertEqual(graph.ore_bondy_bound(59), 1655)
