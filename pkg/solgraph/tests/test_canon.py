# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

import random

import numpy as np

from solgraph import canon, errors
from solgraph.tests.test_graph import complete, cycle, from_edges
from solgraph.tests.util import Fixtures, Tests, shared_session


def petersen():
    return from_edges(10, [(i, (i + 1) % 5) for i in range(5)]
                      + [(i, i + 5) for i in range(5)]
                      + [(i + 5, (i + 2) % 5 + 5) for i in range(5)])


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                          if rng.random() < p])


def shuffled(g, seed):
    order = list(range(g.n))
    random.Random(seed).shuffle(order)
    return g.relabel(order)


class TwinClassTests(Fixtures):
    def _test(self, g, expected):
        self.assertEqual(canon.twin_classes(g.adjacency), expected)

    triangle = complete(3), [((0, 1, 2), canon.CLOSED)]
    independent = from_edges(3, []), [((0, 1, 2), canon.OPEN)]
    star = from_edges(4, [(0, 1), (0, 2), (0, 3)]), \
        [((0,), canon.CLOSED), ((1, 2, 3), canon.OPEN)]
    path = from_edges(3, [(0, 1), (1, 2)]), \
        [((0, 2), canon.OPEN), ((1,), canon.CLOSED)]
    cycle5 = cycle(5), [((v,), canon.CLOSED) for v in range(5)]


class RefinementTests(Tests):
    def test_path_splits_by_degree(self):
        g = from_edges(3, [(0, 1), (1, 2)])
        colors = canon.refine(g.adjacency, np.zeros(3, dtype=np.int64))
        self.assertEqual(colors.tolist(), [0, 1, 0])

    def test_regular_graph_is_stable(self):
        colors = canon.refine(petersen().adjacency,
                              np.zeros(10, dtype=np.int64))
        self.assertEqual(colors.tolist(), [0] * 10)

    def test_refinement_after_individualizing(self):
        g = cycle(6)
        colors = canon.individualize(np.zeros(6, dtype=np.int64), 2)
        self.assertEqual(colors.tolist(), [1, 1, 0, 1, 1, 1])
        refined = canon.refine(g.adjacency, colors)
        self.assertEqual(refined[1], refined[3])
        self.assertEqual(refined[0], refined[4])
        self.assertEqual(len(set(refined.tolist())), 4)

    def test_target_cell(self):
        cell = canon.target_cell(np.array([0, 1, 1, 2, 2, 2]))
        self.assertEqual(cell.tolist(), [1, 2])
        self.assertIsNone(canon.target_cell(np.array([1, 0, 2])))

    def test_cell_invariants(self):
        self.assertEqual(canon.cell_invariants(np.array([0, 1, 1, 2, 2, 2])),
                         {'cells': 3, 'cell_sizes': [3, 2, 1]})


class CertificateInvarianceTests(Fixtures):
    def _test(self, g):
        cert = canon.canonical_certificate(g)
        labeling = list(cert.labeling)
        self.assertEqual(sorted(labeling), list(range(g.n)))
        self.assertEqual(
            canon.encode(g.adjacency[np.ix_(labeling, labeling)]),
            cert.encoding)
        for seed in range(5):
            other = canon.canonical_certificate(shuffled(g, seed))
            self.assertEqual(other.encoding, cert.encoding)
            self.assertEqual(other.digest(), cert.digest())

    petersen = petersen(),
    cycle9 = cycle(9),
    complete6 = complete(6),
    random_sparse = random_graph(24, 0.15, 1),
    random_dense = random_graph(24, 0.6, 2),
    twins = from_edges(7, [(0, 1), (0, 2), (1, 2), (3, 0), (4, 0), (5, 3),
                           (5, 4), (6, 5)]),


class CertificateTests(Tests):
    def test_distinguishes(self):
        c6 = canon.canonical_certificate(cycle(6))
        two_triangles = canon.canonical_certificate(
            from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
        self.assertNotEqual(c6.encoding, two_triangles.encoding)

    def test_encoding_header(self):
        cert = canon.canonical_certificate(cycle(5))
        self.assertEqual(cert.encoding[:4], b'\x00\x00\x00\x05')
        self.assertEqual(len(cert.hex()), 2 * len(cert.encoding))
        self.assertEqual(len(cert.digest()), 64)

    def test_twin_reduction(self):
        cert = canon.canonical_certificate(complete(8))
        self.assertEqual(cert.reduced_size, 1)
        cert = canon.canonical_certificate(shared_session().graph('A5'))
        self.assertLess(cert.reduced_size, 59)

    def test_budget(self):
        with self.assertRaises(errors.IsomorphismBudgetExceeded) as cm:
            canon.canonical_certificate(petersen(), budget=1)
        self.assertEqual(cm.exception.budget, 1)
        self.assertEqual(cm.exception.invariants,
                         {'cells': 1, 'cell_sizes': [10]})
        self.assertEqual(cm.exception.exit_status, 3)

    def test_solubility_graph_relabeled(self):
        g = shared_session().graph('A5')
        cert = shared_session().certificate('A5')
        self.assertEqual(
            canon.canonical_certificate(shuffled(g, 3)).encoding,
            cert.encoding)


class IsomorphismTests(Tests):
    def test_sl25_and_c2_a5(self):
        s = shared_session()
        g1 = s.graph('SL(2,5)')
        g2 = s.graph('C2 x A5')
        result = canon.are_isomorphic(g1, g2)
        self.assertTrue(result)
        self.assertEqual(result.reason, 'certificate')
        self.assertEqual(len(result.bijection), 118)
        self.assertTrue(canon.verify_bijection(
            g1.adjacency, g2.adjacency, result.bijection))
        c1, c2 = result.certificates
        self.assertEqual(c1.encoding, c2.encoding)

    def test_same_group(self):
        s = shared_session()
        g = s.graph('A5')
        result = canon.are_isomorphic(g, shuffled(g, 7))
        self.assertTrue(result.isomorphic)

    def test_vertex_count(self):
        s = shared_session()
        result = canon.are_isomorphic(s.graph('A5'), s.graph('PSL(2,7)'))
        self.assertFalse(result)
        self.assertEqual(result.reason, 'vertex count')
        self.assertIsNone(result.bijection)

    def test_degree_sequence(self):
        result = canon.are_isomorphic(
            cycle(4), from_edges(4, [(0, 1), (1, 2), (2, 3)]))
        self.assertEqual(result.reason, 'degree sequence')

    def test_color_refinement(self):
        # equal degree sequences, told apart by the degrees of neighbours
        g1 = from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                            (0, 3)])
        g2 = from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
                            (0, 2)])
        self.assertEqual(sorted(g1.degrees().tolist()),
                         sorted(g2.degrees().tolist()))
        result = canon.are_isomorphic(g1, g2)
        self.assertFalse(result)
        self.assertEqual(result.reason, 'color refinement')

    def test_certificate_decides(self):
        c6 = cycle(6)
        two_triangles = from_edges(
            6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        result = canon.are_isomorphic(c6, two_triangles)
        self.assertFalse(result)
        self.assertEqual(result.reason, 'certificate')

    def test_verify_bijection(self):
        g = cycle(5)
        self.assertTrue(canon.verify_bijection(
            g.adjacency, g.adjacency, [1, 2, 3, 4, 0]))
        self.assertFalse(canon.verify_bijection(
            g.adjacency, g.adjacency, [0, 2, 1, 3, 4]))
        self.assertFalse(canon.verify_bijection(
            g.adjacency, g.adjacency, [0, 0, 1, 3, 4]))
