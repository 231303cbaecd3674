# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

import pickle

from solgraph import util, workers
from solgraph.tests.util import Tests


class WorkersTests(Tests):
    def test_default_jobs(self):
        self.assertEqual(workers.Workers(0).jobs, workers.default_jobs())
        self.assertEqual(workers.Workers(None).jobs, workers.default_jobs())
        self.assertEqual(workers.Workers(3).jobs, 3)

    def test_serial(self):
        self.assertEqual(workers.SERIAL.map(util.euler_phi, range(1, 100)),
                         [util.euler_phi(n) for n in range(1, 100)])
        self.assertIsNone(workers.SERIAL._pool)

    def test_small_batches_stay_in_process(self):
        with workers.Workers(2) as pool:
            pool.map(util.euler_phi, range(1, 10))
            self.assertIsNone(pool._pool)

    def test_pool_keeps_order(self):
        items = list(range(1, 500))
        with workers.Workers(2) as pool:
            self.assertEqual(pool.map(util.euler_phi, items),
                             [util.euler_phi(n) for n in items])
            self.assertIsNotNone(pool._pool)
        self.assertIsNone(pool._pool)

    def test_not_picklable(self):
        self.assertRaises(TypeError, pickle.dumps, workers.Workers(1))
