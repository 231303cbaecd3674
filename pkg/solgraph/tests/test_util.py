# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

from fractions import Fraction

from solgraph import util
from solgraph.tests.util import Fixtures, Tests


class PrimeFactorTests(Fixtures):
    def _test(self, n, factors):
        self.assertEqual(util.prime_factors(n), factors)

    one = 1, []
    prime = 59, [(59, 1)]
    power = 64, [(2, 6)]
    a6 = 360, [(2, 3), (3, 2), (5, 1)]
    a7_vertices = 2519, [(11, 1), (229, 1)]


class ArithmeticTests(Tests):
    def test_invalid(self):
        self.assertRaises(ValueError, util.prime_factors, 0)

    def test_is_prime(self):
        self.assertEqual([n for n in range(20) if util.is_prime(n)],
                         [2, 3, 5, 7, 11, 13, 17, 19])

    def test_euler_phi(self):
        self.assertEqual([util.euler_phi(n) for n in range(1, 13)],
                         [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4])

    def test_divisors(self):
        self.assertEqual(util.divisors(12), [1, 2, 3, 4, 6, 12])
        self.assertEqual(util.divisors(1), [1])

    def test_fraction_str(self):
        self.assertEqual(util.fraction_str(Fraction(11, 30)), '11/30')
        self.assertEqual(util.fraction_str(Fraction(4, 2)), '2')
        self.assertEqual(util.fraction_str(1), '1')
