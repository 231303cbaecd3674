# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

"""number theory helpers"""

from fractions import Fraction


def prime_factors(n):
    """Returns the prime factorization of ``n`` as a sorted list of
    ``(prime, exponent)`` pairs, by trial division."""
    if n < 1:
        raise ValueError("expected a positive integer, got {0!r}".format(n))
    ret = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            ret.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        ret.append((n, 1))
    return ret


def is_prime(n):
    return n > 1 and prime_factors(n) == [(n, 1)]


def euler_phi(n):
    """Euler's totient: the number of integers in ``[1, n]`` coprime to
    ``n``."""
    ret = n
    for p, _ in prime_factors(n):
        ret -= ret // p
    return ret


def divisors(n):
    ret = [1]
    for p, e in prime_factors(n):
        ret = [d * p ** k for d in ret for k in range(e + 1)]
    return sorted(ret)


def fraction_str(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{0}/{1}'.format(value.numerator, value.denominator)
