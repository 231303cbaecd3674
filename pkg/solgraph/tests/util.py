# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

import functools
import inspect
import os
import shutil
import sys
import tempfile
import unittest
from contextlib import contextmanager
from io import StringIO
from math import gcd

import repeated_test

from solgraph import cli, permgroup, verifier


class Tests(unittest.TestCase):
    maxDiff = 5000

    def crun(self, args):
        """Runs the command line, returning captured stdout, stderr and the
        exit status."""
        orig = sys.stdout, sys.stderr
        sys.stdout = stdout = StringIO()
        sys.stderr = stderr = StringIO()
        try:
            status = cli.main(['solgraph'] + list(args), out=stdout,
                              err=stderr, exit=False)
            return stdout, stderr, status
        finally:
            sys.stdout, sys.stderr = orig

    @contextmanager
    def tempdir(self):
        path = tempfile.mkdtemp()
        try:
            yield path
        finally:
            shutil.rmtree(path)

    @contextmanager
    def environ(self, **values):
        saved = {key: os.environ.get(key) for key in values}
        os.environ.update(values)
        try:
            yield
        finally:
            for key, value in saved.items():
                if value is None:
                    del os.environ[key]
                else:
                    os.environ[key] = value

    def assertLinesEqual(self, expected, actual):
        exp_split = list(filter(None,
            (line.rstrip() for line in inspect.cleandoc(expected).split('\n'))))
        act_split = list(filter(None,
            (line.rstrip() for line in actual.split('\n'))))
        self.assertEqual(exp_split, act_split)


Fixtures = repeated_test.WithTestClass(Tests)
tup = repeated_test.tup


@functools.lru_cache(maxsize=None)
def shared_session():
    """A serial, uncached session reused across test modules, so that each
    group is analyzed once per test run."""
    return verifier.Session()


def perm(text, degree):
    return permgroup.Permutation.parse(text, degree)


def closure(generators, degree):
    """Every product of ``generators``, by breadth-first multiplication."""
    identity = permgroup.Permutation.identity(degree)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in generators:
                h = g * s
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def class_representatives(elements):
    """One element per conjugacy class, by conjugating with every element."""
    remaining = set(elements)
    reps = []
    while remaining:
        g = min(remaining)
        reps.append(g)
        remaining -= {x.inverse() * g * x for x in elements}
    return reps


def brute_normal_closure(gens, conjugators, degree):
    """Grows ``gens`` until the subgroup they generate is closed under
    conjugation by ``conjugators``. Returns the generators and the
    subgroup."""
    gens = list(gens)
    group = closure(gens, degree)
    changed = True
    while changed:
        changed = False
        for t in conjugators:
            for s in list(gens):
                c = t.inverse() * s * t
                if c not in group:
                    gens.append(c)
                    group = closure(gens, degree)
                    changed = True
    return gens, group


def is_prime_power(n):
    p = next(d for d in range(2, n + 1) if n % d == 0)
    while n % p == 0:
        n //= p
    return n == 1


def brute_is_soluble(generators, degree):
    """Solubility from a chief series built over explicit element sets.

    Each step takes the smallest normal closure of the kernel and one more
    class, which is a minimal normal subgroup over the kernel. Every factor
    must be abelian of prime-power order."""
    elements = closure(generators, degree)
    reps = class_representatives(elements)
    kernel_gens = []
    kernel = closure([], degree)
    while len(kernel) < len(elements):
        gens, group = min(
            (brute_normal_closure(kernel_gens + [g], generators, degree)
             for g in reps if g not in kernel),
            key=lambda candidate: len(candidate[1]))
        if not is_prime_power(len(group) // len(kernel)):
            return False
        for a in gens:
            for b in gens:
                if a * b * (b * a).inverse() not in kernel:
                    return False
        kernel_gens, kernel = gens, group
    return True


def coprime_count(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
