# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

"""permutations, stabilizer chains and the group operations built on them

Permutations act on the points ``0 .. degree-1``. Products read from left to
right: ``p * q`` applies ``p`` first and then ``q``, so
``(p * q)(i) == q(p(i))``. Conjugation follows the same convention,
``x.conjugate(g) == g**-1 * x * g``. Text always uses 1-based disjoint cycle
notation, for instance ``(1 2 3)(4 5)``.
"""

import functools
import itertools
import logging
import math
import re

import attr
from clize.util import property_once

from solgraph import errors, util

logger = logging.getLogger(__name__)


DEFAULT_ENUMERATION_BUDGET = 10080
"""Largest group order whose elements may be listed explicitly."""


@functools.lru_cache(maxsize=None)
def _identity_images(degree):
    return tuple(range(degree))


def _perm(images):
    """Builds a permutation from a trusted image tuple, skipping
    validation."""
    p = Permutation.__new__(Permutation)
    p.images = images
    p._hash = hash(images)
    return p


CYCLE_RE = re.compile(r'\(\s*(\d+(?:\s*[\s,]\s*\d+)*)?\s*\)')


@functools.total_ordering
class Permutation(object):
    """An element of the symmetric group on ``degree`` points.

    :param images: The image of each point, ``images[i]`` being where ``i``
        is sent.
    """

    __slots__ = ('images', '_hash')

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a permutation: {0!r}".format(images))
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree):
        return _perm(_identity_images(degree))

    @classmethod
    def from_cycles(cls, cycles, degree):
        """Builds the product, read left to right, of 0-based cycles."""
        images = list(range(degree))
        for cycle in cycles:
            if len(set(cycle)) != len(cycle):
                raise ValueError("repeated point in cycle {0!r}".format(cycle))
            mapping = {}
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if not 0 <= a < degree:
                    raise ValueError(
                        "point {0} outside degree {1}".format(a + 1, degree))
                mapping[a] = b
            images = [mapping.get(x, x) for x in images]
        return _perm(tuple(images))

    @classmethod
    def parse(cls, text, degree=None):
        """Parses 1-based cycle notation such as ``(1 2 3)(4 5)``.

        ``()`` denotes the identity. When ``degree`` is omitted, the largest
        point mentioned is used.
        """
        cycles = []
        pos = 0
        stripped = text.strip()
        while pos < len(stripped):
            if stripped[pos].isspace():
                pos += 1
                continue
            match = CYCLE_RE.match(stripped, pos)
            if match is None:
                raise ValueError("could not parse permutation {0!r} at "
                                 "position {1}".format(text, pos))
            if match.group(1):
                points = [int(x) for x in re.split(r'[\s,]+', match.group(1))]
                if min(points) < 1:
                    raise ValueError("points are numbered from 1")
                cycles.append([x - 1 for x in points])
            pos = match.end()
        if not stripped:
            raise ValueError("empty permutation text")
        largest = max((max(c) + 1 for c in cycles if c), default=0)
        if degree is None:
            degree = max(largest, 1)
        elif largest > degree:
            raise ValueError("point {0} exceeds degree {1}".format(
                largest, degree))
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self):
        return len(self.images)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return _perm, (self.images,)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        if len(self.images) != len(other.images):
            raise errors.DegreeMismatch(self.degree, other.degree)
        return _perm(tuple(map(other.images.__getitem__, self.images)))

    def inverse(self):
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return _perm(tuple(inv))

    __invert__ = inverse

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** -n
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_identity(self):
        return self.images == _identity_images(len(self.images))

    def cycles(self):
        """Returns the nontrivial cycles as 0-based tuples, each starting at
        its smallest point."""
        seen = set()
        ret = []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cycle = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                seen.add(j)
                cycle.append(j)
                j = self.images[j]
            ret.append(tuple(cycle))
        return ret

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    @property
    def order(self):
        """Least ``l >= 1`` with ``p**l`` the identity."""
        ret = 1
        for cycle in self.cycles():
            ret = ret * len(cycle) // math.gcd(ret, len(cycle))
        return ret

    def moved_points(self):
        return [i for i, x in enumerate(self.images) if i != x]

    def first_moved(self):
        for i, x in enumerate(self.images):
            if i != x:
                return i
        return None

    def is_even(self):
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def conjugate(self, g):
        """Returns ``g**-1 * self * g``."""
        return g.inverse() * self * g

    def commutator(self, other):
        """Returns ``self**-1 * other**-1 * self * other``."""
        return self.inverse() * other.inverse() * self * other

    def commutes_with(self, other):
        return self * other == other * self

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return '()'
        return ''.join(
            '({0})'.format(' '.join(str(x + 1) for x in cycle))
            for cycle in cycles)

    def __repr__(self):
        return 'Permutation.parse({0!r}, {1})'.format(str(self), self.degree)


def compose(p, q):
    """Applies ``p`` then ``q``."""
    return p * q


def inverse(p):
    return p.inverse()


def element_order(p):
    return p.order


class _Level(object):
    """One step of a stabilizer chain: a base point, the strong generators
    fixing all earlier base points, and a transversal for the base point's
    orbit."""

    __slots__ = ('base', 'generators', 'orbit', 'transversal', 'inverses',
                 'checked')

    def __init__(self, base, degree):
        identity = Permutation.identity(degree)
        self.base = base
        self.generators = []
        self.orbit = [base]
        self.transversal = {base: identity}
        self.inverses = {base: identity}
        self.checked = set()

    def add_generator(self, g):
        self.generators.append(g)
        i = 0
        orbit = self.orbit
        transversal = self.transversal
        while i < len(orbit):
            p = orbit[i]
            for s in self.generators:
                q = s.images[p]
                if q not in transversal:
                    u = transversal[p] * s
                    transversal[q] = u
                    self.inverses[q] = u.inverse()
                    orbit.append(q)
            i += 1


class StabilizerChain(object):
    """Base and strong generating set built by the deterministic
    Schreier-Sims algorithm.

    Base points are chosen as the smallest point moved by the generator that
    forces a new level, so the chain and everything enumerated from it only
    depend on the generator sequence.
    """

    def __init__(self, degree):
        self.degree = degree
        self.levels = []

    def sift(self, g, start=0):
        """Strips ``g`` through the levels from ``start`` on. Returns the
        residue and the level where stripping stopped."""
        for j in range(start, len(self.levels)):
            level = self.levels[j]
            q = g.images[level.base]
            inv = level.inverses.get(q)
            if inv is None:
                return g, j
            g = g * inv
        return g, len(self.levels)

    def contains(self, g):
        residue, _ = self.sift(g)
        return residue.is_identity()

    def add_generator(self, g):
        """Extends the chain so that it also generates ``g``. Returns whether
        the group grew."""
        if g.is_identity():
            return False
        h, j = self.sift(g)
        if h.is_identity():
            return False
        if j == len(self.levels):
            self.levels.append(_Level(h.first_moved(), self.degree))
        for level in self.levels[:j + 1]:
            level.add_generator(h)
        self._complete(j)
        return True

    def _complete(self, i):
        while i >= 0:
            found = self._find_unsifted(i)
            if found is None:
                i -= 1
                continue
            h, j = found
            if j == len(self.levels):
                self.levels.append(_Level(h.first_moved(), self.degree))
            for level in self.levels[i + 1:j + 1]:
                level.add_generator(h)
            i = j

    def _find_unsifted(self, i):
        level = self.levels[i]
        transversal = level.transversal
        inverses = level.inverses
        checked = level.checked
        for p in level.orbit:
            u = transversal[p]
            for k, s in enumerate(level.generators):
                if (p, k) in checked:
                    continue
                schreier = u * s * inverses[s.images[p]]
                if not schreier.is_identity():
                    h, j = self.sift(schreier, i + 1)
                    if not h.is_identity():
                        return h, j
                checked.add((p, k))
        return None

    @property
    def base(self):
        return [level.base for level in self.levels]

    def order(self):
        ret = 1
        for level in self.levels:
            ret *= len(level.orbit)
        return ret

    def iter_elements(self):
        """Yields every element once, in an order fixed by the chain."""
        elements = [Permutation.identity(self.degree)]
        for level in reversed(self.levels):
            elements = [h * level.transversal[p]
                        for p in level.orbit for h in elements]
        return iter(elements)

    def random_element(self, rng):
        g = Permutation.identity(self.degree)
        for level in reversed(self.levels):
            g = g * level.transversal[rng.choice(level.orbit)]
        return g


class PermutationGroup(object):
    """A permutation group given by generators.

    The stabilizer chain, order and element list are computed on first use
    and never change afterwards, so a group may be shared freely once built.

    :param int degree: Number of points acted on.
    :param generators: Sequence of `Permutation` of that degree.
    :param str name: Optional display name, usually the group spec.
    """

    def __init__(self, degree, generators=(), name=None):
        generators = tuple(generators)
        for g in generators:
            if g.degree != degree:
                raise errors.DegreeMismatch(degree, g.degree)
        self.degree = degree
        self.generators = generators
        self.name = name
        self._chain = None

    @classmethod
    def _from_chain(cls, degree, generators, chain, name=None):
        ret = cls(degree, generators, name)
        ret._chain = chain
        return ret

    @classmethod
    def trivial(cls, degree):
        return cls(degree, ())

    def __repr__(self):
        name = ' ' + self.name if self.name else ''
        return '<PermutationGroup{0} degree={1} generators={2}>'.format(
            name, self.degree, len(self.generators))

    def __str__(self):
        return self.name or '<{0}>'.format(
            ', '.join(str(g) for g in self.generators))

    def build_chain(self):
        if self._chain is None:
            chain = StabilizerChain(self.degree)
            for g in self.generators:
                chain.add_generator(g)
            logger.debug("%s: chain with base %s, order %d",
                         self, chain.base, chain.order())
            self._chain = chain
        return self._chain

    @property
    def chain(self):
        return self.build_chain()

    @property_once
    def _order(self):
        return self.chain.order()

    def order(self):
        return self._order

    def contains(self, p):
        if p.degree != self.degree:
            raise errors.DegreeMismatch(self.degree, p.degree)
        return self.chain.contains(p)

    __contains__ = contains

    def identity(self):
        return Permutation.identity(self.degree)

    def is_trivial(self):
        return self.order() == 1

    def is_abelian(self):
        return all(a.commutes_with(b)
                   for a, b in itertools.combinations(self.generators, 2))

    def is_subgroup_of(self, other):
        return all(other.contains(g) for g in self.generators)

    def equals(self, other):
        return (self.degree == other.degree
                and self.order() == other.order()
                and self.is_subgroup_of(other))

    def is_normal_in(self, other):
        """Checks that the conjugates of this group's generators by the
        generators of ``other`` stay inside this group."""
        return all(self.contains(n.conjugate(g))
                   for n in self.generators for g in other.generators)

    def elements(self, budget=None):
        """Returns all elements as a tuple, identity first.

        :raises: `.EnumerationBudgetExceeded` when the order exceeds
            ``budget`` (default `DEFAULT_ENUMERATION_BUDGET`).
        """
        if budget is None:
            budget = DEFAULT_ENUMERATION_BUDGET
        if '_elements' not in self.__dict__ and self.order() > budget:
            raise errors.EnumerationBudgetExceeded(self.order(), budget)
        return self._elements

    @property_once
    def _elements(self):
        return tuple(self.chain.iter_elements())

    @property_once
    def _element_index(self):
        return {g: i for i, g in enumerate(self._elements)}

    def element_index(self, budget=None):
        """Maps each element to its position in `elements`."""
        self.elements(budget)
        return self._element_index

    def random_element(self, rng):
        return self.chain.random_element(rng)

    def center(self, budget=None):
        return PermutationGroup(self.degree, [
            x for x in self.elements(budget)
            if all(x.commutes_with(g) for g in self.generators)])

    def derived_subgroup(self):
        return derived_subgroup(self)

    def derived_series(self):
        return derived_series(self)

    def is_soluble(self):
        return is_soluble(self)

    def conjugacy_classes(self, budget=None):
        self.elements(budget)
        return self._classes

    @property_once
    def _classes(self):
        return conjugacy_classes(self)


def build_chain(group):
    return group.build_chain()


def order(group):
    return group.order()


def contains(group, p):
    return group.contains(p)


def elements(group, budget=None):
    return group.elements(budget)


def generated_subgroup(degree, gens):
    """The subgroup generated by ``gens``, with its own chain."""
    return PermutationGroup(degree, gens)


def normal_closure(group, elements):
    """The smallest normal subgroup of ``group`` containing ``elements``.

    :raises: `.NotAMember` if an element lies outside ``group``.
    """
    elements = list(elements)
    for s in elements:
        if not group.contains(s):
            raise errors.NotAMember(
                "{0} is not an element of {1}".format(s, group))
    return _normal_closure(group, elements)


def _normal_closure(group, elements):
    chain = StabilizerChain(group.degree)
    gens = []
    queue = []
    for s in elements:
        if chain.add_generator(s):
            gens.append(s)
            queue.append(s)
    full = group.order() if group._chain is not None else None
    conjugators = [(g.inverse(), g) for g in group.generators]
    while queue:
        if full is not None and chain.order() == full:
            break
        n = queue.pop()
        for ginv, g in conjugators:
            c = ginv * n * g
            if chain.add_generator(c):
                gens.append(c)
                queue.append(c)
    return PermutationGroup._from_chain(group.degree, gens, chain)


def derived_subgroup(group):
    """The commutator subgroup: the normal closure of the commutators of all
    generator pairs."""
    comms = [a.commutator(b)
             for a, b in itertools.combinations(group.generators, 2)]
    return _normal_closure(group, comms)


def derived_series(group):
    """Returns ``[G, G', G'', ...]`` down to the first repeated term."""
    series = [group]
    while not series[-1].is_trivial():
        nxt = derived_subgroup(series[-1])
        if nxt.order() == series[-1].order():
            break
        series.append(nxt)
    return series


def _has_at_most_two_prime_divisors(n):
    return len(util.prime_factors(n)) <= 2


def is_soluble(group):
    """Whether the derived series of ``group`` reaches the trivial group.

    Groups of order ``p**a * q**b`` are soluble outright (Burnside), which
    ends most series after a step or two.
    """
    current = group
    while True:
        if current.is_abelian():
            return True
        n = current.order()
        if _has_at_most_two_prime_divisors(n):
            return True
        nxt = derived_subgroup(current)
        if nxt.order() == n:
            return False
        current = nxt


def generates_soluble(pair):
    """Whether the two permutations of ``pair`` generate a soluble group.

    Takes a single tuple so it can be mapped over a process pool.
    """
    x, y = pair
    if x.commutes_with(y):
        return True
    return is_soluble(PermutationGroup(x.degree, (x, y)))


@attr.s(frozen=True)
class ConjugacyClasses(object):
    """The conjugacy classes of a group.

    Classes are numbered by the enumeration position of their
    representative, which is the first element of the class in that order,
    so the identity class is always class 0.
    """

    representatives = attr.ib()
    class_sizes = attr.ib()
    members = attr.ib(repr=False)
    _index = attr.ib(repr=False)
    _transporters = attr.ib(repr=False)

    def __len__(self):
        return len(self.representatives)

    def class_index_of(self, x):
        try:
            return self._index[x]
        except KeyError:
            raise errors.NotAMember(
                "{0} is not an element of the group".format(x))

    def transporter(self, x):
        """Returns ``g`` with ``representatives[class_index_of(x)]`` conjugated
        by ``g`` equal to ``x``."""
        self.class_index_of(x)
        return self._transporters[x]


def conjugacy_classes(group, budget=None):
    elems = group.elements(budget)
    index = group.element_index(budget)
    conjugators = [(g.inverse(), g) for g in group.generators]
    class_of = {}
    transporters = {}
    reps = []
    members = []
    for x in elems:
        if x in class_of:
            continue
        k = len(reps)
        reps.append(x)
        class_of[x] = k
        transporters[x] = group.identity()
        found = [x]
        i = 0
        while i < len(found):
            e = found[i]
            for ginv, g in conjugators:
                f = ginv * e * g
                if f not in class_of:
                    class_of[f] = k
                    transporters[f] = transporters[e] * g
                    found.append(f)
            i += 1
        members.append(tuple(sorted(found, key=index.__getitem__)))
    logger.debug("%s: %d conjugacy classes", group, len(reps))
    return ConjugacyClasses(
        tuple(reps), tuple(len(m) for m in members), tuple(members),
        class_of, transporters)


@attr.s(frozen=True)
class QuotientMap(object):
    """The natural map from ``domain`` onto ``domain / kernel``, realised as
    the action of ``domain`` on the right cosets of ``kernel``."""

    domain = attr.ib()
    kernel = attr.ib()
    image = attr.ib()
    coset_representatives = attr.ib(repr=False)
    _coset_of = attr.ib(repr=False)

    def __call__(self, x):
        if x not in self._coset_of:
            raise errors.NotAMember(
                "{0} is not an element of {1}".format(x, self.domain))
        coset_of = self._coset_of
        return _perm(tuple(
            coset_of[r * x] for r in self.coset_representatives))

    def coset_index(self, x):
        return self._coset_of[x]


def quotient(group, kernel, budget=None):
    """Builds the quotient of ``group`` by the normal subgroup ``kernel``.

    :raises: `.NotASubgroup`, `.NotNormal`
    """
    if kernel.degree != group.degree or not kernel.is_subgroup_of(group):
        raise errors.NotASubgroup(
            "{0} is not a subgroup of {1}".format(kernel, group))
    if not kernel.is_normal_in(group):
        raise errors.NotNormal(
            "{0} is not normal in {1}".format(kernel, group))
    kernel_elements = kernel.elements(budget)
    coset_of = {}
    reps = []
    for x in group.elements(budget):
        if x in coset_of:
            continue
        k = len(reps)
        reps.append(x)
        for n in kernel_elements:
            coset_of[n * x] = k
    degree = len(reps)

    def act(g):
        return _perm(tuple(coset_of[r * g] for r in reps))

    name = None
    if group.name and kernel.name:
        name = '{0} / {1}'.format(group.name, kernel.name)
    image = PermutationGroup(degree, [act(g) for g in group.generators], name)
    return QuotientMap(group, kernel, image, tuple(reps), coset_of)


class ProductGroup(PermutationGroup):
    """A direct product acting on the disjoint union of its factors' points.

    The ``i``-th factor acts on points ``offsets[i] .. offsets[i] +
    factors[i].degree - 1``.
    """

    def __init__(self, factors, name=None):
        self.factors = tuple(factors)
        offsets = []
        total = 0
        for factor in self.factors:
            offsets.append(total)
            total += factor.degree
        self.offsets = tuple(offsets)
        self._total_degree = total
        gens = [self.embed(i, g)
                for i, factor in enumerate(self.factors)
                for g in factor.generators]
        super(ProductGroup, self).__init__(total, gens, name)

    def embed(self, i, p):
        """Sends an element of factor ``i`` into the product."""
        offset = self.offsets[i]
        images = list(range(self._total_degree))
        for point, image in enumerate(p.images):
            images[offset + point] = offset + image
        return _perm(tuple(images))

    def factor_subgroup(self, i):
        """The ``i``-th factor as a normal subgroup of the product."""
        factor = self.factors[i]
        return PermutationGroup(
            self.degree, [self.embed(i, g) for g in factor.generators],
            factor.name)


def direct_product(*groups, **kwargs):
    """``G x H x ...`` acting on the disjoint union of the point sets."""
    return ProductGroup(groups, name=kwargs.get('name'))


def read_generators(text, path=None):
    """Reads a generator file: one permutation per line in 1-based cycle
    notation, ``#`` comments, blank lines ignored, and an optional
    ``degree N`` header line.

    :returns: ``(degree, [Permutation, ...])``
    :raises: `.GeneratorFileError`
    """
    degree = None
    lines = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        header = re.match(r'degree\s+(\d+)$', line, re.IGNORECASE)
        if header:
            if degree is not None:
                raise errors.GeneratorFileError(
                    "degree given more than once", lineno, path)
            degree = int(header.group(1))
            if degree < 1:
                raise errors.GeneratorFileError(
                    "degree must be positive", lineno, path)
            continue
        lines.append((lineno, line))
    parsed = []
    for lineno, line in lines:
        try:
            parsed.append((lineno, Permutation.parse(line)))
        except ValueError as exc:
            raise errors.GeneratorFileError(str(exc), lineno, path)
    largest = max((p.degree for _, p in parsed), default=1)
    if degree is None:
        degree = largest
    perms = []
    for lineno, p in parsed:
        if p.degree > degree:
            raise errors.GeneratorFileError(
                "permutation moves points beyond degree {0}".format(degree),
                lineno, path)
        perms.append(_perm(p.images + _identity_images(degree)[p.degree:]))
    return degree, perms


def load_generators(path):
    try:
        with open(path) as f:
            text = f.read()
    except (IOError, OSError) as exc:
        raise errors.GeneratorFileError(exc.strerror or str(exc), path=path)
    return read_generators(text, path)
