# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

"""group specifications, constructors and the verification catalog

A group specification is a product of atoms separated by ``x``::

    A5            alternating group on 5 points
    S4            symmetric group on 4 points
    C6            cyclic group of order 6
    D8            dihedral group of order 8
    PSL(2,7)      projective special linear group over the field of 7
    SL(2,5)       special linear group over the field of 5
    file:gens.txt group generated by the permutations in a generator file
    A5 x C2       direct product

Atoms are case-insensitive. ``q`` must be an odd prime up to 23.
"""

import logging
import re
import warnings

import attr

from solgraph import errors, permgroup, solubility, util

logger = logging.getLogger(__name__)


DEFAULT_TIER_THRESHOLD = 1000
"""Largest vertex count for which the whole graph is materialized."""

MAX_FIELD = 23

FULL_GRAPH = 'full-graph'
INVARIANT_ONLY = 'invariant-only'


@attr.s(frozen=True)
class Atom(object):
    """One factor of a group specification.

    :param str family: One of ``A``, ``S``, ``C``, ``D``, ``PSL``, ``SL``
        or ``file``.
    :param int n: Degree, order or field size, depending on the family.
    :param str path: Generator file, for the ``file`` family.
    """

    family = attr.ib()
    n = attr.ib(default=None)
    path = attr.ib(default=None)

    def __str__(self):
        if self.family == 'file':
            return 'file:' + self.path
        if self.family in ('PSL', 'SL'):
            return '{0}(2,{1})'.format(self.family, self.n)
        return '{0}{1}'.format(self.family, self.n)


@attr.s(frozen=True)
class GroupSpec(object):
    """A parsed group specification: the direct product of its factors."""

    factors = attr.ib(converter=tuple)

    def __str__(self):
        return ' x '.join(str(f) for f in self.factors)

    @property
    def is_product(self):
        return len(self.factors) > 1


ATOM_HINT = ("a group such as A5, S4, C6, D8, PSL(2,7), SL(2,5) or "
             "file:PATH")

LINEAR_RE = re.compile(
    r'(PSL|SL)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)', re.IGNORECASE)
FAMILY_RE = re.compile(r'([ASCD])\s*(\d+)', re.IGNORECASE)
FILE_RE = re.compile(r'file:(\S+)', re.IGNORECASE)


def _check_field(q, text):
    if q > MAX_FIELD or q == 2 or not util.is_prime(q):
        raise errors.UnsupportedGroup(
            "{0}: the field size must be an odd prime up to {1}, got {2}"
            .format(text, MAX_FIELD, q))


def _check_atom(atom, text):
    if atom.family in ('PSL', 'SL'):
        _check_field(atom.n, text)
    elif atom.family == 'D':
        if atom.n < 4 or atom.n % 2:
            raise errors.UnsupportedGroup(
                "{0}: dihedral groups are named by their order, which must "
                "be even and at least 4".format(text))
    elif atom.family != 'file' and atom.n < 1:
        raise errors.UnsupportedGroup(
            "{0}: n must be at least 1".format(text))


def _parse_atom(text, pos):
    match = FILE_RE.match(text, pos)
    if match:
        return Atom('file', path=match.group(1)), match.end()
    match = LINEAR_RE.match(text, pos)
    if match:
        family = match.group(1).upper()
        dimension = int(match.group(2))
        if dimension != 2:
            raise errors.UnsupportedGroup(
                "{0}: only 2-dimensional linear groups are supported"
                .format(match.group(0)))
        atom = Atom(family, int(match.group(3)))
        _check_atom(atom, match.group(0))
        return atom, match.end()
    match = FAMILY_RE.match(text, pos)
    if match:
        atom = Atom(match.group(1).upper(), int(match.group(2)))
        _check_atom(atom, match.group(0))
        return atom, match.end()
    raise errors.SpecSyntaxError(text, pos, ATOM_HINT)


def _skip_spaces(text, pos):
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def parse_spec(text):
    """Parses a group specification.

    :raises: `.SpecSyntaxError` with the offending position,
        `.UnsupportedGroup`
    """
    factors = []
    pos = _skip_spaces(text, 0)
    while True:
        atom, pos = _parse_atom(text, pos)
        factors.append(atom)
        pos = _skip_spaces(text, pos)
        if pos == len(text):
            return GroupSpec(factors)
        if text[pos] not in 'xX':
            raise errors.SpecSyntaxError(text, pos, "'x' or end of input")
        pos = _skip_spaces(text, pos + 1)


def format_spec(spec):
    """Canonical text of a spec; ``parse_spec(format_spec(s)) == s``."""
    return str(spec)


def as_spec(spec):
    if isinstance(spec, GroupSpec):
        return spec
    return parse_spec(spec)


def symmetric_group(n):
    P = permgroup.Permutation
    if n < 2:
        return permgroup.PermutationGroup(1, ())
    gens = [P.from_cycles([[0, 1]], n)]
    if n > 2:
        gens.append(P.from_cycles([list(range(n))], n))
    return permgroup.PermutationGroup(n, gens)


def alternating_group(n):
    P = permgroup.Permutation
    if n < 3:
        return permgroup.PermutationGroup(max(n, 1), ())
    gens = [P.from_cycles([[0, 1, 2]], n)]
    if n > 3:
        if n % 2:
            gens.append(P.from_cycles([list(range(n))], n))
        else:
            gens.append(P.from_cycles([list(range(1, n))], n))
    return permgroup.PermutationGroup(n, gens)


def cyclic_group(n):
    if n < 2:
        return permgroup.PermutationGroup(1, ())
    return permgroup.PermutationGroup(
        n, [permgroup.Permutation.from_cycles([list(range(n))], n)])


def dihedral_group(n):
    """The dihedral group of order ``n``, acting on ``n / 2`` points (on 4
    points for the Klein four-group ``D4``)."""
    P = permgroup.Permutation
    if n == 4:
        return permgroup.PermutationGroup(
            4, [P.from_cycles([[0, 1]], 4), P.from_cycles([[2, 3]], 4)])
    m = n // 2
    rotation = P([(i + 1) % m for i in range(m)])
    reflection = P([(-i) % m for i in range(m)])
    return permgroup.PermutationGroup(m, [rotation, reflection])


def psl2(q):
    """PSL(2, q) acting on the ``q + 1`` points of the projective line,
    ``q`` standing for infinity, generated by ``z -> z + 1`` and
    ``z -> -1/z``."""
    infinity = q
    translate = [(z + 1) % q for z in range(q)] + [infinity]
    invert = [infinity] + [(-pow(z, q - 2, q)) % q for z in range(1, q)]
    invert.append(0)
    return permgroup.PermutationGroup(
        q + 1, [permgroup.Permutation(translate),
                permgroup.Permutation(invert)])


def _matrix_action(q, a, b, c, d):
    # row vector (x, y) times [[a, b], [c, d]]; point index x*q + y - 1
    images = []
    for x in range(q):
        for y in range(q):
            if x == 0 and y == 0:
                continue
            u = (x * a + y * c) % q
            v = (x * b + y * d) % q
            images.append(u * q + v - 1)
    return permgroup.Permutation(images)


def sl2(q):
    """SL(2, q) acting on the ``q**2 - 1`` nonzero vectors of the plane
    over the field of ``q`` elements."""
    return permgroup.PermutationGroup(
        q * q - 1, [_matrix_action(q, 1, 1, 0, 1),
                    _matrix_action(q, 0, q - 1, 1, 0)])


def build_atom(atom):
    if atom.family == 'A':
        group = alternating_group(atom.n)
    elif atom.family == 'S':
        group = symmetric_group(atom.n)
    elif atom.family == 'C':
        group = cyclic_group(atom.n)
    elif atom.family == 'D':
        group = dihedral_group(atom.n)
    elif atom.family == 'PSL':
        group = psl2(atom.n)
    elif atom.family == 'SL':
        group = sl2(atom.n)
    elif atom.family == 'file':
        degree, gens = permgroup.load_generators(atom.path)
        group = permgroup.PermutationGroup(degree, gens)
    else:
        raise errors.UnsupportedGroup(
            "unknown group family {0!r}".format(atom.family))
    group.name = str(atom)
    return group


def build(spec):
    """Builds the permutation group described by ``spec`` (a `GroupSpec` or
    its text)."""
    spec = as_spec(spec)
    name = str(spec)
    with errors.SetUserErrorContext(pname=name):
        groups = [build_atom(atom) for atom in spec.factors]
        if len(groups) == 1:
            return groups[0]
        return permgroup.direct_product(*groups, name=name)


def is_simple(group, budget=None):
    """Whether ``group`` is simple: nontrivial, and every nontrivial
    conjugacy class has the whole group as its normal closure."""
    order = group.order()
    if order == 1:
        return False
    if group.is_abelian():
        return util.is_prime(order)
    classes = group.conjugacy_classes(budget)
    return all(permgroup.normal_closure(group, [rep]).order() == order
               for rep in classes.representatives[1:])


@attr.s
class CatalogEntry(object):
    """A group of the catalog with its graph tier."""

    spec = attr.ib()
    group = attr.ib(repr=False)
    tier = attr.ib()
    expected_insoluble = attr.ib()
    radical = attr.ib(repr=False)
    notes = attr.ib(default=attr.Factory(list))

    @property
    def name(self):
        return str(self.spec)

    @property
    def vertex_count(self):
        return self.group.order() - self.radical.order()

    @property
    def full_graph(self):
        return self.tier == FULL_GRAPH


def estimated_graph_pairs(n):
    return n * (n - 1) // 2


def make_entry(spec, threshold=DEFAULT_TIER_THRESHOLD,
               pair_budget=solubility.DEFAULT_PAIR_BUDGET,
               expected_insoluble=None, enumeration_budget=None):
    """Builds ``spec`` and assigns its tier: full-graph when the graph has
    at most ``threshold`` vertices and its pairs fit in ``pair_budget``."""
    spec = as_spec(spec)
    group = build(spec)
    with errors.SetUserErrorContext(pname=str(spec)):
        radical = solubility.soluble_radical(group, enumeration_budget)
    n = group.order() - radical.order()
    insoluble = n > 0
    if expected_insoluble is None:
        expected_insoluble = insoluble
    notes = []
    tier = FULL_GRAPH if n <= threshold else INVARIANT_ONLY
    if tier == FULL_GRAPH and estimated_graph_pairs(n) > pair_budget:
        note = ("{0}: {1} vertex pairs exceed the pair budget of {2}; "
                "downgraded to the invariant-only tier".format(
                    spec, estimated_graph_pairs(n), pair_budget))
        warnings.warn(note)
        notes.append(note)
        tier = INVARIANT_ONLY
    logger.debug("%s: order %d, %d vertices, %s tier",
                 spec, group.order(), n, tier)
    return CatalogEntry(spec, group, tier, expected_insoluble, radical, notes)


#: The verification corpus: insoluble groups from A5 to A7, then three
#: soluble controls. Each spec comes with whether it is expected insoluble.
STANDARD_SPECS = (
    ('A5', True), ('S5', True), ('A5 x C2', True), ('SL(2,5)', True),
    ('PSL(2,7)', True), ('A6', True), ('C3 x A5', True),
    ('PSL(2,11)', True), ('PSL(2,13)', True), ('A7', True),
    ('S3', False), ('S4', False), ('C6', False),
)

#: PSL(2,17) and the products whose vertex counts are compared with that
#: of A6.
EXTENDED_SPECS = (
    ('PSL(2,17)', True), ('C3 x S5', True), ('S3 x A5', True),
    ('C6 x A5', True), ('C3 x SL(2,5)', True),
)


def catalog_specs(extended=False):
    specs = [parse_spec(s) for s, _ in STANDARD_SPECS]
    if extended:
        specs.extend(parse_spec(s) for s, _ in EXTENDED_SPECS)
    return specs
