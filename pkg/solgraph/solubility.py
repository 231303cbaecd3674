# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

"""solubilizers, the soluble radical, vertex degrees and exact probabilities

Everything here is computed one conjugacy class at a time. For a class
representative ``x`` the verdict "``<x, y>`` is soluble" does not change
when ``y`` is multiplied on either side by a power of ``x``, inverted, or
multiplied by an element of the soluble radical, so each orbit of those
moves needs a single pair test. Per-element data is then obtained by
conjugating the representative's solubilizer.
"""

import logging
import threading
from fractions import Fraction

import attr
from clize.util import property_once

from solgraph import errors, permgroup, util, workers as workers_mod

logger = logging.getLogger(__name__)


DEFAULT_PAIR_BUDGET = 5 * 10 ** 7
"""Maximum number of pair-solubility tests spent on one group."""

euler_phi = util.euler_phi


class PairCache(object):
    """Memo of two-generator solubility verdicts keyed by element indices.

    Keys are normalized so that ``(x, y)``, ``(y, x)`` and the pairs with
    either element inverted share one entry. Inserts keep the first verdict
    stored for a key.
    """

    def __init__(self):
        self._verdicts = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._verdicts)

    def get(self, key):
        return self._verdicts.get(key)

    def setdefault(self, key, verdict):
        with self._lock:
            return self._verdicts.setdefault(key, verdict)


@attr.s
class SolubilityContext(object):
    """A group together with its soluble radical, conjugacy classes and the
    solubilizer of each class representative.

    Build instances with `solubility_context`.
    """

    group = attr.ib()
    radical = attr.ib()
    classes = attr.ib(repr=False)
    sol_members_by_class = attr.ib(repr=False)
    """For each class, the element indices of the representative's
    solubilizer."""
    full_graph = attr.ib(default=True)
    pair_cache = attr.ib(default=attr.Factory(PairCache), repr=False)
    pair_tests = attr.ib(default=0)

    @property
    def order(self):
        return self.group.order()

    @property
    def radical_order(self):
        return self.radical.order()

    @property
    def sol_order_by_class(self):
        return tuple(len(m) for m in self.sol_members_by_class)

    @property
    def is_soluble(self):
        return self.radical_order == self.order

    @property_once
    def _inverse_index(self):
        elements = self.group.elements()
        index = self.group.element_index()
        return [index[g.inverse()] for g in elements]

    def pair_key(self, i, j):
        inv = self._inverse_index
        a = min(i, inv[i])
        b = min(j, inv[j])
        return (a, b) if a <= b else (b, a)

    def vertex_classes(self):
        """Indices of the classes lying outside the radical."""
        radical = self.radical
        return [k for k, rep in enumerate(self.classes.representatives)
                if not radical.contains(rep)]

    def to_payload(self):
        """Serializable form of the class-level data, for the cache."""
        return {
            'representatives': [str(r) for r in self.classes.representatives],
            'radical': [str(g) for g in self.radical.generators],
            'radical_order': self.radical_order,
            'members': [sorted(m) for m in self.sol_members_by_class],
        }


def _check_member(ctx, x):
    if not ctx.group.contains(x):
        raise errors.NotAMember(
            "{0} is not an element of {1}".format(x, ctx.group))


def pair_soluble(ctx, x, y):
    """Whether ``<x, y>`` is soluble, consulting and filling the context's
    pair cache."""
    _check_member(ctx, x)
    _check_member(ctx, y)
    index = ctx.group.element_index()
    key = ctx.pair_key(index[x], index[y])
    verdict = ctx.pair_cache.get(key)
    if verdict is None:
        ctx.pair_tests += 1
        verdict = ctx.pair_cache.setdefault(
            key, permgroup.generates_soluble((x, y)))
    return verdict


def soluble_radical(group, budget=None):
    """The largest soluble normal subgroup of ``group``.

    It is the normal closure of the class representatives whose own normal
    closure is soluble.
    """
    if permgroup.is_soluble(group):
        return group
    classes = group.conjugacy_classes(budget)
    soluble_reps = []
    for rep in classes.representatives[1:]:
        closure = permgroup.normal_closure(group, [rep])
        if permgroup.is_soluble(closure):
            soluble_reps.append(rep)
    radical = permgroup.normal_closure(group, soluble_reps)
    logger.debug("%s: soluble radical of order %d", group, radical.order())
    return radical


def soluble_radical_oracle(group, budget=None):
    """The radical as the set of ``x`` with ``<x, y>`` soluble for every
    ``y``, tested pair by pair without any shortcut through the radical
    itself."""
    elements = group.elements(budget)
    classes = group.conjugacy_classes(budget)
    members = []
    for rep, cls in zip(classes.representatives, classes.members):
        if all(permgroup.generates_soluble((rep, y)) for y in elements):
            members.extend(cls)
    return permgroup.PermutationGroup(group.degree, members)


def _shortcut_orbits(x, elements, index, inverse_index, in_radical,
                     radical_maps):
    """Partitions the group into classes of ``y`` on which the verdict for
    ``<x, y>`` is constant. Returns ``(orbit, soluble_shortcut)`` pairs."""
    left = [index[x * e] for e in elements]
    right = [index[e * x] for e in elements]
    n = len(elements)
    orbit_of = [False] * n
    ret = []
    for start in range(n):
        if orbit_of[start]:
            continue
        orbit_of[start] = True
        orbit = [start]
        shortcut = False
        j = 0
        while j < len(orbit):
            i = orbit[j]
            j += 1
            if in_radical[i] or left[i] == right[i]:
                shortcut = True
            for nb in (left[i], right[i], inverse_index[i]):
                if not orbit_of[nb]:
                    orbit_of[nb] = True
                    orbit.append(nb)
            for rmap in radical_maps:
                nb = rmap[i]
                if not orbit_of[nb]:
                    orbit_of[nb] = True
                    orbit.append(nb)
        ret.append((orbit, shortcut))
    return ret


def solubility_context(group, radical=None, workers=workers_mod.SERIAL,
                       pair_budget=DEFAULT_PAIR_BUDGET,
                       enumeration_budget=None, full_graph=True,
                       payload=None):
    """Computes the solubilizer of every class representative of ``group``.

    :param radical: The soluble radical, if already known.
    :param workers: `.Workers` handle the pair tests are spread over.
    :param pair_budget: Maximum number of pair tests.
    :param payload: Class-level data previously produced by
        `SolubilityContext.to_payload`; used instead of recomputing when it
        matches the group.
    :raises: `.PairBudgetExceeded`, `.EnumerationBudgetExceeded`
    """
    elements = group.elements(enumeration_budget)
    index = group.element_index(enumeration_budget)
    classes = group.conjugacy_classes(enumeration_budget)
    if payload is not None:
        ctx = _context_from_payload(group, classes, payload, full_graph)
        if ctx is not None:
            return ctx
    if radical is None:
        radical = soluble_radical(group, enumeration_budget)
    ctx = SolubilityContext(group, radical, classes, (), full_graph)
    ctx.sol_members_by_class = _class_solubilizers(
        ctx, elements, index, workers, pair_budget)
    logger.info("%s: %d classes, |R| = %d, %d pair tests",
                group, len(classes), radical.order(), ctx.pair_tests)
    return ctx


def _context_from_payload(group, classes, payload, full_graph):
    reps = [str(r) for r in classes.representatives]
    if payload.get('representatives') != reps:
        logger.warning("%s: cached solubilizers do not match the group's "
                       "classes, recomputing", group)
        return None
    radical = permgroup.PermutationGroup(
        group.degree,
        [permgroup.Permutation.parse(g, group.degree)
         for g in payload['radical']])
    members = tuple(frozenset(m) for m in payload['members'])
    return SolubilityContext(group, radical, classes, members, full_graph)


def _class_solubilizers(ctx, elements, index, workers, pair_budget):
    group = ctx.group
    n = len(elements)
    if ctx.is_soluble:
        everything = frozenset(range(n))
        return tuple(everything for _ in ctx.classes.representatives)
    inverse_index = ctx._inverse_index
    radical_elements = ctx.radical.elements()
    in_radical = [False] * n
    for r in radical_elements:
        in_radical[index[r]] = True
    radical_maps = [[index[e * r] for e in elements]
                    for r in ctx.radical.generators if not r.is_identity()]

    plans = []
    pending = {}
    for rep in ctx.classes.representatives:
        ix = index[rep]
        if in_radical[ix]:
            plans.append(None)
            continue
        orbits = _shortcut_orbits(rep, elements, index, inverse_index,
                                  in_radical, radical_maps)
        plan = []
        for orbit, shortcut in orbits:
            key = None
            if not shortcut:
                key = ctx.pair_key(ix, orbit[0])
                if ctx.pair_cache.get(key) is None and key not in pending:
                    pending[key] = (rep, elements[orbit[0]])
            plan.append((orbit, key))
        plans.append(plan)

    if len(pending) > pair_budget:
        raise errors.PairBudgetExceeded(len(pending), pair_budget)
    keys = list(pending)
    logger.debug("%s: %d pair tests over %d workers",
                 group, len(keys), workers.jobs)
    verdicts = workers.map(permgroup.generates_soluble,
                           [pending[k] for k in keys])
    for key, verdict in zip(keys, verdicts):
        ctx.pair_cache.setdefault(key, verdict)
    ctx.pair_tests += len(keys)

    ret = []
    for plan in plans:
        if plan is None:
            ret.append(frozenset(range(n)))
            continue
        members = []
        for orbit, key in plan:
            if key is None or ctx.pair_cache.get(key):
                members.extend(orbit)
        ret.append(frozenset(members))
    return tuple(ret)


@attr.s(frozen=True)
class Solubilizer(object):
    """``Sol_G(x)``: its size, and its members as element indices when
    available."""

    element = attr.ib()
    size = attr.ib()
    members = attr.ib(default=None, repr=False)


def solubilizer(ctx, x, members=False):
    """The solubilizer of ``x``.

    :param bool members: Also list the members. Only available in the
        full-graph tier.
    :raises: `.NotAMember`, `.TierError`
    """
    _check_member(ctx, x)
    k = ctx.classes.class_index_of(x)
    rep_members = ctx.sol_members_by_class[k]
    if not members:
        return Solubilizer(x, len(rep_members))
    if not ctx.full_graph:
        raise errors.TierError(
            "solubilizer members of {0} need the full-graph tier"
            .format(ctx.group))
    return Solubilizer(x, len(rep_members),
                       solubilizer_member_indices(ctx, x))


def solubilizer_member_indices(ctx, x):
    """Element indices of ``Sol_G(x)``, obtained by conjugating the class
    representative's solubilizer."""
    k = ctx.classes.class_index_of(x)
    rep_members = ctx.sol_members_by_class[k]
    g = ctx.classes.transporter(x)
    if g.is_identity():
        return rep_members
    elements = ctx.group.elements()
    index = ctx.group.element_index()
    ginv = g.inverse()
    return frozenset(index[ginv * elements[i] * g] for i in rep_members)


def solubilizer_brute_force(group, x, budget=None):
    """``|Sol_G(x)|`` by testing every ``y`` in ``group``."""
    return sum(1 for y in group.elements(budget)
               if permgroup.generates_soluble((x, y)))


def vertex_degree(ctx, x):
    """``|Sol_G(x)| - |R(G)| - 1``.

    :raises: `.NotAVertex` for elements of the radical.
    """
    _check_member(ctx, x)
    if ctx.radical.contains(x):
        raise errors.NotAVertex(
            "{0} lies in the soluble radical and is not a vertex".format(x))
    return solubilizer(ctx, x).size - ctx.radical_order - 1


@attr.s(frozen=True)
class DegreeData(object):
    """The degree pattern of the solubility graph and its summary."""

    n = attr.ib()
    pattern = attr.ib(converter=tuple, repr=False)
    delta_s = attr.ib()
    Delta_s = attr.ib()
    degree_set = attr.ib(converter=tuple)

    def is_constant(self):
        return len(self.degree_set) <= 1


def degree_data(ctx):
    r = ctx.radical_order
    pattern = []
    for k in ctx.vertex_classes():
        degree = len(ctx.sol_members_by_class[k]) - r - 1
        pattern.extend([degree] * ctx.classes.class_sizes[k])
    pattern.sort(reverse=True)
    if pattern:
        return DegreeData(len(pattern), pattern, pattern[-1], pattern[0],
                          sorted(set(pattern)))
    return DegreeData(0, (), None, None, ())


def solubility_degree(ctx):
    """``P_s(G)``, the proportion of ordered pairs generating a soluble
    subgroup."""
    total = sum(size * len(members)
                for size, members in zip(ctx.classes.class_sizes,
                                         ctx.sol_members_by_class))
    return Fraction(total, ctx.order ** 2)


def commutativity_degree(ctx):
    """``Pr(G) = k(G) / |G|``."""
    return Fraction(len(ctx.classes), ctx.order)


def edge_count_formula(order, ps, radical_order):
    """Edge count of the solubility graph from ``|G|``, ``P_s(G)`` and
    ``|R(G)|``.

    :raises: `.FormulaError` unless twice the count is a nonnegative even
        integer.
    """
    r = radical_order
    twice = (Fraction(order) ** 2 * Fraction(ps) + r * r + r
             - order * (2 * r + 1))
    if twice.denominator != 1 or twice < 0 or twice.numerator % 2:
        raise errors.FormulaError(
            "edge formula gives 2|E| = {0} for |G| = {1}, P_s = {2}, "
            "|R| = {3}".format(util.fraction_str(twice), order,
                               util.fraction_str(ps), r))
    return twice.numerator // 2


def quotient_context(ctx, workers=workers_mod.SERIAL,
                     pair_budget=DEFAULT_PAIR_BUDGET):
    """The natural map onto ``G / R(G)`` and a context for the image.

    The image has a trivial soluble radical.
    """
    qmap = permgroup.quotient(ctx.group, ctx.radical)
    image = qmap.image
    qctx = solubility_context(
        image, radical=permgroup.PermutationGroup.trivial(image.degree),
        workers=workers, pair_budget=pair_budget, full_graph=ctx.full_graph)
    return qmap, qctx
