# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

"""claims about solubility graphs and the machinery checking them

Each claim is a function registered with `claim`, receiving a `Session` and
a `.CatalogEntry` and returning ``(holds, witness)``. It may raise `Skip`
when it does not apply. Claims run in registry order, groups in catalog
order, so reports come out identical whatever the parallelism.
"""

import json
import logging
import random
import time
from fractions import Fraction
from math import comb

import attr
import numpy as np
from clize.util import closest_option
import od

import solgraph
from solgraph import (
    cache as cache_mod, canon, catalog, errors, graph, permgroup, report,
    solubility, util, workers as workers_mod)

logger = logging.getLogger(__name__)


ELEVEN_THIRTIETHS = Fraction(11, 30)

ISO_PARTNERS = {
    'SL(2,5)': 'C2 x A5',
    'C2 x A5': 'SL(2,5)',
}

A6_CANDIDATES = ('A6', 'C3 x S5', 'S3 x A5', 'C6 x A5', 'C3 x SL(2,5)')

UNSUPPORTED_SIMPLE = ('PSL(3,4)', 'M11', 'Sz(8)')

ORACLE_ORDER_LIMIT = 120


class Skip(Exception):
    """Raised by a claim that does not apply to the group at hand."""

    def __init__(self, reason):
        super(Skip, self).__init__(reason)
        self.reason = reason


@attr.s(frozen=True)
class Claim(object):
    """A checkable statement.

    :param bool needs_graph: Needs the materialized graph, so only runs in
        the full-graph tier.
    :param bool insoluble_only: Skipped on soluble groups.
    :param bool informational: Reported without ever failing the suite.
    :param only: Group specs the claim is about; ``None`` for all.
    """

    id = attr.ib()
    func = attr.ib(repr=False)
    description = attr.ib()
    needs_graph = attr.ib(default=False)
    insoluble_only = attr.ib(default=True)
    informational = attr.ib(default=False)
    only = attr.ib(default=None)


CLAIMS = od()


def claim(claim_id, description, **kwargs):
    def _decorate(func):
        CLAIMS[claim_id] = Claim(claim_id, func, description, **kwargs)
        return func
    return _decorate


def claim_ids():
    return list(CLAIMS)


def validate_plan(plan):
    """Checks claim ids, returning them in registry order.

    :raises: `.PlanError` naming the closest known id.
    """
    plan = list(plan)
    for claim_id in plan:
        if claim_id not in CLAIMS:
            raise errors.PlanError(
                claim_id, closest_option(claim_id, list(CLAIMS)))
    return [c for c in CLAIMS if c in plan]


class Session(object):
    """Settings, worker pool, cache and memoized results shared by the
    claims of one run.

    Everything is keyed by the canonical spec text.
    """

    def __init__(self, workers=workers_mod.SERIAL, cache=None,
                 pair_budget=solubility.DEFAULT_PAIR_BUDGET,
                 node_budget=canon.DEFAULT_NODE_BUDGET,
                 tier_threshold=catalog.DEFAULT_TIER_THRESHOLD,
                 enumeration_budget=None, seed=0, extended=False):
        self.workers = workers
        self.cache = cache
        self.pair_budget = pair_budget
        self.node_budget = node_budget
        self.tier_threshold = tier_threshold
        self.enumeration_budget = enumeration_budget
        self.seed = seed
        self.extended = extended
        self._entries = {}
        self._contexts = {}
        self._graphs = {}
        self._metrics = {}
        self._certificates = {}
        self._quotients = {}

    @staticmethod
    def name(spec):
        if isinstance(spec, catalog.CatalogEntry):
            return spec.name
        return str(catalog.as_spec(spec))

    def entry(self, spec, expected_insoluble=None):
        name = self.name(spec)
        if name not in self._entries:
            self._entries[name] = catalog.make_entry(
                name, threshold=self.tier_threshold,
                pair_budget=self.pair_budget,
                expected_insoluble=expected_insoluble,
                enumeration_budget=self.enumeration_budget)
        return self._entries[name]

    def catalog(self, specs=None):
        """Entries for ``specs``, by default the standard (or extended)
        catalog."""
        if specs is None:
            table = catalog.STANDARD_SPECS
            if self.extended:
                table = table + catalog.EXTENDED_SPECS
            return [self.entry(spec, insoluble) for spec, insoluble in table]
        return [self.entry(spec) for spec in specs]

    def context(self, spec):
        entry = self.entry(spec)
        name = entry.name
        if name in self._contexts:
            return self._contexts[name]
        with errors.SetUserErrorContext(pname=name):
            ctx = self._build_context(entry)
        self._contexts[name] = ctx
        return ctx

    def cache_params(self, entry):
        """The settings a cached context of ``entry`` depends on."""
        return od['tier': entry.tier,
                  'tier_threshold': self.tier_threshold,
                  'pair_budget': self.pair_budget,
                  'enumeration_budget': self.enumeration_budget]

    def _build_context(self, entry):
        kwargs = dict(radical=entry.radical, workers=self.workers,
                      pair_budget=self.pair_budget,
                      enumeration_budget=self.enumeration_budget,
                      full_graph=entry.full_graph)
        if self.cache is None:
            return solubility.solubility_context(entry.group, **kwargs)
        params = self.cache_params(entry)
        cached = self.cache.load(entry.name, 'solubilizers', params)
        if cached is None:
            ctx = solubility.solubility_context(entry.group, **kwargs)
            self.cache.store(entry.name, 'solubilizers', ctx.to_payload(),
                             params)
            return ctx
        if self.cache.verify:
            fresh = solubility.solubility_context(entry.group, **kwargs)
            self.cache.check(cached, fresh.to_payload())
            return fresh
        ctx = solubility.solubility_context(
            entry.group, payload=cached.payload, **kwargs)
        if ctx.pair_tests:
            self.cache.store(entry.name, 'solubilizers', ctx.to_payload(),
                             params)
        return ctx

    def graph(self, spec):
        name = self.name(spec)
        if name not in self._graphs:
            with errors.SetUserErrorContext(pname=name):
                self._graphs[name] = graph.build_graph(self.context(name))
        return self._graphs[name]

    def metrics(self, spec):
        name = self.name(spec)
        if name not in self._metrics:
            self._metrics[name] = graph.metrics(self.graph(name))
        return self._metrics[name]

    def certificate(self, spec):
        name = self.name(spec)
        if name not in self._certificates:
            with errors.SetUserErrorContext(pname=name):
                self._certificates[name] = canon.canonical_certificate(
                    self.graph(name), self.node_budget)
        return self._certificates[name]

    def degree_data(self, spec):
        return solubility.degree_data(self.context(spec))

    def solubility_degree(self, spec):
        return solubility.solubility_degree(self.context(spec))

    def edge_count(self, spec):
        ctx = self.context(spec)
        return solubility.edge_count_formula(
            ctx.order, solubility.solubility_degree(ctx), ctx.radical_order)

    def quotient(self, spec, kernel, label):
        """The quotient of ``spec``'s group by ``kernel`` and a context for
        it, memoized under ``label``."""
        name = self.name(spec)
        key = (name, label)
        if key not in self._quotients:
            entry = self.entry(name)
            qmap = permgroup.quotient(entry.group, kernel,
                                      self.enumeration_budget)
            image = qmap.image
            radical = None
            if kernel is self.context(name).radical:
                radical = permgroup.PermutationGroup.trivial(image.degree)
            qctx = solubility.solubility_context(
                image, radical=radical, workers=self.workers,
                pair_budget=self.pair_budget, full_graph=entry.full_graph)
            self._quotients[key] = qmap, qctx
        return self._quotients[key]

    def radical_quotient(self, spec):
        ctx = self.context(spec)
        return self.quotient(spec, ctx.radical, 'R(G)')

    def close(self):
        self.workers.close()

    def settings(self):
        """Everything needed to rebuild this session in another process,
        as plain picklable values."""
        ret = dict(pair_budget=self.pair_budget, node_budget=self.node_budget,
                   tier_threshold=self.tier_threshold,
                   enumeration_budget=self.enumeration_budget,
                   seed=self.seed, extended=self.extended, cache=None)
        if self.cache is not None:
            ret['cache'] = (self.cache.directory, self.cache.version,
                            self.cache.verify)
        return ret

    @classmethod
    def from_settings(cls, settings):
        """A serial session with the given `settings`."""
        settings = dict(settings)
        cache_args = settings.pop('cache')
        result_cache = None
        if cache_args is not None:
            result_cache = cache_mod.ResultCache(*cache_args)
        return cls(workers_mod.SERIAL, result_cache, **settings)


def _json_default(value):
    if isinstance(value, Fraction):
        return util.fraction_str(value)
    if isinstance(value, permgroup.Permutation):
        return str(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError("cannot serialize {0!r}".format(value))


def _plain(witness):
    return json.loads(json.dumps(witness, default=_json_default),
                      object_pairs_hook=od)


def _skip_reason(c, entry):
    if c.only is not None and entry.name not in c.only:
        return "claim concerns {0} only".format(' and '.join(c.only))
    if c.insoluble_only and entry.vertex_count == 0:
        return "group is soluble"
    if c.needs_graph and not entry.full_graph:
        return "graph needs the full-graph tier"
    return None


def run_claim(session, claim_id, entry):
    """Checks one claim on one catalog entry.

    Failures and skips are reported in the result, never raised.
    """
    c = CLAIMS[claim_id]
    start = time.perf_counter()
    reason = _skip_reason(c, entry)
    if reason is None:
        try:
            holds, witness = c.func(session, entry)
        except Skip as exc:
            reason = exc.reason
    if reason is not None:
        status = report.SKIPPED
        witness = od['reason': reason]
    elif c.informational:
        status = report.INFORMATIONAL
    else:
        status = report.HOLDS if holds else report.FAILS
    ms = int(round((time.perf_counter() - start) * 1000))
    logger.info("%s on %s: %s", claim_id, entry.name, status)
    return report.PropositionResult(claim_id, entry.name, status,
                                    _plain(witness), ms)


def _run_claims(session, plan, entry):
    with errors.SetUserErrorContext(pname=entry.name):
        return [run_claim(session, claim_id, entry) for claim_id in plan]


def _run_group(task):
    settings, plan, name, expected_insoluble = task
    session = Session.from_settings(settings)
    try:
        entry = session.entry(name, expected_insoluble)
        rows = _run_claims(session, plan, entry)
    except errors.UserError:
        return None
    hits = misses = 0
    if session.cache is not None:
        hits, misses = session.cache.hits, session.cache.misses
    return json.dumps([r.to_dict() for r in rows]), hits, misses


def _results_by_group(session, plan, entries):
    if session.workers.jobs == 1 or len(entries) < 2:
        return [_run_claims(session, plan, entry) for entry in entries]
    settings = session.settings()
    tasks = [(settings, plan, entry.name, entry.expected_insoluble)
             for entry in entries]
    logger.info("running %d groups on %d workers", len(tasks),
                session.workers.jobs)
    outcomes = session.workers.map(_run_group, tasks, chunksize=1,
                                   serial_below=2)
    ret = []
    for entry, outcome in zip(entries, outcomes):
        if outcome is None:
            # rerun here so the error surfaces with its group context
            ret.append(_run_claims(session, plan, entry))
            continue
        text, hits, misses = outcome
        if session.cache is not None:
            session.cache.hits += hits
            session.cache.misses += misses
        ret.append([report.PropositionResult.from_dict(data)
                    for data in json.loads(text, object_pairs_hook=od)])
    return ret


def run_suite(session, plan, entries, include_unsupported=True):
    """Runs every claim of ``plan`` on every entry.

    When the session has more than one worker, each group is checked in
    its own process; results are ordered by claim, then group, either way.

    :param include_unsupported: Also record the simple groups named by the
        edge bound for simple groups that cannot be constructed, as
        skipped.
    """
    plan = validate_plan(plan)
    by_group = _results_by_group(session, plan, entries)
    results = []
    for i, claim_id in enumerate(plan):
        results.extend(rows[i] for rows in by_group)
        if claim_id == 'P3.9' and include_unsupported:
            for name in UNSUPPORTED_SIMPLE:
                results.append(report.PropositionResult(
                    claim_id, name, report.SKIPPED,
                    od['reason': 'construction unsupported']))
    return report.VerificationReport(
        solgraph.__version__, [e.name for e in entries], results)


def _vertex_reps(ctx):
    return [(k, ctx.classes.representatives[k],
             len(ctx.sol_members_by_class[k]))
            for k in ctx.vertex_classes()]


@claim('L2.1a', "|G| - |Sol(x)| >= |x| + phi(|x|) for every vertex x")
def _lemma_sol_gap_order(s, entry):
    ctx = s.context(entry)
    checked = 0
    for k, x, sol in _vertex_reps(ctx):
        l = x.order
        bound = l + util.euler_phi(l)
        if ctx.order - sol < bound:
            return False, od['vertex': x, 'order': l, 'gap': ctx.order - sol,
                             'bound': bound]
        checked += ctx.classes.class_sizes[k]
    return True, od['vertices': checked]


@claim('L2.1b', "|G| - |Sol(x)| >= 6 for every vertex x")
def _lemma_sol_gap_six(s, entry):
    ctx = s.context(entry)
    gaps = [(ctx.order - sol, x) for _, x, sol in _vertex_reps(ctx)]
    smallest, x = min(gaps, key=lambda p: p[0])
    return smallest >= 6, od['min_gap': smallest, 'vertex': x]


@claim('SOL-div', "|x| and |R(G)| divide |Sol(x)|, and |Sol(x)| >= 10")
def _solubilizer_divisibility(s, entry):
    ctx = s.context(entry)
    r = ctx.radical_order
    for _, x, sol in _vertex_reps(ctx):
        if sol % x.order or sol % r or sol < 10:
            return False, od['vertex': x, 'sol': sol, 'order': x.order,
                             'radical_order': r]
    return True, od['min_sol': min(sol for _, _, sol in _vertex_reps(ctx)),
                    'radical_order': r]


@claim('P2.2', "minimum degree >= 8 when R(G) = 1, >= 17 otherwise")
def _min_degree_bound(s, entry):
    dd = s.degree_data(entry)
    r = s.context(entry).radical_order
    bound = 8 if r == 1 else 17
    return dd.delta_s >= bound, od['delta_s': dd.delta_s, 'bound': bound,
                                   'radical_order': r]


@claim('R2.3', "elements of order 5 have degree 8 in A5 and 17 in A5 x C2, "
       "attaining the minimum degree", only=('A5', 'A5 x C2'))
def _sharp_degree_examples(s, entry):
    ctx = s.context(entry)
    expected = 8 if entry.name == 'A5' else 17
    x = next(rep for rep in ctx.classes.representatives if rep.order == 5)
    degree = solubility.vertex_degree(ctx, x)
    dd = s.degree_data(entry)
    return (degree == expected and dd.delta_s == expected,
            od['element': x, 'degree': degree, 'expected': expected,
               'delta_s': dd.delta_s])


@claim('P2.4', "maximum degree <= n - 7")
def _max_degree_bound(s, entry):
    dd = s.degree_data(entry)
    return dd.Delta_s <= dd.n - 7, od['Delta_s': dd.Delta_s, 'n': dd.n]


@claim('P2.5', "a vertex of degree p - 1, p prime, forces R(G) = 1")
def _prime_degree_radical(s, entry):
    dd = s.degree_data(entry)
    r = s.context(entry).radical_order
    primes = [d + 1 for d in dd.degree_set if util.is_prime(d + 1)]
    if not primes:
        return True, od['vacuous': True, 'radical_order': r]
    return r == 1, od['vacuous': False, 'primes': primes, 'radical_order': r]


@claim('P2.6', "if |Sol(x)| >= (|G| + |R|)/2 + 1 for every vertex, the "
       "minimum degree satisfies the Dirac condition")
def _dirac_hypothesis(s, entry):
    ctx = s.context(entry)
    dd = s.degree_data(entry)
    threshold = Fraction(ctx.order + ctx.radical_order, 2) + 1
    hypothesis = all(sol >= threshold for _, _, sol in _vertex_reps(ctx))
    dirac = 2 * dd.delta_s >= dd.n
    return (not hypothesis or dirac,
            od['hypothesis': hypothesis, 'dirac': dirac,
               'vacuous': not hypothesis])


def _ratio_identity_failures(s, entry):
    ctx = s.context(entry)
    qmap, qctx = s.radical_quotient(entry)
    r = ctx.radical_order
    for k, x, sol in _vertex_reps(ctx):
        degree = sol - r - 1
        qdegree = solubility.vertex_degree(qctx, qmap(x))
        if 1 + degree != r * (1 + qdegree):
            yield od['vertex': x, 'degree': degree, 'quotient_degree': qdegree,
                     'radical_order': r]


@claim('P2.7', "(1 + deg v) = |R(G)| (1 + deg vR) for every vertex v")
def _ratio_identity(s, entry):
    ctx = s.context(entry)
    if ctx.radical_order == 1:
        return True, od['vacuous': True, 'radical_order': 1]
    for failure in _ratio_identity_failures(s, entry):
        return False, failure
    return True, od['vacuous': False, 'radical_order': ctx.radical_order,
                    'classes': len(ctx.vertex_classes())]


@claim('P2.7-degset', "degree sets of G and G/R(G) compared",
       informational=True)
def _degree_sets(s, entry):
    ctx = s.context(entry)
    if ctx.radical_order == 1:
        raise Skip("R(G) is trivial")
    _, qctx = s.radical_quotient(entry)
    mine = s.degree_data(entry).degree_set
    theirs = solubility.degree_data(qctx).degree_set
    return None, od['degree_set': list(mine),
                    'quotient_degree_set': list(theirs),
                    'equal': list(mine) == list(theirs)]


@claim('P3.2', "P_s(G) >= Pr(G), with equality iff G is abelian",
       insoluble_only=False)
def _solubility_vs_commutativity(s, entry):
    ctx = s.context(entry)
    ps = solubility.solubility_degree(ctx)
    pr = solubility.commutativity_degree(ctx)
    abelian = entry.group.is_abelian()
    return (ps >= pr and (ps == pr) == abelian,
            od['ps': ps, 'pr': pr, 'abelian': abelian])


@claim('E3.1', "Pr(S3) computed against the stated value 1/3",
       insoluble_only=False, informational=True, only=('S3',))
def _s3_commutativity(s, entry):
    ctx = s.context(entry)
    pr = solubility.commutativity_degree(ctx)
    stated = Fraction(1, 3)
    return None, od['k': len(ctx.classes), 'pr': pr, 'stated': stated,
                    'agrees': pr == stated]


@claim('B11/30', "P_s(G) <= 11/30")
def _eleven_thirtieths(s, entry):
    ps = s.solubility_degree(entry)
    return ps <= ELEVEN_THIRTIETHS, od['ps': ps,
                                       'equality': ps == ELEVEN_THIRTIETHS]


@claim('S3-soluble-iff-1', "P_s(G) = 1 exactly when G is soluble",
       insoluble_only=False)
def _soluble_iff_one(s, entry):
    ps = s.solubility_degree(entry)
    soluble = entry.vertex_count == 0
    return (ps == 1) == soluble, od['ps': ps, 'soluble': soluble]


def _normal_candidates(s, entry):
    """Nontrivial proper normal subgroups that can be named: the radical,
    the derived subgroup and the direct factors."""
    group = entry.group
    order = group.order()
    ret = []
    radical = s.context(entry).radical
    if 1 < radical.order() < order:
        ret.append(('R(G)', radical))
    derived = permgroup.derived_subgroup(group)
    if 1 < derived.order() < order:
        ret.append(("G'", derived))
    if isinstance(group, permgroup.ProductGroup):
        for i, factor in enumerate(group.factors):
            sub = group.factor_subgroup(i)
            if 1 < sub.order() < order:
                ret.append((str(entry.spec.factors[i]), sub))
    return ret


@claim('P3.3', "P_s(G) <= P_s(G/N), with equality for soluble N")
def _quotient_degree(s, entry):
    ps = s.solubility_degree(entry)
    checked = []
    for label, kernel in _normal_candidates(s, entry):
        _, qctx = s.quotient(entry, kernel, label)
        qps = solubility.solubility_degree(qctx)
        soluble = permgroup.is_soluble(kernel)
        row = od['normal_subgroup': label, 'order': kernel.order(),
                 'soluble': soluble, 'ps_quotient': qps]
        if ps > qps or (soluble and ps != qps):
            return False, od['ps': ps, 'violation': row]
        checked.append(row)
    if not checked:
        return True, od['ps': ps, 'vacuous': True]
    return True, od['ps': ps, 'vacuous': False, 'quotients': checked]


def _factor_specs(entry):
    factors = entry.spec.factors
    first = str(catalog.GroupSpec(factors[:1]))
    rest = str(catalog.GroupSpec(factors[1:]))
    return first, rest


@claim('P3.5', "P_s(G x H) >= P_s(G) P_s(H), with equality when a factor "
       "is soluble")
def _product_degree(s, entry):
    if not entry.spec.is_product:
        raise Skip("not a direct product")
    left, right = _factor_specs(entry)
    ps = s.solubility_degree(entry)
    pl = s.solubility_degree(left)
    pr = s.solubility_degree(right)
    soluble_factor = pl == 1 or pr == 1
    holds = ps >= pl * pr and (not soluble_factor or ps == pl * pr)
    return holds, od['ps': ps, 'factors': [left, right],
                     'ps_factors': [pl, pr], 'product': pl * pr,
                     'soluble_factor': soluble_factor]


@claim('P3.6i', "2|E| = |G|^2 P_s + |R|^2 + |R| - |G|(2|R| + 1)")
def _edge_formula(s, entry):
    formula = s.edge_count(entry)
    degree_sum = sum(s.degree_data(entry).pattern)
    witness = od['formula': formula, 'degree_sum_half': degree_sum // 2]
    holds = degree_sum == 2 * formula
    if entry.full_graph:
        direct = graph.direct_edge_count(s.graph(entry))
        witness['direct'] = direct
        holds = holds and direct == formula
    return holds, witness


@claim('P3.6ii', "when P_s >= 1 - 2/|G| + (2|R| + 4)/|G|^2, "
       "|E| >= C(n - 1, 2) + 1")
def _ore_bondy_hypothesis(s, entry):
    ctx = s.context(entry)
    g, r = ctx.order, ctx.radical_order
    ps = solubility.solubility_degree(ctx)
    threshold = 1 - Fraction(2, g) + Fraction(2 * r + 4, g * g)
    hypothesis = ps >= threshold
    n = g - r
    edges = s.edge_count(entry)
    bound = comb(n - 1, 2) + 1
    return (not hypothesis or edges >= bound,
            od['hypothesis': hypothesis, 'ps': ps, 'threshold': threshold,
               'edges': edges, 'bound': bound, 'vacuous': not hypothesis])


def _require_trivial_radical(s, entry):
    if s.context(entry).radical_order != 1:
        raise Skip("R(G) is nontrivial")


@claim('P3.7', "|E| >= |G|/2 (k(G) - 3) + 1 when R(G) = 1, with equality "
       "iff G is abelian")
def _class_number_edges(s, entry):
    _require_trivial_radical(s, entry)
    ctx = s.context(entry)
    k = len(ctx.classes)
    bound = Fraction(ctx.order, 2) * (k - 3) + 1
    edges = s.edge_count(entry)
    abelian = entry.group.is_abelian()
    return (edges >= bound and (edges == bound) == abelian,
            od['edges': edges, 'bound': bound, 'k': k])


@claim('P3.8', "|E| > |G| + 1 when R(G) = 1")
def _edges_above_order(s, entry):
    _require_trivial_radical(s, entry)
    edges = s.edge_count(entry)
    bound = entry.group.order() + 1
    return edges > bound, od['edges': edges, 'bound': bound]


@claim('P3.9', "|E| > 4|G| + 1 for simple groups")
def _edges_simple(s, entry):
    if not catalog.is_simple(entry.group, s.enumeration_budget):
        raise Skip("group is not simple")
    edges = s.edge_count(entry)
    bound = 4 * entry.group.order() + 1
    return edges > bound, od['edges': edges, 'bound': bound]


@claim('C3.10', "|E| <= 11/60 |G|^2 - 3/2 |G| + 1 when R(G) = 1, with "
       "equality exactly for A5")
def _edges_upper(s, entry):
    _require_trivial_radical(s, entry)
    g = entry.group.order()
    bound = Fraction(11, 60) * g * g - Fraction(3, 2) * g + 1
    edges = s.edge_count(entry)
    # A5 is the only insoluble group of order 60
    is_a5 = g == 60
    equality = edges == bound
    return (edges <= bound and equality == is_a5,
            od['edges': edges, 'bound': bound, 'equality': equality])


def _vertex_labels(s, entry, vertices):
    elements = s.graph(entry).vertex_elements
    return [elements[v] for v in vertices]


@claim('S1-girth', "the graph has girth 3", needs_graph=True)
def _girth_three(s, entry):
    m = s.metrics(entry)
    witness = od['girth': m.girth]
    if m.triangle:
        witness['triangle'] = _vertex_labels(s, entry, m.triangle)
    return m.girth == 3, witness


@claim('S1-clique', "the graph contains a 4-clique", needs_graph=True)
def _has_k4(s, entry):
    m = s.metrics(entry)
    if not m.has_k4:
        return False, od['k4': None]
    return True, od['k4': _vertex_labels(s, entry, m.k4)]


@claim('S1-connected', "the graph is connected with diameter at most 5",
       needs_graph=True)
def _connected(s, entry):
    m = s.metrics(entry)
    return (m.is_connected and m.diameter <= 5,
            od['connected': m.is_connected, 'diameter': m.diameter])


@claim('S1-not-tree', "the graph is neither a tree, a star nor bipartite",
       needs_graph=True)
def _not_tree(s, entry):
    m = s.metrics(entry)
    return (m.edge_count > m.n - 1 and m.triangle is not None,
            od['edges': m.edge_count, 'n': m.n,
               'triangle': m.triangle is not None])


@claim('S4-iso-example', "the graphs of SL(2,5) and C2 x A5 are isomorphic",
       needs_graph=True, only=('SL(2,5)',))
def _iso_example(s, entry):
    other = ISO_PARTNERS[entry.name]
    result = canon.are_isomorphic(
        s.graph(entry), s.graph(other), s.node_budget,
        (s.certificate(entry), s.certificate(other)))
    witness = od['other': other, 'isomorphic': result.isomorphic,
                 'decided_by': result.reason]
    if result.isomorphic:
        witness['bijection_verified'] = True
        witness['certificate'] = s.certificate(entry).digest()
    return result.isomorphic, witness


@claim('P4-vertexcount', "groups with isomorphic graphs have "
       "|G| - |R(G)| = |H| - |R(H)|", needs_graph=True)
def _isomorphic_vertex_counts(s, entry):
    candidates = [e.name for e in s.catalog()
                  if e.name != entry.name and e.full_graph
                  and e.vertex_count == entry.vertex_count]
    if entry.name in ISO_PARTNERS:
        candidates.append(ISO_PARTNERS[entry.name])
    pairs = []
    for other in candidates:
        result = canon.are_isomorphic(
            s.graph(entry), s.graph(other), s.node_budget)
        if result.isomorphic:
            theirs = s.entry(other).vertex_count
            pairs.append(od['other': other, 'vertex_count': theirs])
            if theirs != entry.vertex_count:
                return False, od['vertex_count': entry.vertex_count,
                                 'pair': pairs[-1]]
    if not pairs:
        raise Skip("no other group with an isomorphic graph")
    return True, od['vertex_count': entry.vertex_count, 'pairs': pairs]


def _proper_insoluble_subgroups(entry):
    group = entry.group
    order = group.order()
    ret = []
    derived = permgroup.derived_subgroup(group)
    if derived.order() < order and not permgroup.is_soluble(derived):
        ret.append(("G'", derived))
    if isinstance(group, permgroup.ProductGroup):
        for i, factor in enumerate(group.factors):
            if not permgroup.is_soluble(factor):
                ret.append((str(entry.spec.factors[i]),
                            group.factor_subgroup(i)))
    return ret


@claim('P4.1', "no insoluble proper subgroup has as many graph vertices")
def _subgroup_vertex_counts(s, entry):
    n = entry.vertex_count
    checked = []
    for label, sub in _proper_insoluble_subgroups(entry):
        radical = solubility.soluble_radical(sub, s.enumeration_budget)
        theirs = sub.order() - radical.order()
        checked.append(od['subgroup': label, 'vertex_count': theirs])
        if theirs == n:
            return False, od['vertex_count': n, 'subgroup': checked[-1]]
    return True, od['vertex_count': n, 'vacuous': not checked,
                    'subgroups': checked]


@claim('P4.2', "no insoluble quotient by a nontrivial normal subgroup has "
       "as many graph vertices")
def _quotient_vertex_counts(s, entry):
    n = entry.vertex_count
    checked = []
    for label, kernel in _normal_candidates(s, entry):
        qmap, qctx = s.quotient(entry, kernel, label)
        theirs = qctx.order - qctx.radical_order
        if theirs == 0:
            continue
        checked.append(od['normal_subgroup': label, 'vertex_count': theirs])
        if theirs == n:
            return False, od['vertex_count': n, 'quotient': checked[-1]]
    return True, od['vertex_count': n, 'vacuous': not checked,
                    'quotients': checked]


@claim('T4.4', "a prime vertex count forces R(G) = 1")
def _prime_vertex_count(s, entry):
    n = entry.vertex_count
    r = entry.radical.order()
    if not util.is_prime(n):
        return True, od['vertex_count': n, 'prime': False, 'vacuous': True]
    return r == 1, od['vertex_count': n, 'prime': True, 'radical_order': r]


@claim('C4.6-A6', "vertex counts of the groups listed alongside A6",
       informational=True, only=('A6',))
def _a6_candidates(s, entry):
    counts = od()
    for name in A6_CANDIDATES:
        counts[name] = s.entry(name).vertex_count
    return None, od['vertex_counts': counts,
                    'all_equal': len(set(counts.values())) == 1]


@claim('A7-count', "A7 has 2519 vertices and 9 conjugacy classes",
       only=('A7',))
def _a7_count(s, entry):
    ctx = s.context(entry)
    n = entry.vertex_count
    k = len(ctx.classes)
    divisors = util.divisors(n)
    insoluble_orders = [n + d for d in divisors if (n + d) // d >= 60]
    return (n == 2519 and k == 9,
            od['vertex_count': n, 'k': k, 'radical_order_candidates': divisors,
               'orders_with_insoluble_quotient': insoluble_orders])


@claim('P5.1', "the degree pattern is not constant")
def _pattern_not_constant(s, entry):
    dd = s.degree_data(entry)
    return not dd.is_constant(), od['degree_set': list(dd.degree_set)]


@claim('C5.2', "the graph is not regular", needs_graph=True)
def _not_regular(s, entry):
    m = s.metrics(entry)
    return not m.is_regular, od['min_degree': m.min_degree,
                                'max_degree': m.max_degree]


@claim('P5.3', "equal degree patterns containing a degree p - 1 force equal "
       "orders")
def _equal_patterns(s, entry):
    dd = s.degree_data(entry)
    has_prime = any(util.is_prime(d + 1) for d in dd.degree_set)
    matches = []
    for other in s.catalog():
        if (other.name == entry.name or other.vertex_count != dd.n):
            continue
        if s.degree_data(other).pattern != dd.pattern:
            continue
        matches.append(other)
        if has_prime and other.group.order() != entry.group.order():
            return False, od['other': other.name,
                             'orders': [entry.group.order(),
                                        other.group.order()]]
    return True, od['vacuous': not (matches and has_prime),
                    'equal_patterns': [m.name for m in matches],
                    'prime_degree': has_prime]


@claim('O-radical', "both soluble radical algorithms agree",
       insoluble_only=False)
def _radical_oracle(s, entry):
    ctx = s.context(entry)
    oracle = solubility.soluble_radical_oracle(entry.group,
                                               s.enumeration_budget)
    return (ctx.radical.equals(oracle),
            od['radical_order': ctx.radical_order,
               'oracle_order': oracle.order()])


@claim('O-solubilizer', "class-reduced solubilizer sizes equal "
       "per-element counts", insoluble_only=False)
def _solubilizer_oracle(s, entry):
    if entry.group.order() > ORACLE_ORDER_LIMIT:
        raise Skip("order above {0}".format(ORACLE_ORDER_LIMIT))
    ctx = s.context(entry)
    elements = entry.group.elements()
    pairs = [(x, y) for x in elements for y in elements]
    verdicts = s.workers.map(permgroup.generates_soluble, pairs)
    n = len(elements)
    for i, x in enumerate(elements):
        brute = sum(verdicts[i * n:(i + 1) * n])
        reduced = solubility.solubilizer(ctx, x).size
        if brute != reduced:
            return False, od['element': x, 'brute_force': brute,
                             'class_reduced': reduced]
    return True, od['elements': n]


RELABEL_ROUNDS = 20
RELABEL_VERTEX_LIMIT = 120


@claim('O-certificate', "the canonical certificate is unchanged by random "
       "relabelings", needs_graph=True)
def _certificate_invariance(s, entry):
    g = s.graph(entry)
    if g.n > RELABEL_VERTEX_LIMIT:
        raise Skip("more than {0} vertices".format(RELABEL_VERTEX_LIMIT))
    expected = s.certificate(entry).encoding
    rng = random.Random(s.seed)
    for i in range(RELABEL_ROUNDS):
        order = list(range(g.n))
        rng.shuffle(order)
        relabeled = g.relabel(order)
        if canon.canonical_certificate(relabeled, s.node_budget).encoding \
                != expected:
            return False, od['round': i, 'seed': s.seed]
    return True, od['rounds': RELABEL_ROUNDS, 'seed': s.seed]
