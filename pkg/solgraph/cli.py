# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

"""the ``solgraph`` command"""

import logging
import sys

import attr
from clize import Clize, errors as clize_errors
from clize.parameters import multi, one_of
from clize.runner import _fix_argv as fix_argv
import od
from sigtools.wrappers import decorator

from solgraph import (
    cache as cache_mod, canon, catalog, converters, errors, graph, report,
    solubility, util, verifier, workers as workers_mod)

logger = logging.getLogger(__name__)


DESCRIPTION = """\
Computes solubility graphs of finite insoluble groups and checks the
statements made about their invariants.
"""

FORMAT = one_of(*report.FORMATS)


@attr.s(frozen=True)
class Output(object):
    """What a command prints, and the exit status it asks for."""

    text = attr.ib()
    status = attr.ib(default=0)


def configure_logging(verbose=False, debug=False, stream=None):
    level = logging.WARNING
    if debug:
        level = logging.DEBUG
    elif verbose:
        level = logging.INFO
    logging.basicConfig(
        stream=stream or sys.stderr,
        format='%(levelname)s %(name)s: %(message)s', force=True)
    logging.getLogger().setLevel(level)


@decorator
def with_session(wrapped, *args,
                 jobs: int=0, cache_dir=None, no_cache=False,
                 budget_pairs: int=solubility.DEFAULT_PAIR_BUDGET,
                 budget_iso_nodes: int=canon.DEFAULT_NODE_BUDGET,
                 tier_threshold: int=catalog.DEFAULT_TIER_THRESHOLD,
                 seed: int=0, verify_cache=False,
                 verbose=False, debug=False,
                 **kwargs):
    """
    Computation options:

    :param jobs: Worker processes for pair tests; 0 uses every CPU.
    :param budget_pairs: Maximum number of pair-solubility tests per group.
    :param budget_iso_nodes: Maximum search-tree nodes per canonical
        labeling.
    :param tier_threshold: Largest vertex count for which the graph is
        materialized.
    :param seed: Seed for randomized checks.

    Cache options:

    :param cache_dir: Cache directory. Defaults to $SOLGRAPH_CACHE_DIR, then
        the platform cache directory.
    :param no_cache: Neither read nor write the cache.
    :param verify_cache: Recompute cached results and fail if they differ.

    Diagnostics:

    :param verbose: Log progress.
    :param debug: Log everything.
    """
    configure_logging(verbose, debug)
    result_cache = None
    if not no_cache:
        result_cache = cache_mod.ResultCache(
            cache_dir or cache_mod.default_cache_dir(), verify=verify_cache)
    session = verifier.Session(
        workers_mod.Workers(jobs), result_cache,
        pair_budget=budget_pairs, node_budget=budget_iso_nodes,
        tier_threshold=tier_threshold, seed=seed)
    try:
        return wrapped(session, *args, **kwargs)
    finally:
        session.close()
        if result_cache is not None:
            logger.info("cache %s: %d hits, %d misses",
                        result_cache.directory, result_cache.hits,
                        result_cache.misses)


def _write(path, text):
    with open(path, 'w') as f:
        f.write(text)
    logger.info("wrote %s", path)


def _emit(text, output):
    if output:
        _write(output, text)
    return text


def analysis_fields(session, entry):
    """The invariants printed by ``analyze``."""
    ctx = session.context(entry)
    fields = od[
        'group': entry.name,
        'order': ctx.order,
        'soluble': ctx.is_soluble,
        'radical_order': ctx.radical_order,
        'classes': len(ctx.classes),
        'ps': util.fraction_str(solubility.solubility_degree(ctx)),
        'pr': util.fraction_str(solubility.commutativity_degree(ctx)),
        'tier': entry.tier,
    ]
    if ctx.is_soluble:
        fields['graph'] = 'none'
        return fields
    dd = session.degree_data(entry)
    fields['vertices'] = dd.n
    fields['min_degree'] = dd.delta_s
    fields['max_degree'] = dd.Delta_s
    fields['degrees'] = list(dd.degree_set)
    fields['edges'] = session.edge_count(entry)
    if entry.full_graph:
        m = session.metrics(entry)
        elements = session.graph(entry).vertex_elements
        fields['girth'] = m.girth
        fields['diameter'] = m.diameter
        fields['connected'] = m.is_connected
        fields['k4'] = [str(elements[v]) for v in m.k4] if m.k4 else None
        fields['certificate'] = session.certificate(entry).digest()
    for note in entry.notes:
        fields.setdefault('notes', []).append(note)
    return fields


@with_session
def analyze(session, spec: converters.group_spec, *,
            format_: FORMAT='text', output=None, export_graph=None,
            export_certificate=None):
    """Computes the invariants of one group

    :param spec: A group such as A5, "A5 x C2", "PSL(2,7)" or file:PATH.
    :param format_: Output format.
    :param output: Also write the output to this file.
    :param export_graph: Write the graph as an edge list to this file.
    :param export_certificate: Write the canonical certificate, in
        hexadecimal, to this file.
    """
    entry = session.entry(spec)
    with errors.SetUserErrorContext(pname=entry.name):
        fields = analysis_fields(session, entry)
        if export_graph:
            _write(export_graph, graph.to_edge_list(session.graph(entry)))
        if export_certificate:
            _write(export_certificate, session.certificate(entry).hex() + '\n')
    return Output(_emit(
        report.render_fields(entry.name, fields, format_), output))


@with_session
def verify(session, *,
           claim: (converters.claim_id, multi()),
           group: (converters.group_spec, multi()),
           all_=False, extended=False,
           format_: FORMAT='text', output=None):
    """Checks claims over the group catalog

    Exits with status 1 when a check fails.

    :param claim: Check only this claim. Repeatable.
    :param group: Check only this group. Repeatable.
    :param all_: Check every claim on every catalog group.
    :param extended: Use the extended catalog.
    :param format_: Output format.
    :param output: Also write the report to this file.
    """
    session.extended = extended
    plan = verifier.claim_ids() if all_ or not claim else list(claim)
    if group and not all_:
        entries = session.catalog([str(g) for g in group])
    else:
        entries = session.catalog()
    result = verifier.run_suite(session, plan, entries,
                                include_unsupported=all_ or not group)
    status = 1 if result.failed else 0
    return Output(_emit(report.render(result, format_), output), status)


@with_session
def iso(session, first: converters.group_spec,
        second: converters.group_spec, *,
        bijection=None, format_: FORMAT='text'):
    """Decides whether two groups have isomorphic solubility graphs

    :param first: The first group.
    :param second: The second group.
    :param bijection: When isomorphic, write the verified vertex bijection
        to this file.
    :param format_: Output format.
    """
    names = [session.entry(spec).name for spec in (first, second)]
    graphs = []
    for name in names:
        with errors.SetUserErrorContext(pname=name):
            graphs.append(session.graph(name))
    certificates = None
    if graphs[0].n == graphs[1].n:
        certificates = tuple(session.certificate(name) for name in names)
    result = canon.are_isomorphic(graphs[0], graphs[1],
                                  session.node_budget, certificates)
    fields = od[
        'first': names[0],
        'second': names[1],
        'vertices': [graphs[0].n, graphs[1].n],
        'isomorphic': result.isomorphic,
        'reason': result.reason,
    ]
    if result.certificates:
        fields['certificates'] = [c.digest() for c in result.certificates]
    if result.isomorphic and bijection:
        _write(bijection, bijection_text(graphs[0], graphs[1],
                                         result.bijection))
        fields['bijection'] = bijection
    title = '{0} vs {1}'.format(*names)
    return Output(report.render_fields(title, fields, format_))


def bijection_text(g1, g2, bijection):
    """One line per vertex of ``g1``: its index, the matching vertex of
    ``g2``, and both group elements."""
    lines = ['# {0} -> {1}'.format(g1.name, g2.name)]
    for i, j in enumerate(bijection):
        lines.append('{0} {1} {2} {3}'.format(
            i, j, g1.vertex_elements[i], g2.vertex_elements[j]))
    return '\n'.join(lines) + '\n'


@with_session
def list_catalog(session, *, extended=False, format_: FORMAT='text'):
    """Lists the group catalog with orders and graph tiers

    :param extended: List the extended catalog.
    :param format_: Output format.
    """
    session.extended = extended
    header = ['group', 'order', 'radical_order', 'vertices', 'tier']
    rows = [[e.name, e.group.order(), e.radical.order(), e.vertex_count,
             e.tier] for e in session.catalog()]
    return Output(report.render_rows('solgraph catalog', header, rows,
                                     format_))


COMMANDS = od[
    'analyze': analyze,
    'verify': verify,
    'iso': iso,
    'catalog': list_catalog,
]


def main(args=None, out=None, err=None, exit=True):
    """Runs the ``solgraph`` command, mapping errors to exit statuses: 2
    for usage and spec errors, 3 for budget and tier violations, 1 for
    failed checks and inconsistencies."""
    cli = Clize.get_cli(COMMANDS, description=DESCRIPTION)
    if args is None:
        args = fix_argv(sys.argv, sys.path, sys.modules['__main__'])
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        ret = cli(*args)
    except clize_errors.UserError as exc:
        print(str(exc), file=err)
        status = 2
    except errors.UserError as exc:
        print(str(exc), file=err)
        status = exc.exit_status
    else:
        status = 0
        if isinstance(ret, Output):
            out.write(ret.text)
            status = ret.status
        elif ret is not None:
            print(ret, file=out)
    if exit:
        sys.exit(status)
    return status
