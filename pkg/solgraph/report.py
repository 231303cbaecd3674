# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

"""verification reports and their JSON, Markdown, CSV and text renderings"""

import csv
import io
import json
import sys

import attr
from clize.util import Formatter
import od


HOLDS = 'holds'
FAILS = 'fails'
SKIPPED = 'skipped'
INFORMATIONAL = 'informational'
STATUSES = (HOLDS, FAILS, SKIPPED, INFORMATIONAL)

FORMATS = ('text', 'json', 'md', 'csv')


@attr.s
class PropositionResult(object):
    """The outcome of one claim on one group.

    A failure carries the violating data in ``witness``; a skip carries
    ``witness['reason']``.
    """

    claim = attr.ib()
    group = attr.ib()
    status = attr.ib(validator=attr.validators.in_(STATUSES))
    witness = attr.ib(default=attr.Factory(od))
    ms = attr.ib(default=0)

    @property
    def reason(self):
        return self.witness.get('reason')

    def to_dict(self):
        return od[
            'claim': self.claim,
            'group': self.group,
            'status': self.status,
            'witness': self.witness,
            'ms': self.ms,
        ]

    @classmethod
    def from_dict(cls, data):
        return cls(data['claim'], data['group'], data['status'],
                   data['witness'], data['ms'])


@attr.s
class VerificationReport(object):
    version = attr.ib()
    catalog = attr.ib(converter=list)
    results = attr.ib(converter=list, default=attr.Factory(list))

    @property
    def summary(self):
        counts = od[HOLDS: 0, FAILS: 0, SKIPPED: 0, INFORMATIONAL: 0]
        for result in self.results:
            counts[result.status] += 1
        return counts

    @property
    def failed(self):
        return [r for r in self.results if r.status == FAILS]

    def normalized(self):
        """A copy with elapsed times zeroed, for comparing runs."""
        return attr.evolve(self, results=[
            attr.evolve(r, ms=0) for r in self.results])

    def to_dict(self):
        return od[
            'version': self.version,
            'catalog': list(self.catalog),
            'results': [r.to_dict() for r in self.results],
            'summary': self.summary,
        ]

    @classmethod
    def from_dict(cls, data):
        return cls(data['version'], data['catalog'],
                   [PropositionResult.from_dict(r) for r in data['results']])


def to_json(report):
    return json.dumps(report.to_dict(), indent=2) + '\n'


def from_json(text):
    return VerificationReport.from_dict(json.loads(text))


def witness_text(witness):
    return ', '.join('{0}={1}'.format(key, _cell(value))
                     for key, value in witness.items())


def _cell(value):
    if isinstance(value, (list, tuple)):
        return '[' + ' '.join(_cell(v) for v in value) + ']'
    if isinstance(value, dict):
        return '{' + witness_text(value) + '}'
    return str(value)


def _md_escape(text):
    return text.replace('|', '\\|')


def to_markdown(report):
    lines = ['# solgraph verification report', '',
             'version: {0}  '.format(report.version),
             'catalog: {0}'.format(', '.join(report.catalog)), '']
    by_claim = od()
    for result in report.results:
        by_claim.setdefault(result.claim, []).append(result)
    for claim, results in by_claim.items():
        lines.extend(['## ' + claim, '',
                      '| group | status | witness | ms |',
                      '|---|---|---|---|'])
        for r in results:
            lines.append('| {0} | {1} | {2} | {3} |'.format(
                _md_escape(r.group), r.status,
                _md_escape(witness_text(r.witness)), r.ms))
        lines.append('')
    summary = report.summary
    lines.append('**summary:** ' + ', '.join(
        '{0} {1}'.format(count, status) for status, count in summary.items()))
    return '\n'.join(lines) + '\n'


def to_csv(report):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(['claim', 'group', 'status', 'ms', 'witness'])
    for r in report.results:
        writer.writerow([r.claim, r.group, r.status, r.ms,
                         json.dumps(r.witness)])
    return out.getvalue()


def _formatter():
    # text reports are never wrapped to the terminal width
    return Formatter(max_width=sys.maxsize)


def to_text(report):
    f = _formatter()
    with f.columns(num=4) as cols:
        for r in report.results:
            cols.append(r.claim, r.group, r.status, witness_text(r.witness))
    f.new_paragraph()
    f.append(', '.join('{0} {1}'.format(count, status)
                       for status, count in report.summary.items()))
    return str(f) + '\n'


RENDERERS = {
    'text': to_text,
    'json': to_json,
    'md': to_markdown,
    'csv': to_csv,
}


def render(report, fmt):
    return RENDERERS[fmt](report)


def render_fields(title, fields, fmt):
    """Renders a flat ordered mapping, as printed by the ``analyze`` and
    ``iso`` commands."""
    if fmt == 'json':
        return json.dumps(fields, indent=2) + '\n'
    if fmt == 'csv':
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(['field', 'value'])
        for key, value in fields.items():
            writer.writerow([key, _cell(value)])
        return out.getvalue()
    if fmt == 'md':
        lines = ['# ' + title, '', '| field | value |', '|---|---|']
        lines.extend('| {0} | {1} |'.format(key, _md_escape(_cell(value)))
                     for key, value in fields.items())
        return '\n'.join(lines) + '\n'
    f = _formatter()
    f.append(title)
    with f.indent():
        with f.columns(num=2) as cols:
            for key, value in fields.items():
                cols.append(key + ':', _cell(value))
    return str(f) + '\n'


def render_rows(title, header, rows, fmt):
    """Renders a table, as printed by the ``catalog`` command."""
    if fmt == 'json':
        return json.dumps([od(zip(header, row)) for row in rows],
                          indent=2) + '\n'
    if fmt == 'csv':
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(header)
        writer.writerows([_cell(v) for v in row] for row in rows)
        return out.getvalue()
    if fmt == 'md':
        lines = ['# ' + title, '',
                 '| ' + ' | '.join(header) + ' |',
                 '|' + '---|' * len(header)]
        lines.extend('| ' + ' | '.join(_md_escape(_cell(v)) for v in row)
                     + ' |' for row in rows)
        return '\n'.join(lines) + '\n'
    f = _formatter()
    with f.columns(num=len(header)) as cols:
        cols.append(*header)
        for row in rows:
            cols.append(*(_cell(v) for v in row))
    return str(f) + '\n'
