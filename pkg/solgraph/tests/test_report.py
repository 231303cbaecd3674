# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

import json

import od

from solgraph import report
from solgraph.report import PropositionResult, VerificationReport
from solgraph.tests.util import Tests


def sample():
    return VerificationReport('1.0', ['A5', 'S4'], [
        PropositionResult('B11/30', 'A5', report.HOLDS,
                          od['ps': '11/30', 'equality': True], 3),
        PropositionResult('L2.1a', 'S4', report.SKIPPED,
                          od['reason': 'group is soluble'], 0),
    ])


class ReportTests(Tests):
    def test_summary(self):
        rep = sample()
        self.assertEqual(list(rep.summary.items()), [
            ('holds', 1), ('fails', 0), ('skipped', 1),
            ('informational', 0)])
        self.assertEqual(rep.failed, [])
        self.assertEqual(rep.results[1].reason, 'group is soluble')
        self.assertIsNone(rep.results[0].reason)

    def test_failed(self):
        rep = sample()
        rep.results.append(PropositionResult(
            'P2.4', 'A5', report.FAILS, od['Delta_s': 60, 'n': 59]))
        self.assertEqual([r.claim for r in rep.failed], ['P2.4'])

    def test_invalid_status(self):
        self.assertRaises(ValueError, PropositionResult,
                          'P2.4', 'A5', 'maybe')

    def test_normalized(self):
        rep = sample()
        self.assertEqual([r.ms for r in rep.normalized().results], [0, 0])
        self.assertEqual(rep.results[0].ms, 3)

    def test_json(self):
        rep = sample()
        data = json.loads(report.to_json(rep))
        self.assertEqual(list(data), ['version', 'catalog', 'results',
                                      'summary'])
        self.assertEqual(data['results'][0], {
            'claim': 'B11/30', 'group': 'A5', 'status': 'holds',
            'witness': {'ps': '11/30', 'equality': True}, 'ms': 3})
        self.assertEqual(data['summary']['skipped'], 1)
        self.assertEqual(report.from_json(report.to_json(rep)), rep)

    def test_text(self):
        self.assertLinesEqual("""
            B11/30   A5   holds     ps=11/30, equality=True
            L2.1a    S4   skipped   reason=group is soluble
            1 holds, 0 fails, 1 skipped, 0 informational
        """, report.to_text(sample()))

    def test_text_is_not_wrapped(self):
        degrees = list(range(100, 160))
        rep = VerificationReport('1.0', ['A5'], [
            PropositionResult('P5.1', 'A5', report.HOLDS,
                              od['degrees': degrees]),
            PropositionResult('P3.3', 'A5', report.HOLDS, od()),
        ])
        lines = report.to_text(rep).splitlines()
        self.assertEqual(lines[0].split()[:3], ['P5.1', 'A5', 'holds'])
        self.assertTrue(lines[0].endswith(
            'degrees=' + report._cell(degrees)))
        self.assertEqual(lines[1], 'P3.3   A5   holds')
        self.assertEqual(lines[2], '')

    def test_markdown(self):
        text = report.to_markdown(sample())
        self.assertTrue(text.startswith('# solgraph verification report\n'))
        self.assertIn('catalog: A5, S4', text)
        self.assertIn('## B11/30\n', text)
        self.assertIn('| A5 | holds | ps=11/30, equality=True | 3 |', text)
        self.assertIn('| S4 | skipped | reason=group is soluble | 0 |', text)
        self.assertIn('**summary:** 1 holds, 0 fails, 1 skipped, '
                      '0 informational', text)

    def test_markdown_escapes_pipes(self):
        rep = VerificationReport('1.0', ['A5'], [PropositionResult(
            'P3.3', 'A5', report.HOLDS, od['note': 'a|b'])])
        self.assertIn('note=a\\|b', report.to_markdown(rep))

    def test_csv(self):
        self.assertEqual(report.to_csv(sample()).splitlines(), [
            'claim,group,status,ms,witness',
            'B11/30,A5,holds,3,"{""ps"": ""11/30"", ""equality"": true}"',
            'L2.1a,S4,skipped,0,"{""reason"": ""group is soluble""}"',
        ])

    def test_render(self):
        rep = sample()
        for fmt in report.FORMATS:
            self.assertEqual(report.render(rep, fmt),
                             report.RENDERERS[fmt](rep))


class WitnessTextTests(Tests):
    def test_nested(self):
        self.assertEqual(
            report.witness_text(od['a': [1, 2], 'b': od['c': 3],
                                   'd': None]),
            'a=[1 2], b={c=3}, d=None')


class FieldsTests(Tests):
    fields = od['group': 'A5', 'order': 60, 'degrees': [8, 14]]

    def test_text(self):
        self.assertLinesEqual("""
            A5
              group:     A5
              order:     60
              degrees:   [8 14]
        """, report.render_fields('A5', self.fields, 'text'))

    def test_json(self):
        self.assertEqual(
            json.loads(report.render_fields('A5', self.fields, 'json')),
            {'group': 'A5', 'order': 60, 'degrees': [8, 14]})

    def test_csv(self):
        self.assertEqual(report.render_fields('A5', self.fields, 'csv'),
                         'field,value\ngroup,A5\norder,60\n'
                         'degrees,[8 14]\n')

    def test_markdown(self):
        self.assertEqual(
            report.render_fields('A5', self.fields, 'md').splitlines(),
            ['# A5', '', '| field | value |', '|---|---|',
             '| group | A5 |', '| order | 60 |', '| degrees | [8 14] |'])


class RowsTests(Tests):
    header = ['group', 'order']
    rows = [['A5', 60], ['SL(2,5)', 120]]

    def test_text(self):
        self.assertLinesEqual("""
            group     order
            A5        60
            SL(2,5)   120
        """, report.render_rows('catalog', self.header, self.rows, 'text'))

    def test_json(self):
        self.assertEqual(
            json.loads(report.render_rows('catalog', self.header, self.rows,
                                          'json')),
            [{'group': 'A5', 'order': 60}, {'group': 'SL(2,5)', 'order': 120}])

    def test_csv(self):
        self.assertEqual(
            report.render_rows('catalog', self.header, self.rows, 'csv'),
            'group,order\nA5,60\nSL(2,5),120\n')

    def test_markdown(self):
        self.assertEqual(
            report.render_rows('catalog', self.header, self.rows,
                               'md').splitlines(),
            ['# catalog', '', '| group | order |', '|---|---|',
             '| A5 | 60 |', '| SL(2,5) | 120 |'])
