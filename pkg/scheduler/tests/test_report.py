import csv
import io
import json
import xml.etree.ElementTree as ET
from decimal import Decimal
from fractions import Fraction

from django.test import SimpleTestCase

from scheduler.engine import simulate
from scheduler.metrics import run_simulation
from scheduler.report import (
    ASCII, CSV, JSON, MARKDOWN, SVG, ComparisonRow, ReportError, comparison_table, export_comparison,
    export_result, render_gantt,
)
from scheduler.workload import TABLE1, ProcessSpec, Workload, bundled_dataset, expand_dataset_ids

from .helpers import DRQ_OFFLINE, SRR3

SVG_NS = '{http://www.w3.org/2000/svg}'


def parse_svg(document):
    return ET.fromstring(document.encode('utf-8'))


class GanttTests(SimpleTestCase):
    def test_ascii_boundaries(self):
        schedule, _ = simulate(TABLE1, SRR3)
        bar, ticks = render_gantt(schedule, ASCII).splitlines()
        self.assertTrue(bar.startswith('|P4 |P5 |P3 |'))
        self.assertEqual(bar.count('|'), 13)
        self.assertEqual(ticks.split(), ['1', '4', '6', '9', '12', '15', '18', '21', '24', '27', '29', '32', '33'])

    def test_ascii_single_segment(self):
        workload = Workload((ProcessSpec('P1', 0, 5),))
        schedule, _ = simulate(workload, DRQ_OFFLINE)
        self.assertEqual(render_gantt(schedule, ASCII).splitlines()[1].split(), ['0', '5'])

    def test_ascii_idle_gap_is_blank_cell(self):
        workload = Workload((ProcessSpec('A', 0, 2), ProcessSpec('B', 6, 2)))
        schedule, _ = simulate(workload, DRQ_OFFLINE)
        bar, ticks = render_gantt(schedule, ASCII).splitlines()
        self.assertEqual(bar.split('|')[1:-1], ['A  ', '   ', 'B  '])
        self.assertEqual(ticks.split(), ['0', '2', '6', '8'])

    def test_svg_has_one_rect_per_segment(self):
        schedule, _ = simulate(TABLE1, DRQ_OFFLINE)
        root = parse_svg(render_gantt(schedule, SVG, scale=10, title='drq on table1'))
        rects = root.findall(f'{SVG_NS}rect')
        self.assertEqual(len(rects), 8)
        self.assertEqual([r.get('x') for r in rects[:2]], ['20', '80'])
        labels = [t.text for t in root.findall(f'{SVG_NS}text')][:8]
        self.assertEqual(labels, ['P4', 'P5', 'P3', 'P2', 'P1', 'P6', 'P3', 'P4'])
        self.assertEqual(root.find(f'{SVG_NS}title').text, 'drq on table1')

    def test_svg_escapes_labels(self):
        workload = Workload((ProcessSpec('<a&b>', 0, 2),))
        root = parse_svg(render_gantt(simulate(workload, DRQ_OFFLINE)[0], SVG))
        self.assertEqual(len(root.findall(f'{SVG_NS}rect')), 1)

    def test_unknown_style(self):
        with self.assertRaises(ReportError):
            render_gantt(simulate(TABLE1, SRR3)[0], 'png')


class ExportResultTests(SimpleTestCase):
    def setUp(self):
        self.result = run_simulation(TABLE1, SRR3, dataset='table1')

    def test_json(self):
        document = json.loads(export_result(self.result, JSON))
        self.assertEqual(document['policy'], 'srr:3')
        self.assertEqual(document['dataset'], 'table1')
        self.assertEqual(document['aggregates'], {'avg_tat': '20.67', 'avg_wt': '15.33', 'ncs': 13, 'makespan': 33})
        self.assertEqual(len(document['gantt']), 12)
        self.assertEqual(document['gantt'][0], {'id': 'P4', 'start': 1, 'end': 4})
        p1 = document['processes'][0]
        self.assertEqual(p1, {'id': 'P1', 'arrival': 5, 'burst': 5, 'completion': 29, 'turnaround': 24, 'waiting': 19})

    def test_json_numbers_match_result(self):
        document = json.loads(export_result(self.result, JSON))
        for row, metrics in zip(document['processes'], self.result.per_process):
            self.assertEqual(row['completion'], metrics.completion)
            self.assertEqual(row['waiting'], metrics.waiting)
        self.assertEqual(Decimal(document['aggregates']['avg_wt']), Decimal('15.33'))

    def test_csv(self):
        rows = list(csv.reader(io.StringIO(export_result(self.result, CSV))))
        self.assertEqual(rows[0], ['id', 'arrival', 'burst', 'completion', 'turnaround', 'waiting'])
        self.assertEqual(rows[1], ['P1', '5', '5', '29', '24', '19'])
        self.assertEqual(rows[7], [])
        self.assertIn(['ncs', '13'], rows)
        self.assertIn(['avg_wt', '15.33'], rows)

    def test_markdown(self):
        text = export_result(self.result, MARKDOWN)
        self.assertTrue(text.startswith('# srr:3 on table1'))
        self.assertIn('| P5 | 2 | 2 | 6 | 4 | 2 |', text)
        self.assertIn('| Context switches | 13 |', text)
        self.assertIn('| P3 | 32 | 33 |', text)

    def test_unknown_format(self):
        with self.assertRaises(ReportError):
            export_result(self.result, 'xlsx')


class ComparisonTests(SimpleTestCase):
    def test_single_dataset_summary_is_that_row(self):
        report = comparison_table([('table1', TABLE1)], SRR3, DRQ_OFFLINE)
        self.assertEqual(len(report.rows), 1)
        row = report.rows[0]
        self.assertEqual(report.summary, row.improvements)
        self.assertEqual(row.improvements[2], Fraction(400, 13))
        self.assertEqual(row.improvements[0], Fraction(-300, 124))
        self.assertEqual(row.improvements[1], Fraction(-300, 92))
        self.assertEqual((row.base.ncs, row.candidate.ncs), (13, 9))

    def test_rows_keep_dataset_order_with_workers(self):
        ids = expand_dataset_ids('ds1..ds10')
        datasets = [(i, bundled_dataset(i)) for i in ids]
        serial = comparison_table(datasets, SRR3, DRQ_OFFLINE)
        threaded = comparison_table(datasets, SRR3, DRQ_OFFLINE, workers=4)
        self.assertEqual([r.dataset for r in threaded.rows], ids)
        self.assertEqual(serial, threaded)

    def test_summary_is_mean_of_row_percentages(self):
        datasets = [(i, bundled_dataset(i)) for i in ('ds1', 'ds5', 'ds10')]
        report = comparison_table(datasets, SRR3, DRQ_OFFLINE)
        for column in range(3):
            values = [r.improvements[column] for r in report.rows if r.improvements[column] is not None]
            self.assertEqual(report.summary[column], sum(values) / len(values))

    def test_zero_baseline_has_no_percentage(self):
        workload = Workload((ProcessSpec('P1', 0, 3),))
        report = comparison_table([('solo', workload)], SRR3, DRQ_OFFLINE)
        self.assertIsNone(report.rows[0].improvements[1])
        self.assertIsNone(report.summary[1])
        self.assertIn('n/a', export_comparison(report, MARKDOWN))

    def test_row_from_aggregates(self):
        base = run_simulation(TABLE1, SRR3).aggregates
        candidate = run_simulation(TABLE1, DRQ_OFFLINE).aggregates
        row = ComparisonRow.from_aggregates('ds5', base, candidate)
        self.assertEqual(row.improvements[2], Fraction(400, 13))

    def test_exports(self):
        report = comparison_table([('table1', TABLE1)], SRR3, DRQ_OFFLINE)
        markdown = export_comparison(report)
        self.assertIn('| table1 | 20.67 | 15.33 | 13 | 21.17 | 15.83 | 9 | -2.42 | -3.26 | 30.77 |', markdown)
        self.assertIn('| **Average** |', markdown)

        document = json.loads(export_comparison(report, JSON))
        self.assertEqual(document['rows'][0]['improvement'], ['-2.42', '-3.26', '30.77'])
        self.assertEqual(document['average']['improvement'], ['-2.42', '-3.26', '30.77'])

        rows = list(csv.reader(io.StringIO(export_comparison(report, CSV))))
        self.assertEqual(rows[0][0], 'dataset')
        self.assertEqual(rows[0][1], 'srr:3_tat')
        self.assertEqual(rows[-1][0], 'Average')

    def test_needs_a_dataset(self):
        with self.assertRaises(ReportError):
            comparison_table([], SRR3, DRQ_OFFLINE)
