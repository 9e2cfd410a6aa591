"""
Rendering of schedules and comparisons: ASCII/SVG Gantt charts, result
exports (JSON, CSV, markdown) and evaluation-style comparison tables
"""

from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from django.template.loader import render_to_string

from .metrics import Aggregates, MetricsError, column_means, improvement, run_simulation
from .utils import format_optional, format_rational

logger = logging.getLogger(__name__)

ASCII = 'ascii'
SVG = 'svg'
GANTT_STYLES = (ASCII, SVG)

JSON = 'json'
CSV = 'csv'
MARKDOWN = 'markdown'
EXPORT_FORMATS = (JSON, CSV, MARKDOWN)

DEFAULT_SCALE = 20
PALETTE = (
    '#4e79a7', '#f28e2b', '#e15759', '#76b7b2', '#59a14f',
    '#edc948', '#b07aa1', '#ff9da7', '#9c755f', '#bab0ac',
)


class ReportError(ValueError):
    """Unsupported rendering or export request"""


# ===================== GANTT CHARTS =====================

def _cells(schedule):
    """(label, start) per chart cell; idle gaps between segments get an empty label"""
    cells = []
    previous_end = None
    for segment in schedule.segments:
        if previous_end is not None and segment.start > previous_end:
            cells.append(('', previous_end))
        cells.append((segment.id, segment.start))
        previous_end = segment.end
    return cells, previous_end


def _render_ascii(schedule):
    cells, end = _cells(schedule)
    bar = []
    ticks = []
    for label, start in cells:
        width = max(len(label), len(str(start)), 2) + 1
        bar.append('|' + label.ljust(width))
        ticks.append(str(start).ljust(width + 1))
    bar.append('|')
    ticks.append(str(end))
    return ''.join(bar) + '\n' + ''.join(ticks) + '\n'


def _render_svg(schedule, scale, title):
    margin = 10
    top = margin
    bar_height = 30
    colors = {}
    bars = []
    for segment in schedule.segments:
        if segment.id not in colors:
            colors[segment.id] = PALETTE[len(colors) % len(PALETTE)]
        x = margin + segment.start * scale
        width = segment.length * scale
        bars.append({
            'x': x,
            'width': width,
            'label': segment.id,
            'label_x': x + width // 2,
            'fill': colors[segment.id],
        })

    boundaries = sorted({s.start for s in schedule.segments} | {s.end for s in schedule.segments})
    ticks = [{'x': margin + t * scale, 'time': t} for t in boundaries]
    context = {
        'title': title,
        'width': 2 * margin + schedule.makespan * scale,
        'height': top + bar_height + 30,
        'top': top,
        'bar_height': bar_height,
        'label_y': top + bar_height // 2 + 4,
        'tick_y': top + bar_height + 16,
        'bars': bars,
        'ticks': ticks,
    }
    return render_to_string('scheduler/gantt.svg', context)


def render_gantt(schedule, style=ASCII, scale=DEFAULT_SCALE, title=''):
    """Gantt chart of a schedule as ASCII text or an SVG document"""
    if style == ASCII:
        return _render_ascii(schedule)
    if style == SVG:
        return _render_svg(schedule, scale, title)
    raise ReportError(f'unknown gantt style {style!r}; expected ascii or svg')


# ===================== RESULT EXPORT =====================

def result_document(result):
    aggregates = result.aggregates
    return {
        'policy': result.policy,
        'dataset': result.dataset,
        'processes': [
            {
                'id': m.id,
                'arrival': m.arrival,
                'burst': m.burst,
                'completion': m.completion,
                'turnaround': m.turnaround,
                'waiting': m.waiting,
            }
            for m in result.per_process
        ],
        'aggregates': {
            'avg_tat': str(format_rational(aggregates.avg_turnaround)),
            'avg_wt': str(format_rational(aggregates.avg_waiting)),
            'ncs': aggregates.ncs,
            'makespan': aggregates.makespan,
        },
        'gantt': [{'id': s.id, 'start': s.start, 'end': s.end} for s in result.schedule.segments],
    }


def _result_csv(document):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['id', 'arrival', 'burst', 'completion', 'turnaround', 'waiting'])
    for p in document['processes']:
        writer.writerow([p['id'], p['arrival'], p['burst'], p['completion'], p['turnaround'], p['waiting']])
    writer.writerow([])
    writer.writerow(['aggregate', 'value'])
    for key, value in document['aggregates'].items():
        writer.writerow([key, value])
    return buffer.getvalue()


def export_result(result, format=JSON):
    document = result_document(result)
    if format == JSON:
        return json.dumps(document, indent=2) + '\n'
    if format == CSV:
        return _result_csv(document)
    if format == MARKDOWN:
        return render_to_string('scheduler/result.md', document)
    raise ReportError(f'unknown export format {format!r}; expected json, csv or markdown')


# ===================== COMPARISON =====================

def _improvement_or_none(base, candidate):
    try:
        return improvement(base, candidate)
    except MetricsError:
        return None


@dataclass(frozen=True)
class ComparisonRow:
    dataset: str
    base: Aggregates
    candidate: Aggregates
    improvements: Tuple[Optional[Fraction], Optional[Fraction], Optional[Fraction]]  # TAT, WT, NCS percentages

    @classmethod
    def from_aggregates(cls, dataset, base, candidate):
        return cls(dataset, base, candidate, (
            _improvement_or_none(base.avg_turnaround, candidate.avg_turnaround),
            _improvement_or_none(base.avg_waiting, candidate.avg_waiting),
            _improvement_or_none(base.ncs, candidate.ncs),
        ))


@dataclass(frozen=True)
class ComparisonReport:
    base_policy: str
    candidate_policy: str
    rows: Tuple[ComparisonRow, ...]

    @property
    def summary(self):
        """Column means of the improvement percentages, per-row values averaged"""
        return tuple(column_means(row.improvements[i] for row in self.rows) for i in range(3))

    @property
    def aggregate_means(self):
        return {
            'base': (
                column_means(r.base.avg_turnaround for r in self.rows),
                column_means(r.base.avg_waiting for r in self.rows),
                column_means(r.base.ncs for r in self.rows),
            ),
            'candidate': (
                column_means(r.candidate.avg_turnaround for r in self.rows),
                column_means(r.candidate.avg_waiting for r in self.rows),
                column_means(r.candidate.ncs for r in self.rows),
            ),
        }


def comparison_table(datasets, base, candidate, workers=1):
    """
    Simulate every (id, workload) pair under both policies. Rows keep the
    order of ``datasets`` however many workers run the simulations.
    """
    datasets = list(datasets)
    if not datasets:
        raise ReportError('a comparison needs at least one dataset')

    def compare(item):
        dataset_id, workload = item
        base_result = run_simulation(workload, base, dataset=dataset_id)
        candidate_result = run_simulation(workload, candidate, dataset=dataset_id)
        logger.debug('compared %s: %s vs %s', dataset_id, base.label, candidate.label)
        return ComparisonRow.from_aggregates(dataset_id, base_result.aggregates, candidate_result.aggregates)

    if workers > 1 and len(datasets) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(compare, datasets))
    else:
        rows = [compare(item) for item in datasets]
    return ComparisonReport(base.label, candidate.label, tuple(rows))


def comparison_document(report):
    def triple(values):
        return [str(v) if isinstance(v, int) else format_optional(v) for v in values]

    rows = []
    for row in report.rows:
        rows.append({
            'dataset': row.dataset,
            'base': triple((row.base.avg_turnaround, row.base.avg_waiting, row.base.ncs)),
            'candidate': triple((row.candidate.avg_turnaround, row.candidate.avg_waiting, row.candidate.ncs)),
            'improvement': triple(row.improvements),
        })
    means = report.aggregate_means
    return {
        'base_policy': report.base_policy,
        'candidate_policy': report.candidate_policy,
        'columns': ['tat', 'wt', 'ncs'],
        'rows': rows,
        'average': {
            'dataset': 'Average',
            'base': triple(means['base']),
            'candidate': triple(means['candidate']),
            'improvement': triple(report.summary),
        },
    }


def _comparison_csv(document):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    base, candidate = document['base_policy'], document['candidate_policy']
    header = ['dataset']
    for prefix in (base, candidate, 'improvement_%'):
        header.extend(f'{prefix}_{column}' for column in document['columns'])
    writer.writerow(header)
    for row in document['rows'] + [document['average']]:
        writer.writerow([row['dataset']] + row['base'] + row['candidate'] + row['improvement'])
    return buffer.getvalue()


def export_comparison(report, format=MARKDOWN):
    document = comparison_document(report)
    if format == JSON:
        return json.dumps(document, indent=2) + '\n'
    if format == CSV:
        return _comparison_csv(document)
    if format == MARKDOWN:
        return render_to_string('scheduler/comparison.md', document)
    raise ReportError(f'unknown export format {format!r}; expected markdown, csv or json')
