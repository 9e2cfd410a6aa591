import argparse

from django.conf import settings
from django.core.management.base import CommandError

from scheduler.engine import SEGMENT_ENGINE, TICK_ENGINE
from scheduler.management.base import EXIT_USAGE, SchedulerCommand, logger
from scheduler.metrics import run_simulation
from scheduler.models import store_run
from scheduler.report import EXPORT_FORMATS, GANTT_STYLES, JSON, export_result, render_gantt


class Command(SchedulerCommand):
    help = 'Simulate one workload under one scheduling policy'

    def add_arguments(self, parser):
        parser.add_argument(
            '--dataset', required=True,
            help='bundled dataset id (table1, ds1..ds10) or a CSV/JSON workload file',
        )
        parser.add_argument(
            '--policy', default='drq',
            help='fcfs, srr, srr:<quantum>, drq, drq:online (default: %(default)s)',
        )
        self.add_policy_arguments(parser)
        parser.add_argument('--format', choices=EXPORT_FORMATS, default=JSON, help='result format (default: %(default)s)')
        parser.add_argument('--gantt', choices=GANTT_STYLES, help='also render a Gantt chart (default: none)')
        parser.add_argument('--gantt-output', help='write the chart here instead of after the result (default: none)')
        parser.add_argument('-o', '--output', help='write the result here instead of stdout (default: stdout)')
        parser.add_argument('--save', action='store_true', help='store the run in the database (default: off)')
        parser.add_argument(
            '--engine', choices=(SEGMENT_ENGINE, TICK_ENGINE), default=SEGMENT_ENGINE,
            help=argparse.SUPPRESS,
        )

    def handle(self, *args, **options):
        config = self.policy_from_options(options['policy'], options)
        label, workload = self.load_dataset(options['dataset'])
        logger.info('simulating %s (%d processes) under %s', label, len(workload), config.label)

        try:
            result = run_simulation(workload, config, dataset=label, engine=options['engine'])
        except ValueError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)

        document = export_result(result, options['format'])
        if options['gantt']:
            chart = render_gantt(
                result.schedule, options['gantt'],
                scale=settings.SCHEDULER['GANTT_SCALE'],
                title=f'{config.label} on {label}',
            )
            if options['gantt_output']:
                self.emit(chart, options['gantt_output'])
            else:
                document += chart
        self.emit(document, options['output'])

        if options['save']:
            run = store_run(result)
            logger.info('stored run %s', run.id)
