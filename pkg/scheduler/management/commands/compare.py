from django.conf import settings
from django.core.management.base import CommandError

from scheduler.management.base import EXIT_USAGE, SchedulerCommand, logger
from scheduler.report import EXPORT_FORMATS, MARKDOWN, comparison_table, export_comparison
from scheduler.workload import WorkloadError, expand_dataset_ids


class Command(SchedulerCommand):
    help = 'Compare a candidate policy against a base policy over several datasets'

    def add_arguments(self, parser):
        parser.add_argument(
            '--datasets', default='ds1..ds10',
            help='comma separated dataset ids or files; dsA..dsB ranges allowed (default: %(default)s)',
        )
        parser.add_argument('--base', default='srr:3', help='baseline policy (default: %(default)s)')
        parser.add_argument('--candidate', default='drq', help='candidate policy (default: %(default)s)')
        self.add_policy_arguments(parser)
        parser.add_argument('--format', choices=EXPORT_FORMATS, default=MARKDOWN, help='report format (default: %(default)s)')
        parser.add_argument('-o', '--output', help='write the report here instead of stdout (default: stdout)')
        parser.add_argument(
            '--workers', type=int, default=settings.SCHEDULER['COMPARE_WORKERS'],
            help='datasets simulated concurrently (default: %(default)s)',
        )

    def handle(self, *args, **options):
        base = self.policy_from_options(options['base'], options)
        candidate = self.policy_from_options(options['candidate'], options)
        if options['workers'] < 1:
            raise CommandError('--workers must be at least 1', returncode=EXIT_USAGE)
        try:
            sources = expand_dataset_ids(options['datasets'])
        except WorkloadError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)

        datasets = [self.load_dataset(source) for source in sources]
        logger.info('comparing %s against %s on %d datasets', candidate.label, base.label, len(datasets))
        report = comparison_table(datasets, base, candidate, workers=options['workers'])
        self.emit(export_comparison(report, options['format']), options['output'])
