from django.core.management.base import CommandError

from scheduler.management.base import EXIT_USAGE, SchedulerCommand
from scheduler.workload import DEFAULT_BURST_MAX, WorkloadError, format_for_path, generate_workload, serialize_workload


class Command(SchedulerCommand):
    help = 'Generate a reproducible random workload'

    def add_arguments(self, parser):
        parser.add_argument('--count', type=int, required=True, help='number of processes')
        parser.add_argument('--seed', type=int, default=0, help='generator seed (default: %(default)s)')
        parser.add_argument('--arrival-max', type=int, help='largest arrival time (default: 2 x count)')
        parser.add_argument(
            '--burst-max', type=int, default=DEFAULT_BURST_MAX,
            help='largest burst time (default: %(default)s)',
        )
        parser.add_argument(
            '--format', choices=('csv', 'json'),
            help='output format (default: from the output suffix, else csv)',
        )
        parser.add_argument('-o', '--output', help='write the workload here instead of stdout (default: stdout)')

    def handle(self, *args, **options):
        try:
            workload = generate_workload(
                options['count'],
                options['seed'],
                arrival_max=options['arrival_max'],
                burst_max=options['burst_max'],
            )
        except WorkloadError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)

        format = options['format'] or format_for_path(options['output'])
        self.emit(serialize_workload(workload, format), options['output'])
