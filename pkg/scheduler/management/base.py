"""
Shared plumbing for the scheduler management commands: exit codes, policy
flags, dataset loading and output writing
"""

import logging
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from scheduler.policies import DRQ_MODES, TRQ_MODES, parse_policy
from scheduler.workload import load_workload

logger = logging.getLogger('scheduler.commands')

EXIT_USAGE = 1
EXIT_IO = 2


class SchedulerCommand(BaseCommand):
    requires_system_checks = []
    requires_migrations_checks = False

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        default_exit = parser.exit

        def exit(status=0, message=None):
            # argparse signals usage errors with 2, which is reserved for I/O failures here
            default_exit(EXIT_USAGE if status == 2 else status, message)

        parser.exit = exit
        return parser

    def add_policy_arguments(self, parser):
        defaults = settings.SCHEDULER
        parser.add_argument(
            '--quantum', type=int, default=defaults['DEFAULT_QUANTUM'],
            help='fixed quantum for srr when the policy gives none (default: %(default)s)',
        )
        parser.add_argument(
            '--threshold', default=defaults['DEFAULT_THRESHOLD'],
            help='drq threshold as a fraction of the original burst, e.g. 0.04, 1/25 or 4%% (default: %(default)s)',
        )
        parser.add_argument(
            '--drq-mode', choices=DRQ_MODES, default=defaults['DEFAULT_DRQ_MODE'],
            help='offline plans rounds over all processes, online over arrived ones (default: %(default)s)',
        )
        parser.add_argument(
            '--trq-mode', choices=TRQ_MODES, default=defaults['DEFAULT_TRQ_MODE'],
            help='ready-queue time estimate for drq ordering (default: %(default)s)',
        )

    def policy_from_options(self, text, options):
        try:
            return parse_policy(
                text,
                quantum=options['quantum'],
                threshold=options['threshold'],
                drq_mode=options['drq_mode'],
                trq_mode=options['trq_mode'],
            )
        except ValueError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)

    def load_dataset(self, source):
        try:
            return load_workload(source)
        except OSError as e:
            raise CommandError(f'cannot read dataset {source}: {e.strerror or e}', returncode=EXIT_IO)
        except ValueError as e:
            raise CommandError(f'invalid dataset {source}: {e}', returncode=EXIT_USAGE)

    def emit(self, text, output=None):
        """Write to the output path, or to stdout when there is none"""
        if not output or output == '-':
            self.stdout.write(text, ending='')
            return
        try:
            Path(output).write_text(text, encoding='utf-8')
        except OSError as e:
            raise CommandError(f'cannot write {output}: {e.strerror or e}', returncode=EXIT_IO)
        logger.info('wrote %s', output)
