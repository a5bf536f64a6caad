"""Sweep one parameter and tabulate steady-state coherence and magic of qubit 1."""

import logging

from django.core.management.base import CommandError

from reset_machine.constants import columns
from reset_machine.exceptions import USAGE_EXIT_CODE
from reset_machine.management.utils import ResetMachineCommand
from reset_machine.sweeps import SweepSpec, run_sweep
from reset_machine.utils import default_workers, get_setting

logger = logging.getLogger(__name__)


class Command(ResetMachineCommand):
    help = 'Evaluate the steady state over a parameter grid and write one CSV row per point.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--sweep',
            action='store',
            dest='sweep',
            required=True,
            help='Grid as axis:min:max:steps[:log], axis one of g, t1, t2, p1, p2, p, mu.',
        )
        parser.add_argument(
            '--workers',
            action='store',
            type=int,
            dest='workers',
            default=None,
            help='Worker processes (default: RESET_MACHINE_WORKERS or the number of processors).',
        )
        parser.add_argument(
            '--exact-only',
            action='store_true',
            dest='exact_only',
            default=False,
            help='Skip the closed-form columns (required when omega != 1).',
        )
        parser.add_argument(
            '--progress',
            action='store_true',
            dest='progress',
            default=get_setting('RESET_MACHINE_PROGRESS', False),
            help='Show a progress bar.',
        )

    def run(self, **options):
        params = self.model_params(options)
        spec = SweepSpec.parse(options['sweep'], params)

        if params.omega != 1.0 and not options['exact_only']:
            raise CommandError('Closed-form columns need omega = 1; pass --exact-only.', returncode=USAGE_EXIT_CODE)

        workers = options['workers'] or default_workers()
        if workers < 1:
            raise CommandError('--workers must be at least 1.', returncode=USAGE_EXIT_CODE)

        rows = run_sweep(spec, workers=workers, exact_only=options['exact_only'], progress=options['progress'])

        header = [
            column for column in columns.SWEEP_COLUMNS
            if not (options['exact_only'] and column in columns.PERTURBATIVE_SWEEP_COLUMNS)
        ]
        comments = self.comments(params, sweep=spec.describe(), perturbative_order=2)
        self.write_csv(rows, header, comments, options['out'])
