"""Tabulate closed-form critical heat-bath temperatures over p or mu."""

import logging

from django.core.management.base import CommandError

from reset_machine.constants import columns, regimes, sweep_axes
from reset_machine.exceptions import USAGE_EXIT_CODE
from reset_machine.management.utils import ResetMachineCommand
from reset_machine.quantumness import PERTURBATIVE_LABEL
from reset_machine.sweeps import crit_rows
from reset_machine.utils import get_setting, parse_range, value_range

logger = logging.getLogger(__name__)


class Command(ResetMachineCommand):
    help = 'Write critical temperatures, allowed-g windows and optionally exact boundaries as CSV.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--regime',
            action='store',
            dest='regime',
            choices=sorted(regimes.REGIME_CHOICES),
            default='low',
            help='Spin-bath limit of the closed forms.',
        )
        parser.add_argument(
            '--p-range',
            action='store',
            dest='p_range',
            default=None,
            help='Grid of p1 = p2 = p as min:max:steps.',
        )
        parser.add_argument(
            '--mu-range',
            action='store',
            dest='mu_range',
            default=None,
            help='Grid of mu = p2 / p1 as min:max:steps, at fixed --p.',
        )
        parser.add_argument(
            '--window-t1',
            action='store',
            type=float,
            dest='window_t1',
            default=None,
            help='Heat-bath temperature at which to report the allowed-g window endpoints.',
        )
        parser.add_argument(
            '--exact-boundary',
            action='store_true',
            dest='exact_boundary',
            default=False,
            help='Bisect the exact steady state in T1 at the binding window center.',
        )
        parser.add_argument(
            '--progress',
            action='store_true',
            dest='progress',
            default=get_setting('RESET_MACHINE_PROGRESS', False),
            help='Show a progress bar.',
        )

    def run(self, **options):
        if (options['p_range'] is None) == (options['mu_range'] is None):
            raise CommandError('Give exactly one of --p-range and --mu-range.', returncode=USAGE_EXIT_CODE)
        if options['omega'] != 1.0:
            raise CommandError('Closed-form temperatures need omega = 1.', returncode=USAGE_EXIT_CODE)

        regime = regimes.REGIME_CHOICES[options['regime']]
        if regime == regimes.HIGH_T2 and options['t2'] is None:
            raise CommandError('The high regime needs --t2.', returncode=USAGE_EXIT_CODE)
        closed_form_t2 = options['t2'] if regime == regimes.HIGH_T2 else None
        exact_t2 = self.default_t2(options)

        if options['p_range'] is not None:
            axis = sweep_axes.P
            minimum, maximum, steps = parse_range(options['p_range'], '--p-range')
            p = None
            mu = options['mu'] if options['mu'] is not None else 1.0
        else:
            axis = sweep_axes.MU
            minimum, maximum, steps = parse_range(options['mu_range'], '--mu-range')
            p = options['p'] if options['p'] is not None else options['p1']
            mu = None

        values = value_range(minimum, maximum, steps)
        rows = crit_rows(
            values,
            axis,
            regime,
            p=p,
            mu=mu if mu is not None else 1.0,
            t2=closed_form_t2,
            t1=options['window_t1'],
            exact_boundary=options['exact_boundary'],
            exact_t2=exact_t2,
            progress=options['progress'],
        )

        comments = self.comments(
            axis=axis,
            range=f'{minimum!r}:{maximum!r}:{steps}',
            regime=regime,
            p=p,
            mu=mu,
            t2_closed_form=closed_form_t2,
            t2_exact=exact_t2 if options['exact_boundary'] else None,
            window_t1=options['window_t1'],
            t_crit=PERTURBATIVE_LABEL,
        )
        header = ['value'] + columns.CRIT_COLUMNS
        self.write_csv(rows, header, comments, options['out'])
