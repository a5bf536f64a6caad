"""Integrate the master equation from tau1 x tau2 and tabulate the approach to the steady state."""

import logging

from reset_machine.constants import columns
from reset_machine.management.utils import ResetMachineCommand
from reset_machine.sweeps import transient_rows

logger = logging.getLogger(__name__)

# Default horizon, in units of the slower reset time.
DEFAULT_HORIZON = 200.0


class Command(ResetMachineCommand):
    help = 'Write the transient coherence, max Bloch sum and trace distance to the steady state as CSV.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--t-end',
            action='store',
            type=float,
            dest='t_end',
            default=None,
            help='End time (default 200 / min(p1, p2)).',
        )
        parser.add_argument(
            '--dt',
            action='store',
            type=float,
            dest='dt',
            default=None,
            help='Integration step (default 0.01 / max(1, p1 + p2, g, omega)).',
        )
        parser.add_argument(
            '--store-every',
            action='store',
            type=int,
            dest='store_every',
            default=None,
            help='Steps between stored rows.',
        )

    def run(self, **options):
        params = self.model_params(options)
        t_end = options['t_end']
        if t_end is None:
            slowest = min(params.p1, params.p2) or max(params.p1, params.p2)
            t_end = DEFAULT_HORIZON / slowest if slowest > 0 else DEFAULT_HORIZON

        rows, summary, trajectory = transient_rows(params, t_end, dt=options['dt'],
                                                   store_every=options['store_every'])

        comments = self.comments(
            params,
            t_end=t_end,
            dt=trajectory.dt,
            max_correction=trajectory.max_correction,
            steady_c_l1=summary.steady_coherence,
            transient_max_c_l1=summary.max_coherence,
            transient_max_t=summary.max_coherence_time,
            transient_exceeds_steady='yes' if summary.exceeds_steady else 'no',
        )
        self.write_csv(rows, columns.TRANSIENT_COLUMNS, comments, options['out'])
