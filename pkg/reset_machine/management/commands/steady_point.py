"""Report the exact steady state of the reset machine at one parameter point."""

import logging

from rest_framework.renderers import JSONRenderer

from reset_machine.dynamics import build_liouvillian, steady_state
from reset_machine.exceptions import PerturbativeRangeError
from reset_machine.management.utils import ResetMachineCommand
from reset_machine.quantumness import (
    BINDING_SUM_LABELS,
    coherence_exact,
    coherence_perturbative,
    magic_report,
)
from reset_machine.serializers import LiouvillianSerializer, SteadyStateSerializer

logger = logging.getLogger(__name__)


def _vector(r):
    return '(' + ', '.join(f'{component:.12g}' for component in r) + ')'


class Command(ResetMachineCommand):
    help = 'Solve for the steady state at one parameter point and report coherence and magic of qubit 1.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--json',
            action='store_true',
            dest='json',
            default=False,
            help='Print the steady state as versioned JSON.',
        )
        parser.add_argument(
            '--liouvillian',
            action='store_true',
            dest='liouvillian',
            default=False,
            help='With --json, also include the 16 x 16 Liouvillian.',
        )

    def run(self, **options):
        params = self.model_params(options)
        liouvillian = build_liouvillian(params)
        steady = steady_state(params, liouvillian=liouvillian)

        if options['json']:
            document = dict(SteadyStateSerializer(steady).data)
            if options['liouvillian']:
                document['liouvillian'] = LiouvillianSerializer(liouvillian).data
            content = JSONRenderer().render(document, renderer_context={'indent': 2}).decode('utf-8')
            self.write_output(content + '\n', options['out'])
            return

        self.write_output(self.report(steady), options['out'])

    def report(self, steady):
        params = steady.params
        magic = magic_report(steady.bloch1)
        try:
            perturbative = f'{coherence_perturbative(params):.12g}'
        except PerturbativeRangeError:
            perturbative = 'n/a (omega != 1)'

        lines = [
            'Parameters: ' + ', '.join(f'{key}={value!r}' for key, value in params.as_dict().items()),
            f'Residual: {steady.residual:.3e}',
            f'Bloch vector qubit 1: {_vector(steady.bloch1)}',
            f'Bloch vector qubit 2: {_vector(steady.bloch2)}',
            f'C_l1 exact: {coherence_exact(steady):.12g}',
            f'C_l1 first order: {perturbative}',
            'Binding sums: ' + ', '.join(
                f'{label}={value:.12g}' for label, value in zip(BINDING_SUM_LABELS, magic.named_sums)
            ),
            f'Max sum: {magic.max_sum:.12g}',
            f'Has magic: {"yes" if magic.has_magic else "no"}',
            'Warnings: ' + (', '.join(steady.warnings) or 'none'),
        ]
        return '\n'.join(lines) + '\n'
