"""
Shared plumbing for the reset machine management commands.
"""

import logging

from django.core.management.base import BaseCommand, CommandError

from reset_machine import __version__
from reset_machine.exceptions import USAGE_EXIT_CODE, BaseError
from reset_machine.model import ModelParams
from reset_machine.renderers import CommentedCsvRenderer
from reset_machine.utils import get_setting

logger = logging.getLogger(__name__)


class ResetMachineCommand(BaseCommand):
    """
    Base command taking the model parameters.

    Subclasses implement ``run``; library errors are turned into a
    CommandError carrying the error's exit code (2 for bad input, 3 for
    numerical failures).
    """

    def add_arguments(self, parser):
        parser.add_argument('--g', action='store', type=float, dest='g', default=0.01,
                            help='Coupling strength g.')
        parser.add_argument('--t1', action='store', type=float, dest='t1', default=1.0,
                            help='Heat-bath temperature T1.')
        parser.add_argument('--t2', action='store', type=float, dest='t2', default=None,
                            help='Spin-bath temperature T2 (defaults to RESET_MACHINE_LOW_T2_DEFAULT).')
        parser.add_argument('--p1', action='store', type=float, dest='p1', default=0.5,
                            help='Heat-bath reset rate p1.')
        parser.add_argument('--p2', action='store', type=float, dest='p2', default=0.5,
                            help='Spin-bath reset rate p2.')
        parser.add_argument('--p', action='store', type=float, dest='p', default=None,
                            help='Sets p1 = p2 = p.')
        parser.add_argument('--mu', action='store', type=float, dest='mu', default=None,
                            help='Sets p2 = mu * p1.')
        parser.add_argument('--omega', action='store', type=float, dest='omega', default=1.0,
                            help='Qubit splitting omega.')
        parser.add_argument('--out', action='store', dest='out', default=None,
                            help='Write output to this path instead of stdout.')

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except BaseError as e:
            logger.error('%s failed: %s', self.__module__.rsplit('.', 1)[-1], e)
            raise CommandError(str(e), returncode=e.exit_code)

    def run(self, **options):
        raise NotImplementedError

    def default_t2(self, options):
        if options.get('t2') is not None:
            return options['t2']
        return get_setting('RESET_MACHINE_LOW_T2_DEFAULT', 0.01)

    def model_params(self, options):
        p1 = options['p1']
        p2 = options['p2']
        if options.get('p') is not None:
            p1 = p2 = options['p']
        if options.get('mu') is not None:
            p2 = options['mu'] * p1
        return ModelParams(g=options['g'], t1=options['t1'], t2=self.default_t2(options),
                           p1=p1, p2=p2, omega=options['omega'])

    def comments(self, params=None, **extra):
        """Header lines recording the tool version and the full parameter set."""
        lines = [('tool', f'reset_machine {__version__}'), ('command', self.__module__.rsplit('.', 1)[-1])]
        if params is not None:
            lines.extend(params.as_dict().items())
        lines.extend(extra.items())
        return lines

    def write_csv(self, rows, header, comments, out=None):
        content = CommentedCsvRenderer().render(rows, renderer_context={
            'header': header,
            'comments': comments,
        })
        self.write_output(content.decode('utf-8'), out)

    def write_output(self, text, out=None):
        if out is None:
            self.stdout.write(text, ending='')
            return
        try:
            with open(out, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
        except OSError as e:
            raise CommandError(f'Cannot write {out}: {e}', returncode=USAGE_EXIT_CODE)
        logger.info('Wrote %s.', out)
