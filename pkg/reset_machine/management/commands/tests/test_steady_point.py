import json
import os
import tempfile

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from reset_machine.management.commands.tests.utils import run_command
from reset_machine.serializers import SteadyStateSerializer
from resetmachineserver.utils import temp_log_level


def report_lines(text):
    return dict(line.split(': ', 1) for line in text.splitlines())


class SteadyPointTests(SimpleTestCase):
    def test_uncoupled_report(self):
        lines = report_lines(run_command('steady_point', '--g=0', '--t1=1', '--p=0.5'))
        self.assertLess(float(lines['C_l1 exact']), 1e-12)
        self.assertEqual(float(lines['C_l1 first order']), 0.0)
        self.assertEqual(lines['Has magic'], 'no')
        self.assertEqual(lines['Warnings'], 'none')
        self.assertIn('t2=0.01', lines['Parameters'])

    def test_report_fields(self):
        lines = report_lines(run_command('steady_point', '--g=0.01', '--t1=1', '--t2=1', '--p=0.5'))
        self.assertEqual(list(lines), [
            'Parameters', 'Residual', 'Bloch vector qubit 1', 'Bloch vector qubit 2', 'C_l1 exact',
            'C_l1 first order', 'Binding sums', 'Max sum', 'Has magic', 'Warnings',
        ])
        self.assertAlmostEqual(float(lines['C_l1 first order']), 2.1355e-3, places=7)
        self.assertTrue(lines['Binding sums'].startswith('-x-y+z='))

    def test_rate_ratio(self):
        lines = report_lines(run_command('steady_point', '--p=0.3', '--mu=2'))
        self.assertIn('p1=0.3', lines['Parameters'])
        self.assertIn('p2=0.6', lines['Parameters'])

    def test_validity_warning(self):
        with temp_log_level('reset_machine'):
            lines = report_lines(run_command('steady_point', '--g=0.2', '--p=0.5'))
        self.assertEqual(lines['Warnings'], 'reset-model validity')

    def test_other_splitting(self):
        lines = report_lines(run_command('steady_point', '--omega=2'))
        self.assertEqual(lines['C_l1 first order'], 'n/a (omega != 1)')

    def test_json(self):
        payload = json.loads(run_command('steady_point', '--json', '--g=0.05', '--t1=0.5'))
        self.assertEqual(payload['schema_version'], 1)
        self.assertNotIn('liouvillian', payload)
        serializer = SteadyStateSerializer(data=payload)
        self.assertTrue(serializer.is_valid(), serializer.errors)

    def test_json_with_liouvillian(self):
        payload = json.loads(run_command('steady_point', '--json', '--liouvillian'))
        self.assertEqual(len(payload['liouvillian']['matrix']), 16)
        self.assertEqual(payload['liouvillian']['params'], payload['params'])

    def test_out(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'point.txt')
            self.assertEqual(run_command('steady_point', f'--out={path}'), '')
            with open(path, encoding='utf-8') as f:
                self.assertTrue(f.read().startswith('Parameters: '))

    def test_invalid_parameter(self):
        with self.assertRaises(CommandError) as context:
            call_command('steady_point', '--t1=-1')
        self.assertEqual(context.exception.returncode, 2)

    def test_no_reset(self):
        with self.assertRaises(CommandError) as context:
            call_command('steady_point', '--p1=0', '--p2=0')
        self.assertEqual(context.exception.returncode, 3)

    def test_unwritable_output(self):
        with self.assertRaises(CommandError) as context:
            call_command('steady_point', '--out=/nonexistent/directory/point.txt')
        self.assertEqual(context.exception.returncode, 2)
