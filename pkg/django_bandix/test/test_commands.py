import json
import os
from io import StringIO
from unittest import mock

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from django_bandix.cli import main
from django_bandix.constants import EXIT_INCONSISTENCY, EXIT_INVALID_INPUT
from django_bandix.exceptions import InternalInconsistency

L444_PATH = os.path.join(settings.BASE_DIR, 'test_web', 'fixtures', 'l444.graph')


class BandixCommandTestCase(SimpleTestCase):

    def call(self, *args):
        out, err = StringIO(), StringIO()
        call_command('bandix', *args, stdout=out, stderr=err)
        return out.getvalue(), err.getvalue()

    def call_failing(self, *args):
        err = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('bandix', *args, stdout=StringIO(), stderr=err)
        return ctx.exception, err.getvalue()

    def test_braid_text(self):
        out, _err = self.call('braid', '1', '1', '1')
        self.assertIn('B:  [2, 2] exact', out)
        self.assertIn('FB: [4, 4] exact', out)

    def test_braid_json(self):
        out, _err = self.call('braid', '-1', '2', '-1', '2', '--format', 'json')
        data = json.loads(out)
        self.assertEqual((data['B']['lower'], data['B']['upper']), (2, 2))
        self.assertEqual((data['FB']['lower'], data['FB']['upper']), (4, 6))
        self.assertEqual(data['l'], 1)

    def test_braid_json_is_stable(self):
        first, _err = self.call('braid', '-1 2 -1 2', '--format', 'json')
        second, _err = self.call('braid', '-1 2 -1 2', '--format', 'json')
        self.assertEqual(first, second)

    def test_braid_options(self):
        out, _err = self.call('braid', '1', '1', '1', '--genus', '1', '--budget', '5', '--format', 'json')
        self.assertIn('B exact from g = g_c = 1', json.loads(out)['notes'])

    def test_pretzel(self):
        out, _err = self.call('pretzel', '4,4,4', '--format', 'json')
        data = json.loads(out)
        self.assertEqual(data['l'], 3)
        self.assertEqual(data['B']['exact'], True)
        out, _err = self.call('pretzel', '2', '3', '3')
        self.assertIn('B:  [6, 6] exact', out)

    def test_graph(self):
        out, _err = self.call('graph', L444_PATH, '--components', '3', '--format', 'json')
        data = json.loads(out)
        self.assertEqual(data['seifert'], {'s': 11, 'c': 12, 'canonical_genus': 0})
        self.assertEqual(data['B']['upper'], 2)

    def test_conway(self):
        out, _err = self.call('conway', '1', '1', '1')
        self.assertEqual(out, '1 0 1\n1 + z^2\n')
        out, _err = self.call('conway', '1', '1')
        self.assertEqual(out, '0 1\nz\n')
        out, _err = self.call('conway', '1')
        self.assertEqual(out, '1\n1\n')
        ex, err = self.call_failing('conway', '1', '--strands', '3')
        self.assertEqual(ex.returncode, EXIT_INVALID_INPUT)
        self.assertTrue(err.startswith('Error [disconnected_diagram]'))

    def test_syntax_error(self):
        ex, err = self.call_failing('braid', '1', 'x', '--format', 'json')
        self.assertEqual(ex.returncode, EXIT_INVALID_INPUT)
        self.assertEqual(json.loads(err)['error']['code'], 'syntax')

    def test_graph_errors(self):
        ex, err = self.call_failing('graph', L444_PATH, '--components', '2')
        self.assertEqual(ex.returncode, EXIT_INVALID_INPUT)
        self.assertTrue(err.startswith('Error [invalid_input]'))
        ex, _err = self.call_failing('graph', os.path.join(settings.BASE_DIR, 'missing.graph'), '--components', '1')
        self.assertEqual(ex.returncode, EXIT_INVALID_INPUT)

    def test_usage_errors(self):
        for args in (('braid', '1', '--format', 'xml'),
                     ('braid', '1', '--strands', 'abc'),
                     ('graph', L444_PATH),
                     ('pretzel',)):
            ex, _err = self.call_failing(*args)
            self.assertEqual(ex.returncode, EXIT_INVALID_INPUT, msg=' '.join(args))
        ex, _err = self.call_failing()
        self.assertEqual(ex.returncode, EXIT_INVALID_INPUT)

    def test_negative_counts(self):
        ex, err = self.call_failing('graph', L444_PATH, '--components', '-1')
        self.assertEqual(ex.returncode, EXIT_INVALID_INPUT)
        self.assertTrue(err.startswith('Error [range]'))
        ex, _err = self.call_failing('braid', '1', '1', '1', '--genus', '-1')
        self.assertEqual(ex.returncode, EXIT_INVALID_INPUT)

    def test_uncovered_pretzel(self):
        ex, err = self.call_failing('pretzel', '2,3,-3', '--format', 'json')
        self.assertEqual(ex.returncode, EXIT_INVALID_INPUT)
        self.assertEqual(json.loads(err)['error']['code'], 'uncovered_case')

    @mock.patch('django_bandix.management.commands.bandix.analyze_braid',
                side_effect=InternalInconsistency('Band bounds 2 and 3 differ'))
    def test_inconsistency(self, _analyze):
        ex, err = self.call_failing('braid', '1', '1', '1')
        self.assertEqual(ex.returncode, EXIT_INCONSISTENCY)
        self.assertEqual(err, 'Error [internal_inconsistency]: Band bounds 2 and 3 differ\n')


class ConsoleScriptTestCase(SimpleTestCase):

    def test_main(self):
        with mock.patch('sys.stdout', new_callable=StringIO) as out:
            main(['conway', '1', '1', '1'])
        self.assertEqual(out.getvalue(), '1 0 1\n1 + z^2\n')

    def test_usage_error_status(self):
        with mock.patch('sys.stderr', new_callable=StringIO) as err:
            with self.assertRaises(SystemExit) as ctx:
                main(['braid', '1', '--format', 'xml'])
        self.assertEqual(ctx.exception.code, EXIT_INVALID_INPUT)
        self.assertIn("invalid choice: 'xml'", err.getvalue())
