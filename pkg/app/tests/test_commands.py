import io
import json

from django.apps import apps
from django.test import SimpleTestCase

from app.cli import run_command
from app.documents import parse_quiver_document
from app.exactnum import MatrixQi
from app.quiver import apply_gauge
from stokesquiver import settings as project_settings

from .helpers import data_path, load_quiver, matrix, read_data


def run(*argv, stdin=None):
    return run_command(list(argv), stdin=io.StringIO(stdin) if stdin is not None else None)


class ProjectSettingsTests(SimpleTestCase):
    def test_no_model_configuration(self):
        self.assertEqual(list(apps.get_app_config('app').get_models()), [])
        for name in ('DEFAULT_AUTO_FIELD', 'USE_TZ', 'TIME_ZONE'):
            with self.subTest(name=name):
                self.assertFalse(hasattr(project_settings, name))
        self.assertNotIn('default_auto_field', vars(type(apps.get_app_config('app'))))


class DispatchTests(SimpleTestCase):
    def test_unknown_command(self):
        result = run('transmogrify')
        self.assertEqual(result.code, 2)
        self.assertIn('usage: stokesquiver', result.stderr)

    def test_no_command(self):
        self.assertEqual(run().code, 2)

    def test_module_names_are_accepted(self):
        self.assertEqual(run('reconstruct_check', data_path('airy.json')).code, 0)

    def test_bad_flag_is_a_usage_error(self):
        self.assertEqual(run('stokes', data_path('airy.json'), '--bogus').code, 2)


class ValidateTests(SimpleTestCase):
    def test_valid_quiver(self):
        result = run('validate', data_path('airy.json'))
        self.assertEqual(result.code, 0)
        self.assertIn('valid quiver-v1', result.stdout)
        self.assertIn('beta-order -2 < 2', result.stdout)

    def test_valid_local_system_and_cover(self):
        self.assertIn('rank 3', run('validate', data_path('airy_localsys.json')).stdout)
        self.assertIn('laurent cover of generic degree 2', run('validate', data_path('elementary_cover.json')).stdout)

    def test_exit_codes(self):
        cases = {
            'malformed.json': 2,
            'zero_denominator.json': 2,
            'bad_shape.json': 1,
            'tied.json': 1,
            'singular.json': 1,
            'missing.json': 2,
        }
        for name, code in cases.items():
            with self.subTest(name=name):
                self.assertEqual(run('validate', data_path(name)).code, code)

    def test_tie_is_reported(self):
        result = run('stokes', data_path('tied.json'))
        self.assertEqual(result.code, 1)
        self.assertIn('TieBreak', result.stderr)
        self.assertEqual(result.stdout, '')

    def test_stdin(self):
        result = run('validate', '-', stdin=read_data('scalar.json'))
        self.assertEqual(result.code, 0)


class StokesCommandTests(SimpleTestCase):
    def test_json_output(self):
        result = run('stokes', data_path('airy.json'))
        self.assertEqual(result.code, 0)
        document = json.loads(result.stdout)
        self.assertEqual(document['S_plus'], [['1', '1'], ['0', '1']])
        self.assertEqual(document['S_minus'], [['-1', '0'], ['-1', '-1']])
        self.assertEqual(document['S_plus_inverse'], [['1', '-1'], ['0', '1']])
        self.assertEqual(document['identity_checks'], {'phi': True, 'psi': True})

    def test_pretty_output(self):
        result = run('stokes', data_path('scalar.json'), '--pretty')
        self.assertEqual(result.code, 0)
        self.assertIn('S_plus:', result.stdout)
        self.assertIn('1 - V U = T_1 ... T_n: ok', result.stdout)

    def test_random_pipeline(self):
        generated = run('random', '--seed', '11', '--n', '4', '--complex')
        self.assertEqual(generated.code, 0)
        result = run('stokes', '-', stdin=generated.stdout)
        self.assertEqual(result.code, 0)
        self.assertEqual(json.loads(result.stdout)['identity_checks'], {'phi': True, 'psi': True})

    def test_random_rejects_out_of_range(self):
        self.assertEqual(run('random', '--n', '16').code, 2)
        self.assertEqual(run('random', '--dims', '-1').code, 2)


class TransformCommandTests(SimpleTestCase):
    def test_fourier(self):
        result = run('fourier', data_path('scalar.json'))
        document = json.loads(result.stdout)
        self.assertEqual(document['psi_dim'], 2)
        self.assertEqual(document['frame'], {'alpha': ['1', '0'], 'beta': ['0', '-1']})
        self.assertEqual(document['nodes'][0]['u'], [['2', '3']])

    def test_smash(self):
        q = parse_quiver_document(run('smash', data_path('scalar.json')).stdout)
        self.assertEqual(q.nodes[0].u, matrix([[-2], [1]]))

    def test_localize_and_beilinson(self):
        localized = parse_quiver_document(run('localize', data_path('airy_localsys.json')).stdout)
        self.assertEqual(localized.nodes[0].u, MatrixQi.identity(3))
        beilinson = parse_quiver_document(run('beilinson', data_path('airy_localsys.json')).stdout)
        self.assertEqual(beilinson.block_dims, (6, 6))

    def test_localize_needs_local_system(self):
        self.assertEqual(run('localize', data_path('airy.json')).code, 2)

    def test_reconstruct_check(self):
        result = run('reconstruct-check', data_path('elementary.json'))
        self.assertEqual(result.code, 0)
        self.assertTrue(json.loads(result.stdout)['passed'])

    def test_exponents(self):
        document = json.loads(run('exponents', data_path('airy.json')).stdout)
        self.assertEqual([component['c'] for component in document['components']], [['-2', '0'], ['2', '0']])


class CoverCommandTests(SimpleTestCase):
    def test_from_cover_angular(self):
        result = run('from-cover', data_path('airy_cover.json'), '--sheet-order', 'angular')
        self.assertEqual(result.code, 0)
        sign = [matrix([[-1]]), matrix([[-1]])]
        expected = apply_gauge(load_quiver('airy.json'), MatrixQi.identity(3), sign)
        self.assertEqual(parse_quiver_document(result.stdout), expected)

    def test_monodromy(self):
        result = run('monodromy', data_path('airy_cover.json'))
        self.assertEqual(result.code, 0)
        document = json.loads(result.stdout)
        values = document['critical_values']
        self.assertEqual([value['exact'] for value in values], [['-2', '0'], ['2', '0']])
        self.assertEqual(values[0]['permutation'], [1, 3, 2])
        self.assertEqual(values[1]['cycles'], '(1 2)(3)')
        self.assertLess(document['max_residual'], 1e-9)

    def test_basepoint_errors(self):
        self.assertEqual(run('from-cover', data_path('airy_cover.json'), '--basepoint', '21/10').code, 1)
        self.assertEqual(run('from-cover', data_path('airy_cover.json'), '--basepoint', '2.1').code, 2)

    def test_bad_frame(self):
        self.assertEqual(run('from-cover', data_path('airy_cover.json'), '--frame', '1,1').code, 1)

    def test_sector_airy(self):
        result = run('sector', '--example', 'airy')
        self.assertEqual(result.code, 0)
        document = json.loads(result.stdout)
        sectors = {entry['sector']: entry['matrix'] for entry in document['sectors']}
        self.assertEqual(sectors['S1'], [['1', '-1'], ['0', '1']])
        self.assertEqual(sectors['S2'], [['-1', '0'], ['-1', '-1']])
        self.assertEqual(
            [entry['coefficient'] for entry in document['pulled_back_exponents']],
            [['0', '-2/3'], ['0', '2/3']],
        )

    def test_sector_elementary_pretty(self):
        result = run('sector', '--example', 'elementary', '--pretty')
        self.assertEqual(result.code, 0)
        self.assertIn('l+:', result.stdout)
        self.assertIn('E^(-2 w)', result.stdout)

    def test_sector_unknown_example(self):
        self.assertEqual(run('sector', '--example', 'bessel').code, 2)
