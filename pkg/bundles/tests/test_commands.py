import json
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from bundles.char_classes import total_chern, total_pontrjagin
from bundles.cli import run
from bundles.samples import square, triangle
from bundles.serializers import complex_from_json, polynomial_from_json


class CommandTestCase(SimpleTestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self._tmp.cleanup)
        self.dir = Path(self._tmp.name)
        call_command('samples', str(self.dir), stdout=StringIO())

    def path(self, name):
        return str(self.dir / f'{name}.json')

    def call(self, *args, **options):
        out = StringIO()
        call_command(*args, stdout=out, stderr=StringIO(), **options)
        return json.loads(out.getvalue())

    def run_cli(self, *argv):
        out, err = StringIO(), StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            status = run(list(argv))
        return status, out.getvalue(), err.getvalue()


class SamplesCommandTests(CommandTestCase):
    def test_writes_every_sample(self):
        names = sorted(p.stem for p in self.dir.glob('*.json'))
        self.assertEqual(
            names,
            ['cp2_pair', 'odd_square_pair', 'square', 'tetrahedron_boundary', 'triangle'],
        )
        data = json.loads((self.dir / 'square.json').read_text())
        self.assertEqual(complex_from_json(data), square())


class ClassesCommandTests(CommandTestCase):
    def test_round_trip_of_classes(self):
        payload = self.call('classes', self.path('triangle'))
        self.assertEqual(polynomial_from_json(triangle(), payload['chern']), total_chern(triangle()))
        self.assertEqual(polynomial_from_json(triangle(), payload['pontrjagin']), total_pontrjagin(triangle()))

    def test_chern_f(self):
        payload = self.call('classes', self.path('triangle'), f='-,+,+')
        self.assertEqual(payload['f'], [-1, 1, 1])
        self.assertIn([-1, [1, 0, 0]], payload['chern_f'])
        self.assertEqual(payload['pontrjagin_f'], payload['pontrjagin'])

    def test_bad_sign_vector(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('classes', self.path('triangle'), f='-,x,+')
        self.assertEqual(ctx.exception.returncode, 2)


class SqrtEnumCommandTests(CommandTestCase):
    def test_triangle(self):
        payload = self.call('sqrt_enum', self.path('triangle'), brute=True)
        self.assertEqual(payload['count'], 8)
        self.assertEqual(payload['brute_count'], 8)
        self.assertTrue(payload['agrees'])


class StructuresCommandTests(CommandTestCase):
    def test_odd_pattern_on_square(self):
        payload = self.call('structures', self.path('square'), omega='-,+,+,+')
        self.assertFalse(payload['realizable'])
        self.assertEqual(payload['count'], 0)
        self.assertIsNone(payload['witness'])

    def test_witness_on_square(self):
        payload = self.call('structures', self.path('square'), omega='-,-,+,+', brute=True)
        self.assertEqual(payload['witness'], {'epsilon': 1, 'f': [-1, 1, 1, 1]})
        self.assertEqual(payload['count'], 4)
        self.assertEqual(payload['brute_count'], 4)
        self.assertEqual(payload['oriented']['count'], 2)

    def test_from_vertex_signs(self):
        payload = self.call('structures', self.path('triangle'), f='-,+,+')
        self.assertEqual(payload['omega'], [-1, -1, 1])
        self.assertTrue(payload['oriented']['realizable'])

    def test_all(self):
        payload = self.call('structures', self.path('square'), all=True)
        self.assertEqual(len(payload['structures']), 16)
        self.assertEqual(payload['oriented_realizable'], 8)

    def test_classes(self):
        payload = self.call('structures', self.path('square'), classes=True)
        self.assertEqual(payload['count'], 4)

    def test_flag_conflict(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('structures', self.path('square'), omega='+,+,+,+', all=True)
        self.assertEqual(ctx.exception.returncode, 2)

    def test_wrong_length(self):
        with self.assertRaises(CommandError) as ctx:
            self.call('structures', self.path('square'), omega='+,+')
        self.assertEqual(ctx.exception.returncode, 2)


class OtherCommandTests(CommandTestCase):
    def test_stable_count(self):
        self.assertEqual(self.call('stable_count', self.path('triangle'), s=3)['count'], 8)

    def test_vandermonde(self):
        payload = self.call('vandermonde', m=4, n=2, complex_path=self.path('square'))
        self.assertEqual(payload['matrix'], [['1', '1', '1', '1'], ['2', '4', '8', '16']])
        self.assertTrue(payload['admissible'])

    def test_admissible(self):
        matrix = self.dir / 'matrix.json'
        matrix.write_text(json.dumps({'matrix': [['1/2', 1, 0, 0], [0, 0, 1, 1]]}))
        payload = self.call('admissible', self.path('square'), str(matrix))
        self.assertFalse(payload['admissible'])
        self.assertEqual(payload['witness'], [1, 2])

    def test_limits(self):
        payload = self.call('limits', self.path('triangle'), atomic='{}')
        self.assertEqual([g['rank'] for g in payload['groups']], [0, 0, 1])
        payload = self.call('limits', self.path('triangle'), ring='F2')
        self.assertEqual(payload['ring'], 'F2')
        self.assertEqual([g['rank'] for g in payload['groups']], [1, 0, 0])

    def test_limits_of_functor_file(self):
        functor = self.dir / 'functor.json'
        functor.write_text(json.dumps({
            'complex': {'m': 3, 'facets': [[1, 2], [1, 3], [2, 3]]},
            'ranks': [{'face': [1], 'rank': 1}],
            'maps': [],
        }))
        payload = self.call('limits', str(functor), functor=True)
        self.assertEqual([g['rank'] for g in payload['groups']], [0, 1, 0])

    def test_link_cohomology(self):
        payload = self.call('link_cohomology', self.path('square'), face='1')
        self.assertEqual(payload['link'], {'m': 4, 'facets': [[2], [4]]})
        self.assertEqual(payload['groups'], [
            {'degree': -1, 'rank': 0, 'torsion': []},
            {'degree': 0, 'rank': 1, 'torsion': []},
        ])

    def test_color(self):
        self.assertEqual(self.call('color', self.path('square'), paints=2)['colors'], [1, 2, 1, 2])
        payload = self.call('color', self.path('square'), splitting=True, structures=True)
        self.assertTrue(payload['splitting_identity'])
        self.assertEqual(payload['induced']['distinct_vertex_signs'], 4)

    def test_quasitoric(self):
        self.assertTrue(self.call('quasitoric', self.path('cp2_pair'))['complex_structure'])
        payload = self.call('quasitoric', self.path('odd_square_pair'))
        self.assertFalse(payload['complex_structure'])
        self.assertEqual(payload['determinants'], [1, -1, -1, -1])


class NonPureInputTests(CommandTestCase):
    def setUp(self):
        super().setUp()
        self.mixed = self.dir / 'mixed.json'
        self.mixed.write_text(json.dumps({'m': 3, 'facets': [[1, 2], [3]]}))

    def test_flags_non_pure_complexes(self):
        for args in (
            ('sqrt_enum', str(self.mixed)),
            ('classes', str(self.mixed)),
        ):
            with self.subTest(command=args[0]):
                payload = self.call(*args)
                self.assertIs(payload['pure'], False)
                self.assertIn('[3]', payload['warning'])
        for options in ({'omega': '-'}, {'all': True}, {'classes': True}):
            with self.subTest(**options):
                payload = self.call('structures', str(self.mixed), **options)
                self.assertIs(payload['pure'], False)

    def test_sqrt_enum_still_reports_the_roots(self):
        payload = self.call('sqrt_enum', str(self.mixed))
        self.assertEqual(payload['count'], 2)

    def test_pure_complexes_carry_no_flag(self):
        payload = self.call('sqrt_enum', self.path('triangle'))
        self.assertNotIn('pure', payload)
        self.assertNotIn('warning', payload)


class ExitStatusTests(CommandTestCase):
    def test_success(self):
        status, out, _ = self.run_cli('color', self.path('square'), '-r', '2')
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(out)['colors'], [1, 2, 1, 2])

    def test_no_coloring(self):
        status, out, err = self.run_cli('color', self.path('triangle'), '-r', '2')
        self.assertEqual(status, 1)
        self.assertIsNone(json.loads(out)['colors'])
        self.assertIn('no regular 2-coloring', err)

    def test_malformed_json(self):
        broken = self.dir / 'broken.json'
        broken.write_text('{"m": 3, "facets": [[1, 2]')
        status, _, err = self.run_cli('classes', str(broken))
        self.assertEqual(status, 2)
        self.assertIn('malformed JSON', err)

    def test_schema_violation_names_the_field(self):
        bad = self.dir / 'bad.json'
        bad.write_text(json.dumps({'m': 3, 'facets': [[1, 4]]}))
        status, _, err = self.run_cli('classes', str(bad))
        self.assertEqual(status, 2)
        self.assertIn('facets', err)

    def test_unknown_option(self):
        status, _, _ = self.run_cli('color', self.path('square'), '--bogus')
        self.assertEqual(status, 2)

    def test_unknown_command(self):
        status, out, err = self.run_cli('sqrt-enum', self.path('square'))
        self.assertEqual(status, 2)
        self.assertEqual(out, '')
        self.assertIn("Unknown command: 'sqrt-enum'", err)

    def test_matrix_file_of_the_wrong_shape(self):
        for text in ('5', '"x"', 'null'):
            with self.subTest(text=text):
                matrix = self.dir / 'scalar.json'
                matrix.write_text(text)
                status, _, err = self.run_cli('admissible', self.path('square'), str(matrix))
                self.assertEqual(status, 2)
                self.assertIn('object or a list of rows', err)
                with self.assertRaises(CommandError) as ctx:
                    self.call('admissible', self.path('square'), str(matrix))
                self.assertEqual(ctx.exception.returncode, 2)

    def test_output_is_deterministic(self):
        first = self.run_cli('structures', self.path('square'), '--all')
        second = self.run_cli('structures', self.path('square'), '--all')
        self.assertEqual(first[1], second[1])

    def test_explain(self):
        status, _, err = self.run_cli('structures', self.path('square'), '--omega', '+,+,+,+', '--explain')
        self.assertEqual(status, 0)
        self.assertIn('[[1, 2], [1, 4], [2, 3], [3, 4]]', err)
