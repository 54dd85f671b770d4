from ...admissible import is_admissible, vandermonde
from ..base import BundleCommand


class Command(BundleCommand):
    help = 'The (m-n)×m Vandermonde matrix (s^r), optionally checked against a complex'

    takes_complex = False

    def add_command_arguments(self, parser):
        parser.add_argument('-m', type=int, required=True)
        parser.add_argument('-n', type=int, required=True)
        parser.add_argument('--complex', dest='complex_path', help='Check admissibility for this complex')

    def run(self, **options):
        matrix = vandermonde(options['m'], options['n'])
        payload = {'m': options['m'], 'n': options['n'], 'matrix': matrix}
        if options.get('complex_path'):
            complex_ = self.load_complex(options['complex_path'])
            if complex_.m != options['m'] or complex_.n != options['n']:
                raise ValueError(
                    f'complex has m={complex_.m}, n={complex_.n}; expected m={options["m"]}, n={options["n"]}'
                )
            payload['admissible'] = is_admissible(complex_, matrix).admissible
        self.emit(payload)
