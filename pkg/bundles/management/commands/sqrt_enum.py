from ...char_classes import all_sign_functions, sqrt_enumerate, square_roots_brute, top_pontrjagin_signed
from ..base import BundleCommand


class Command(BundleCommand):
    help = 'Every square root e_ω of (-1)^n p_n(K), one per sign function ω'

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--brute', action='store_true',
            help='Also run the exhaustive {-1,0,1} search and compare the two sets',
        )

    def run(self, complex_, **options):
        roots = sqrt_enumerate(complex_)
        payload = {
            'target': top_pontrjagin_signed(complex_),
            'count': len(roots),
            'roots': [
                {'omega': omega.signs, 'euler': euler}
                for omega, euler in zip(all_sign_functions(complex_), roots)
            ],
        }
        if options['brute']:
            brute = square_roots_brute(complex_)
            payload['brute_count'] = len(brute)
            payload['agrees'] = set(brute) == set(roots)
        self.emit(self.flag_non_pure(complex_, payload))
