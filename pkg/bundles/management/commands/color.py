from ...coloring import (
    chromatic_number, coloring_sign_family, find_coloring, real_splitting_identity,
    splitting_factors, splitting_identity,
)
from ...cx_structures import count_structures, omega_from_f
from ..base import BundleCommand


class Command(BundleCommand):
    help = 'Find a regular r-paint coloring of K (exit status 1 when none exists)'

    def add_command_arguments(self, parser):
        parser.add_argument('-r', type=int, dest='paints', help='Number of paints (default: the chromatic number)')
        parser.add_argument('--splitting', action='store_true', help='Report u_i and check ∏(1+u_i) = c(K)')
        parser.add_argument(
            '--structures', action='store_true',
            help='For an n-coloring, the complex structures induced by the 2^n choices of f',
        )

    def run(self, complex_, **options):
        paints = options.get('paints')
        if paints is None:
            paints = chromatic_number(complex_)
        coloring = find_coloring(complex_, paints)
        if coloring is None:
            self.fail({'paints': paints, 'colors': None}, f'no regular {paints}-coloring exists')
        payload = {'paints': paints, 'colors': coloring}
        if options['splitting']:
            payload['factors'] = splitting_factors(complex_, coloring)
            payload['splitting_identity'] = splitting_identity(complex_, coloring)
            payload['real_splitting_identity'] = real_splitting_identity(complex_, coloring)
        if options['structures']:
            family = coloring_sign_family(complex_, coloring)
            omegas = {omega_from_f(complex_, f) for f in family}
            payload['induced'] = {
                'vertex_signs': family,
                'distinct_vertex_signs': len(set(family)),
                'distinct_omega': len(omegas),
                'structures': [
                    {'omega': omega.signs, 'count': count_structures(complex_, omega)}
                    for omega in sorted(omegas, key=lambda o: o.signs, reverse=True)
                ],
            }
            self.flag_non_pure(complex_, payload)
        self.emit(payload)
