import logging

from ...char_classes import SignFunction, VertexSign, all_sign_functions
from ...cx_structures import (
    count_oriented_structures, count_structures, count_structures_brute, omega_from_f,
    realizable, realizable_oriented, structure_classes,
)
from ...forms import StructuresOptionsForm
from ..base import BundleCommand

logger = logging.getLogger(__name__)


def _witness(realization):
    if realization is None:
        return None
    return {'epsilon': realization.epsilon, 'f': realization.f}


def structure_report(complex_, omega):
    """Both counting conventions for one ω: ±ω (unoriented) and ω exactly."""
    oriented = realizable_oriented(complex_, omega)
    realization = realizable(complex_, omega)
    return {
        'omega': omega.signs,
        'realizable': realization is not None,
        'count': count_structures(complex_, omega),
        'witness': _witness(realization),
        'oriented': {
            'realizable': oriented is not None,
            'count': count_oriented_structures(complex_, omega),
            'witness': oriented,
        },
    }


class Command(BundleCommand):
    help = 'Decide and count complex structures whose Euler class is e_ω'

    def add_command_arguments(self, parser):
        parser.add_argument('--omega', help='Signs on the top faces in lex order, e.g. -,+,+,+')
        parser.add_argument('--f', dest='f', help='Vertex signs; ω is taken to be ω_f')
        parser.add_argument('--all', action='store_true', help='Tabulate every sign function')
        parser.add_argument('--classes', action='store_true', help='Group vertex signs by ω_f up to sign')
        parser.add_argument('--brute', action='store_true', help='Cross-check counts over all 2^m vertex signs')
        parser.add_argument('--threads', type=int, default=1, help='Worker threads for --brute')

    def run(self, complex_, **options):
        form = StructuresOptionsForm(data={
            'omega': options.get('omega'),
            'f': options.get('f'),
            'all': options.get('all'),
            'classes': options.get('classes'),
        })
        cleaned = self.validate(form)
        threads = max(1, options.get('threads') or 1)

        if cleaned['classes']:
            classes = structure_classes(complex_)
            self.emit(self.flag_non_pure(complex_, {
                'classes': [{'omega': omega.signs, 'f': members} for omega, members in classes],
                'count': len(classes),
            }))
            return

        if cleaned['omega']:
            omegas = [SignFunction(complex_, cleaned['omega'])]
        elif cleaned['f']:
            omegas = [omega_from_f(complex_, VertexSign(cleaned['f']))]
        elif cleaned['all']:
            omegas = all_sign_functions(complex_)
        else:
            raise ValueError('one of --omega, --f, --all or --classes is required')

        reports = []
        for omega in omegas:
            report = structure_report(complex_, omega)
            if options.get('brute'):
                report['brute_count'] = count_structures_brute(complex_, omega, threads=threads)
            reports.append(report)
        logger.info(f'[STRUCTURES] {len(reports)} sign function(s) on {complex_!r}')
        if cleaned['all']:
            self.emit(self.flag_non_pure(complex_, {
                'structures': reports,
                'realizable': sum(1 for r in reports if r['realizable']),
                'oriented_realizable': sum(1 for r in reports if r['oriented']['realizable']),
            }))
        else:
            self.emit(self.flag_non_pure(complex_, reports[0]))
