import logging

from ...cx_structures import realizable, realizable_oriented, validate_pair
from ...forms import DicharacteristicPairForm
from ..base import BundleCommand

logger = logging.getLogger(__name__)


class Command(BundleCommand):
    help = 'Determinant signs of a dicharacteristic pair and whether they come from a complex structure'

    takes_complex = False

    def add_command_arguments(self, parser):
        parser.add_argument('pair', help='Path to {"complex": ..., "oriented_facets": ..., "lambda": ...}')

    def run(self, **options):
        data = self.load_json(options['pair'])
        if not isinstance(data, dict):
            raise ValueError(f'{options["pair"]}: a pair must be a JSON object')
        pair = self.validate(DicharacteristicPairForm(data=data), source=options['pair'])['pair']
        validation = validate_pair(pair)
        realization = realizable(pair.complex, validation.omega)
        oriented = realizable_oriented(pair.complex, validation.omega)
        logger.info(f'[QUASITORIC] determinants {validation.determinants}, complex structure: {realization is not None}')
        self.emit({
            'determinants': validation.determinants,
            'omega': validation.omega.signs,
            'euler': validation.euler,
            'complex_structure': realization is not None,
            'witness': None if realization is None else {'epsilon': realization.epsilon, 'f': realization.f},
            'oriented_witness': oriented,
        })
