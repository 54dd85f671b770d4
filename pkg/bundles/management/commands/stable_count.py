from ...cx_structures import stable_count
from ..base import BundleCommand


class Command(BundleCommand):
    help = 'Number of complex structures on a 2s-dimensional bundle with p = p(K), s > n'

    def add_command_arguments(self, parser):
        parser.add_argument('-s', type=int, required=True, help='Complex rank s of the bundle')

    def run(self, complex_, **options):
        s = options['s']
        self.emit({'s': s, 'n': complex_.n, 'count': stable_count(complex_, s)})
