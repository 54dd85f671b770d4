from ...abelian import ring_name
from ...forms import FaceField, RingField
from ...limits import link_cohomology
from ..base import BundleCommand


class Command(BundleCommand):
    help = 'Reduced cohomology of the link of a face, degrees -1 .. n-|α|-1'

    def add_command_arguments(self, parser):
        parser.add_argument('--face', default='', help='The face α, e.g. 1,2 (default ∅)')
        parser.add_argument('--ring', default='Z', help='Z or F<p>')

    def run(self, complex_, **options):
        face = FaceField(required=False).clean(options['face'])
        ring = RingField(required=False).clean(options['ring'])
        groups = link_cohomology(complex_, face, ring)
        self.emit({
            'face': face,
            'link': complex_.link(face),
            'ring': ring_name(ring),
            'groups': [{'degree': i - 1, **group.to_json()} for i, group in enumerate(groups)],
        })
