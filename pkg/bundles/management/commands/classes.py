from ...char_classes import VertexSign, chern_f, pontrjagin_of_chern, total_chern, total_pontrjagin
from ...forms import SignVectorField
from ..base import BundleCommand


class Command(BundleCommand):
    help = 'Total Chern class c(K), total Pontrjagin class p(K) and, with --f, c_f(K)'

    def add_command_arguments(self, parser):
        parser.add_argument('--f', dest='f', help='Vertex signs f(1),...,f(m), e.g. -,+,+')

    def run(self, complex_, **options):
        payload = {
            'chern': total_chern(complex_),
            'pontrjagin': total_pontrjagin(complex_),
        }
        if options.get('f'):
            f = VertexSign(SignVectorField().clean(options['f']))
            chern = chern_f(complex_, f)
            payload['f'] = f
            payload['chern_f'] = chern
            payload['pontrjagin_f'] = pontrjagin_of_chern(chern)
        self.emit(self.flag_non_pure(complex_, payload))
