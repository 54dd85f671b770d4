from ...admissible import is_admissible, kernel_dimension
from ...forms import MatrixForm
from ..base import BundleCommand


class Command(BundleCommand):
    help = 'Check that A_α has full row rank m-n for every face α of K'

    def add_command_arguments(self, parser):
        parser.add_argument('matrix', help='Path to a matrix JSON file: {"matrix": [[...]], "cols": m} or a bare list of rows')
        parser.add_argument('--all-faces', action='store_true', help='Check every face instead of the maximal ones')

    def run(self, complex_, **options):
        data = self.load_json(options['matrix'])
        if isinstance(data, list):
            data = {'matrix': data}
        if not isinstance(data, dict):
            raise ValueError(f'{options["matrix"]}: matrix file must hold an object or a list of rows')
        data.setdefault('cols', complex_.m)
        matrix = self.validate(MatrixForm(data=data), source=options['matrix'])['exact']
        result = is_admissible(complex_, matrix, all_faces=options['all_faces'])
        payload = {'admissible': result.admissible, 'witness': result.witness}
        if result.witness is not None:
            payload['kernel_dimension'] = kernel_dimension(matrix, result.witness)
        self.emit(payload)
