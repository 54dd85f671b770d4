from ...abelian import INTEGERS, ring_name
from ...forms import FunctorForm, LimitsOptionsForm, complex_from_data
from ...limits import (
    atomic_functor, constant_functor, diagonal_functor, lim_groups, slice_functor, truncate_below,
)
from ..base import BundleCommand


class Command(BundleCommand):
    help = 'Higher limits lim^i of a functor on cat(K)^op (constant by default)'

    takes_complex = False

    def add_command_arguments(self, parser):
        parser.add_argument('path', help='Complex JSON, or functor JSON with --functor')
        parser.add_argument('--functor', action='store_true', help='Read a functor file instead of a complex')
        parser.add_argument('--atomic', help='Atomic functor Φ_α at this face, e.g. 1,2 or {} for ∅')
        parser.add_argument('--constant', type=int, help='Constant functor of this rank (the default, rank 1)')
        parser.add_argument('--diagonal', help='Rank-one functor with these vertex weights, e.g. 2,3,5')
        parser.add_argument('--truncate', type=int, help='Replace Φ by Φ_{<=s}')
        parser.add_argument('--slice', type=int, dest='slice_at', help='Replace Φ by Φ_s')
        parser.add_argument('--ring', default='Z', help='Z or F<p>')
        parser.add_argument('--max-degree', type=int, help='Highest degree reported (default n)')

    def build_functor(self, options):
        data = self.load_json(options['path'])
        cleaned = self.validate(LimitsOptionsForm(data={
            'ring': options.get('ring'),
            'atomic': options.get('atomic'),
            'constant': options.get('constant'),
            'max_degree': options.get('max_degree'),
        }))
        ring = cleaned['ring'] or INTEGERS
        if options['functor']:
            if isinstance(data, dict) and options.get('ring') and 'ring' not in data:
                data = {**data, 'ring': options['ring']}
            return self.validate(FunctorForm(data=data), source=options['path'])['functor'], cleaned
        complex_ = complex_from_data(data)
        chosen = [name for name in ('atomic', 'constant', 'diagonal') if options.get(name) is not None]
        if len(chosen) > 1:
            raise ValueError(f'--{chosen[0]} and --{chosen[1]} cannot be combined')
        if cleaned['atomic'] is not None:
            return atomic_functor(complex_, cleaned['atomic'], ring=ring), cleaned
        if options.get('diagonal'):
            try:
                weights = [int(w) for w in options['diagonal'].split(',')]
            except ValueError:
                raise ValueError(f'diagonal: "{options["diagonal"]}" is not a list of integers')
            return diagonal_functor(complex_, weights, ring=ring), cleaned
        rank = cleaned['constant'] if cleaned['constant'] is not None else 1
        return constant_functor(complex_, rank, ring=ring), cleaned

    def run(self, **options):
        functor, cleaned = self.build_functor(options)
        if options.get('truncate') is not None:
            functor = truncate_below(functor, options['truncate'])
        if options.get('slice_at') is not None:
            functor = slice_functor(functor, options['slice_at'])
        max_degree = cleaned['max_degree']
        if max_degree is None:
            max_degree = functor.complex.n
        groups = lim_groups(functor, max_degree)
        self.emit({
            'ring': ring_name(functor.ring),
            'groups': [{'degree': i, **group.to_json()} for i, group in enumerate(groups)],
        })
