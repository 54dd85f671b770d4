from django import forms
from django.core.exceptions import ValidationError

from .abelian import INTEGERS, parse_ring
from .admissible import ExactMatrix
from .cx_structures import DicharacteristicPair
from .limits import AbFunctor
from .simplicial import EMPTY_FACE, FaceSet, SimplicialComplex


# ============================================================================
# FIELDS
# ============================================================================

class SignVectorField(forms.CharField):
    """Comma separated signs: '+', '-', '+1', '-1', '1'."""

    TOKENS = {'+': 1, '+1': 1, '1': 1, '-': -1, '-1': -1}

    def to_python(self, value):
        value = super().to_python(value)
        if not value:
            return None
        signs = []
        for token in value.split(','):
            token = token.strip()
            if token not in self.TOKENS:
                raise ValidationError(f'"{token}" is not a sign; use + or -.')
            signs.append(self.TOKENS[token])
        return tuple(signs)


class FaceField(forms.CharField):
    """Comma separated 1-based vertices; '' or '{}' is the empty face."""

    def to_python(self, value):
        if value is None:
            return None
        value = super().to_python(value).strip().strip('{}[]')
        if not value:
            return EMPTY_FACE
        try:
            vertices = [int(token) for token in value.split(',')]
        except ValueError:
            raise ValidationError(f'"{value}" is not a list of vertices.')
        if any(v < 1 for v in vertices):
            raise ValidationError('Vertices are numbered from 1.')
        return FaceSet.of(vertices)


class RingField(forms.CharField):
    def to_python(self, value):
        value = super().to_python(value)
        if not value:
            return INTEGERS
        try:
            return parse_ring(value)
        except ValueError as exc:
            raise ValidationError(str(exc))


def _integer_lists(value, name):
    if not isinstance(value, list):
        raise ValidationError(f'{name} must be a list of lists.')
    for row in value:
        if not isinstance(row, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in row):
            raise ValidationError(f'{name} must contain lists of integers.')
    return value


def form_error_text(form):
    """One line per offending field: 'field: message'."""
    lines = []
    for field, errors in form.errors.items():
        label = 'input' if field == '__all__' else field
        lines.append(f'{label}: {" ".join(errors)}')
    return '; '.join(lines)


# ============================================================================
# INPUT FILES
# ============================================================================

class ComplexForm(forms.Form):
    """{"m": <int>, "facets": [[...], ...]}"""

    m = forms.IntegerField(min_value=1)
    facets = forms.JSONField(required=False)

    def clean_facets(self):
        facets = self.cleaned_data.get('facets')
        if facets is None:
            return []
        return _integer_lists(facets, 'facets')

    def clean(self):
        cleaned_data = super().clean()
        m = cleaned_data.get('m')
        facets = cleaned_data.get('facets')
        if m is None or facets is None:
            return cleaned_data
        try:
            cleaned_data['complex'] = SimplicialComplex.from_facets(m, facets)
        except ValueError as exc:
            self.add_error('facets', str(exc))
        return cleaned_data


def complex_from_data(data):
    """Validate a complex JSON object, raising ValidationError with field names."""
    if not isinstance(data, dict):
        raise ValidationError('a complex must be a JSON object with "m" and "facets".')
    form = ComplexForm(data=data)
    if not form.is_valid():
        raise ValidationError(form_error_text(form))
    return form.cleaned_data['complex']


class MatrixForm(forms.Form):
    """Row-major exact rationals; `cols` is needed when there are no rows."""

    matrix = forms.JSONField(required=False)
    cols = forms.IntegerField(required=False, min_value=1)

    def clean(self):
        cleaned_data = super().clean()
        rows = cleaned_data.get('matrix')
        if rows is None:
            rows = []
        if not isinstance(rows, list) or any(not isinstance(row, list) for row in rows):
            self.add_error('matrix', 'matrix must be a list of rows.')
            return cleaned_data
        try:
            cleaned_data['exact'] = ExactMatrix.from_rows(rows, cleaned_data.get('cols'))
        except ValueError as exc:
            self.add_error('matrix', str(exc))
        return cleaned_data


class DicharacteristicPairForm(forms.Form):
    """{"complex": {...}, "oriented_facets": [[...]], "lambda": [[...]]}"""

    complex = forms.JSONField()
    oriented_facets = forms.JSONField()

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.fields['lambda'] = forms.JSONField()

    def clean_complex(self):
        try:
            return complex_from_data(self.cleaned_data.get('complex'))
        except ValidationError as exc:
            raise ValidationError(exc.messages)

    def clean_oriented_facets(self):
        return _integer_lists(self.cleaned_data.get('oriented_facets'), 'oriented_facets')

    def clean(self):
        cleaned_data = super().clean()
        complex_ = cleaned_data.get('complex')
        facets = cleaned_data.get('oriented_facets')
        matrix = cleaned_data.get('lambda')
        if complex_ is None or facets is None or matrix is None:
            return cleaned_data
        try:
            _integer_lists(matrix, 'lambda')
            cleaned_data['pair'] = DicharacteristicPair(complex_, facets, matrix)
        except ValidationError as exc:
            self.add_error('lambda', exc)
        except ValueError as exc:
            self.add_error(None, str(exc))
        return cleaned_data


class FunctorForm(forms.Form):
    """
    {"complex": {...}, "ring": "Z", "ranks": [{"face": [...], "rank": r}],
     "maps": [{"from": [...], "to": [...], "matrix": [[...]]}]}
    """

    complex = forms.JSONField()
    ring = RingField(required=False)
    ranks = forms.JSONField()
    maps = forms.JSONField(required=False)

    def clean_complex(self):
        try:
            return complex_from_data(self.cleaned_data.get('complex'))
        except ValidationError as exc:
            raise ValidationError(exc.messages)

    def clean_ranks(self):
        ranks = self.cleaned_data.get('ranks')
        if not isinstance(ranks, list):
            raise ValidationError('ranks must be a list of {"face": [...], "rank": r} objects.')
        parsed = {}
        for entry in ranks:
            if not isinstance(entry, dict) or 'face' not in entry or 'rank' not in entry:
                raise ValidationError('each rank entry needs "face" and "rank".')
            rank = entry['rank']
            if isinstance(rank, bool) or not isinstance(rank, int) or rank < 0:
                raise ValidationError(f'rank {rank!r} must be a non-negative integer.')
            parsed[FaceSet.of(entry['face'])] = rank
        return parsed

    def clean_maps(self):
        maps = self.cleaned_data.get('maps') or []
        if not isinstance(maps, list):
            raise ValidationError('maps must be a list.')
        parsed = {}
        for entry in maps:
            if not isinstance(entry, dict) or not {'from', 'to', 'matrix'} <= set(entry):
                raise ValidationError('each map needs "from", "to" and "matrix".')
            key = (FaceSet.of(entry['from']), FaceSet.of(entry['to']))
            parsed[key] = _integer_lists(entry['matrix'], 'maps')
        return parsed

    def clean(self):
        cleaned_data = super().clean()
        complex_ = cleaned_data.get('complex')
        ranks = cleaned_data.get('ranks')
        maps = cleaned_data.get('maps')
        if complex_ is None or ranks is None or maps is None:
            return cleaned_data
        try:
            cleaned_data['functor'] = AbFunctor(
                complex_, ranks, maps, ring=cleaned_data.get('ring') or INTEGERS,
            )
        except ValueError as exc:
            self.add_error(None, str(exc))
        return cleaned_data


# ============================================================================
# COMMAND OPTIONS
# ============================================================================

class StructuresOptionsForm(forms.Form):
    omega = SignVectorField(required=False)
    f = SignVectorField(required=False)
    all = forms.BooleanField(required=False)
    classes = forms.BooleanField(required=False)

    def clean(self):
        cleaned_data = super().clean()
        chosen = [name for name in ('omega', 'f', 'all', 'classes') if cleaned_data.get(name)]
        if len(chosen) > 1:
            raise ValidationError(f'--{chosen[0]} and --{chosen[1]} cannot be combined.')
        return cleaned_data


class LimitsOptionsForm(forms.Form):
    ring = RingField(required=False)
    atomic = FaceField(required=False)
    constant = forms.IntegerField(required=False, min_value=0)
    max_degree = forms.IntegerField(required=False)

    def clean_max_degree(self):
        degree = self.cleaned_data.get('max_degree')
        if degree is not None and degree < 0:
            raise ValidationError('degree must be non-negative.')
        return degree
