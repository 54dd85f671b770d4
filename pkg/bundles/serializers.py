"""
JSON shapes for everything the commands read and write.

Polynomials are [coefficient, exponents] pairs in ascending graded-lex
order; exponents are dense lists for m <= 64 and {"i": e} maps above.
"""

import json

from django.core.serializers.json import DjangoJSONEncoder

from .abelian import AbGroup, ring_name
from .admissible import ExactMatrix
from .char_classes import SignFunction, VertexSign
from .coloring import Coloring
from .simplicial import FaceSet, SimplicialComplex
from .stanley_reisner import SRPolynomial, reduce

DENSE_EXPONENT_LIMIT = 64


def complex_to_json(complex_):
    return {'m': complex_.m, 'facets': complex_.as_lists()}


def complex_from_json(data):
    return SimplicialComplex.from_facets(data['m'], data['facets'])


def _exponents_to_json(exponents):
    if len(exponents) <= DENSE_EXPONENT_LIMIT:
        return list(exponents)
    return {str(i + 1): e for i, e in enumerate(exponents) if e}


def _exponents_from_json(data, m):
    if isinstance(data, dict):
        exponents = [0] * m
        for key, value in data.items():
            index = int(key)
            if not 1 <= index <= m:
                raise ValueError(f'exponent index {key} out of range 1..{m}')
            exponents[index - 1] = int(value)
        return tuple(exponents)
    return tuple(int(e) for e in data)


def polynomial_to_json(poly):
    return [[coefficient, _exponents_to_json(exponents)] for exponents, coefficient in poly.terms()]


def polynomial_from_json(complex_, data):
    pairs = [(int(coefficient), _exponents_from_json(exponents, complex_.m)) for coefficient, exponents in data]
    return reduce(complex_, pairs)


def face_to_json(face):
    return list(face.vertices)


def group_to_json(group):
    return group.to_json()


def group_from_json(data):
    return AbGroup(int(data['rank']), tuple(data.get('torsion', ())))


def signs_to_text(signs):
    return ','.join('+' if s == 1 else '-' for s in signs)


def sign_function_to_json(omega):
    return {
        'faces': [face_to_json(face) for face, _ in omega.items()],
        'signs': list(omega.signs),
    }


def matrix_to_json(matrix):
    return matrix.as_strings()


def matrix_from_json(data, cols=None):
    return ExactMatrix.from_rows(data, cols)


def pair_to_json(pair):
    return {
        'complex': complex_to_json(pair.complex),
        'oriented_facets': [list(facet) for facet in pair.oriented_facets],
        'lambda': [list(row) for row in pair.matrix],
    }


def functor_to_json(functor):
    return {
        'complex': complex_to_json(functor.complex),
        'ring': ring_name(functor.ring),
        'ranks': [{'face': face_to_json(face), 'rank': functor.rank(face)} for face in functor.support],
        'maps': [
            {'from': face_to_json(big), 'to': face_to_json(small), 'matrix': matrix.tolist()}
            for (big, small), matrix in functor.covers()
        ],
    }


class BundleJSONEncoder(DjangoJSONEncoder):
    """DjangoJSONEncoder that also knows the library's value types."""

    def default(self, o):
        if isinstance(o, SimplicialComplex):
            return complex_to_json(o)
        if isinstance(o, SRPolynomial):
            return polynomial_to_json(o)
        if isinstance(o, FaceSet):
            return face_to_json(o)
        if isinstance(o, AbGroup):
            return group_to_json(o)
        if isinstance(o, VertexSign):
            return list(o.signs)
        if isinstance(o, SignFunction):
            return sign_function_to_json(o)
        if isinstance(o, Coloring):
            return list(o.colors)
        if isinstance(o, ExactMatrix):
            return matrix_to_json(o)
        return super().default(o)


def dumps(payload):
    """Deterministic JSON text: sorted keys, compact separators."""
    return json.dumps(payload, cls=BundleJSONEncoder, sort_keys=True, ensure_ascii=False)
