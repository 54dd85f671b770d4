"""
Exact arithmetic in the Stanley-Reisner algebra Z[K] = Z[v_1, ..., v_m] / I_K.

Elements are kept in reduced form: every stored monomial has a face of K as
its support, so two elements are equal exactly when their term maps agree.
Each generator v_i has cohomological degree 2.
"""

import logging
from functools import lru_cache

from sympy import ZZ
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring

from .simplicial import FaceSet, simplex_on

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def polynomial_ring(m):
    """The integer polynomial ring on v_1..v_m with graded-lex order."""
    names = ','.join(f'v{i}' for i in range(1, m + 1))
    return ring(names, ZZ, grlex)[0]


def support(monom):
    """Indices with positive exponent, as a FaceSet."""
    bits = 0
    for index, exponent in enumerate(monom):
        if exponent:
            bits |= 1 << index
    return FaceSet(bits)


def cohomological_degree(monom):
    return 2 * sum(monom)


class SRPolynomial:
    """An element of Z[K] in reduced form."""

    __slots__ = ('complex', 'element')

    def __init__(self, complex_, element):
        self.complex = complex_
        self.element = element

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, complex_):
        return cls(complex_, polynomial_ring(complex_.m).zero)

    @classmethod
    def one(cls, complex_):
        return cls.constant(complex_, 1)

    @classmethod
    def constant(cls, complex_, value):
        return cls(complex_, polynomial_ring(complex_.m)(value))

    @classmethod
    def generator(cls, complex_, i):
        """v_i, which is zero when i is a ghost vertex."""
        if not 1 <= i <= complex_.m:
            raise ValueError(f'generator index {i} out of range 1..{complex_.m}')
        return reduce(complex_, polynomial_ring(complex_.m).gens[i - 1])

    @classmethod
    def monomial(cls, complex_, face, coefficient=1):
        """coefficient · v_α for a face α (square free)."""
        exponents = tuple(1 if i + 1 in face else 0 for i in range(complex_.m))
        return reduce(complex_, {exponents: coefficient})

    # ------------------------------------------------------------------
    # Ring structure
    # ------------------------------------------------------------------

    def _check_ambient(self, other):
        if self.complex != other.complex:
            raise ValueError('ambient complexes differ')

    def _coerce(self, other):
        if isinstance(other, SRPolynomial):
            self._check_ambient(other)
            return other
        if isinstance(other, int):
            return SRPolynomial.constant(self.complex, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return SRPolynomial(self.complex, self.element + other.element)

    __radd__ = __add__

    def __neg__(self):
        return SRPolynomial(self.complex, -self.element)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return SRPolynomial(self.complex, self.element - other.element)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return reduce(self.complex, self.element * other.element)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError('exponent must be a non-negative integer')
        result = SRPolynomial.one(self.complex)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor):
        return SRPolynomial(self.complex, self.element * factor)

    def __eq__(self, other):
        if isinstance(other, int):
            other = SRPolynomial.constant(self.complex, other)
        if not isinstance(other, SRPolynomial):
            return NotImplemented
        return self.complex == other.complex and dict(self.element) == dict(other.element)

    def __hash__(self):
        return hash((self.complex, frozenset(self.element.items())))

    def __bool__(self):
        return bool(self.element)

    def __repr__(self):
        return f'SRPolynomial({self.element.as_expr()})'

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    def terms(self):
        """(exponents, coefficient) pairs in ascending graded-lex order."""
        items = [(monom, int(coeff)) for monom, coeff in self.element.items()]
        items.sort(key=lambda item: grlex(item[0]))
        return items

    def coefficient(self, exponents):
        return int(self.element.get(tuple(exponents), 0))

    def constant_term(self):
        return self.coefficient((0,) * self.complex.m)

    def degree(self):
        """Largest cohomological degree of a term, -1 for zero."""
        if not self.element:
            return -1
        return max(cohomological_degree(monom) for monom in self.element)

    def is_homogeneous(self, degree):
        return all(cohomological_degree(monom) == degree for monom in self.element)

    def graded_component(self, degree):
        """Sum of the terms of cohomological degree exactly `degree`."""
        if degree < 0 or degree % 2:
            raise ValueError(f'degree must be a non-negative even integer, got {degree}')
        ring_ = polynomial_ring(self.complex.m)
        kept = {monom: coeff for monom, coeff in self.element.items()
                if cohomological_degree(monom) == degree}
        return SRPolynomial(self.complex, ring_.from_dict(kept))

    # ------------------------------------------------------------------
    # Restriction to faces
    # ------------------------------------------------------------------

    def restrict(self, face):
        """
        h^α: Z[K] -> Z[α], setting v_i = 0 for i outside α.

        The result lives over the full simplex on α, a polynomial algebra.
        """
        if not isinstance(face, FaceSet):
            face = FaceSet.of(face)
        self.complex.require_face(face)
        ring_ = polynomial_ring(self.complex.m)
        kept = {monom: coeff for monom, coeff in self.element.items()
                if support(monom) <= face}
        return SRPolynomial(simplex_on(self.complex.m, face), ring_.from_dict(kept))

    def is_zero_via_restrictions(self):
        """True iff every restriction h^α vanishes (⊕h^α is injective)."""
        return all(not self.restrict(face) for face in self.complex.maximal_faces)


def reduce(complex_, raw):
    """
    Reduce a formal integer polynomial modulo I_K.

    `raw` is a sympy ring element, a mapping exponents -> coefficient or an
    iterable of (coefficient, exponents) pairs.
    """
    m = complex_.m
    ring_ = polynomial_ring(m)
    if hasattr(raw, 'ring'):
        if raw.ring.ngens != m:
            raise ValueError(f'polynomial has {raw.ring.ngens} variables, complex has {m}')
        items = raw.items()
    elif isinstance(raw, dict):
        items = raw.items()
    else:
        items = [(tuple(exponents), coefficient) for coefficient, exponents in raw]
    kept = {}
    face_cache = {}
    dropped = 0
    for monom, coeff in items:
        monom = tuple(monom)
        if len(monom) != m:
            raise ValueError(f'exponent vector {list(monom)} has length {len(monom)}, expected {m}')
        if any(e < 0 for e in monom):
            raise ValueError(f'exponent vector {list(monom)} has a negative entry')
        face = support(monom)
        if face not in face_cache:
            face_cache[face] = complex_.is_face(face)
        if face_cache[face]:
            kept[monom] = kept.get(monom, 0) + coeff
        else:
            dropped += 1
    if dropped:
        logger.debug(f'[REDUCE] dropped {dropped} monomial(s) in I_K for {complex_!r}')
    return SRPolynomial(complex_, ring_.from_dict(kept))
