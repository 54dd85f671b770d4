"""
Characteristic classes in Z[K] and the square roots of (-1)^n p_n(K).

c(K) = ∏(1 + v_i), p(K) = ∏(1 - v_i²), c_f(K) = ∏(1 + f(i) v_i) and
e_ω(K) = Σ_μ ω(μ) v_μ over the top faces μ (faces of cardinality n).
"""

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from sympy.polys.orderings import grlex

from .simplicial import FaceSet
from .stanley_reisner import SRPolynomial, polynomial_ring, reduce, support

logger = logging.getLogger(__name__)

SIGNS = (1, -1)


# ============================================================================
# SIGN DATA
# ============================================================================

def _check_signs(signs):
    for sign in signs:
        if sign not in SIGNS:
            raise ValueError(f'sign values must be +1 or -1, got {sign!r}')


@dataclass(frozen=True)
class VertexSign:
    """f: [m] -> {±1}, stored as the tuple (f(1), ..., f(m))."""

    signs: tuple

    def __post_init__(self):
        object.__setattr__(self, 'signs', tuple(self.signs))
        _check_signs(self.signs)

    @classmethod
    def constant(cls, m, sign=1):
        return cls((sign,) * m)

    @classmethod
    def from_bits(cls, m, bits):
        """Bit i-1 set means f(i) = -1."""
        return cls(tuple(-1 if bits >> i & 1 else 1 for i in range(m)))

    @property
    def bits(self):
        return sum(1 << i for i, sign in enumerate(self.signs) if sign == -1)

    @property
    def m(self):
        return len(self.signs)

    def __call__(self, vertex):
        return self.signs[vertex - 1]

    def __neg__(self):
        return VertexSign(tuple(-s for s in self.signs))

    def __mul__(self, other):
        return VertexSign(tuple(a * b for a, b in zip(self.signs, other.signs)))

    def on_face(self, face):
        """∏_{i∈μ} f(i)."""
        result = 1
        for vertex in face.vertices:
            result *= self.signs[vertex - 1]
        return result


@dataclass(frozen=True)
class SignFunction:
    """ω: top faces of K -> {±1}, aligned with K.top_faces()."""

    complex: object
    signs: tuple

    def __post_init__(self):
        object.__setattr__(self, 'signs', tuple(self.signs))
        _check_signs(self.signs)
        expected = len(self.complex.top_faces())
        if len(self.signs) != expected:
            raise ValueError(f'sign function needs {expected} values (one per top face), got {len(self.signs)}')

    @classmethod
    def constant(cls, complex_, sign=1):
        return cls(complex_, (sign,) * len(complex_.top_faces()))

    @classmethod
    def from_mapping(cls, complex_, mapping):
        """Build from {face: sign}; every top face must be present."""
        mapping = {(face if isinstance(face, FaceSet) else FaceSet.of(face)): sign
                   for face, sign in mapping.items()}
        top = complex_.top_faces()
        if set(mapping) != set(top):
            raise ValueError('sign function must be defined exactly on the top faces')
        return cls(complex_, tuple(mapping[face] for face in top))

    def items(self):
        return list(zip(self.complex.top_faces(), self.signs))

    def __getitem__(self, face):
        if not isinstance(face, FaceSet):
            face = FaceSet.of(face)
        return dict(self.items())[face]

    def __neg__(self):
        return SignFunction(self.complex, tuple(-s for s in self.signs))

    def __mul__(self, other):
        return SignFunction(self.complex, tuple(a * b for a, b in zip(self.signs, other.signs)))

    @property
    def minus_count(self):
        return sum(1 for s in self.signs if s == -1)


def all_sign_functions(complex_):
    """Every ω, in the order of sign vectors (+1 before -1, lex over top faces)."""
    count = len(complex_.top_faces())
    return [SignFunction(complex_, signs) for signs in product(SIGNS, repeat=count)]


def all_vertex_signs(m):
    return [VertexSign.from_bits(m, bits) for bits in range(1 << m)]


# ============================================================================
# TOTAL CLASSES
# ============================================================================

def _product_of_linear(complex_, coefficients):
    """∏_i (1 + a_i v_i), reduced after every factor."""
    ring_ = polynomial_ring(complex_.m)
    result = SRPolynomial.one(complex_)
    for index, coefficient in enumerate(coefficients):
        factor = ring_.one + coefficient * ring_.gens[index]
        result = reduce(complex_, result.element * factor)
    return result


def total_chern(complex_):
    """c(K) = ∏_{i=1}^m (1 + v_i)."""
    return _product_of_linear(complex_, [1] * complex_.m)


def total_pontrjagin(complex_):
    """p(K) = ∏_{i=1}^m (1 - v_i²)."""
    ring_ = polynomial_ring(complex_.m)
    result = SRPolynomial.one(complex_)
    for generator in ring_.gens:
        result = reduce(complex_, result.element * (ring_.one - generator ** 2))
    return result


def chern_f(complex_, f):
    """c_f(K) = ∏_{i=1}^m (1 + f(i) v_i)."""
    if f.m != complex_.m:
        raise ValueError(f'vertex sign has length {f.m}, complex has m={complex_.m}')
    return _product_of_linear(complex_, f.signs)


def pontrjagin_of_chern(chern):
    """
    Total Pontrjagin class 1 - p_1 + p_2 - ... of the realification.

    Computed as c · c̄, where c̄ flips the sign of c_i for odd i.
    """
    if chern.constant_term() != 1:
        raise ValueError('total Chern class must have constant term 1')
    ring_ = polynomial_ring(chern.complex.m)
    conjugate = ring_.from_dict({
        monom: (-coeff if sum(monom) % 2 else coeff) for monom, coeff in chern.element.items()
    })
    return chern * SRPolynomial(chern.complex, conjugate)


# ============================================================================
# EULER CLASSES
# ============================================================================

def euler_omega(complex_, omega):
    """e_ω(K) = Σ_{μ top} ω(μ) v_μ."""
    if omega.complex != complex_:
        raise ValueError('sign function belongs to a different complex')
    result = SRPolynomial.zero(complex_)
    for face, sign in omega.items():
        result = result + SRPolynomial.monomial(complex_, face, sign)
    return result


def omega_of(complex_, f):
    """ω_f(μ) = ∏_{i∈μ} f(i) on every top face."""
    return SignFunction(complex_, tuple(f.on_face(face) for face in complex_.top_faces()))


def euler_f(complex_, f):
    """e_f(K) = e_{ω_f}(K), the top Chern class of ξ_f."""
    return euler_omega(complex_, omega_of(complex_, f))


def top_pontrjagin_signed(complex_):
    """(-1)^n p_n(K), the degree-4n part of p(K) with its sign corrected."""
    n = complex_.n
    return total_pontrjagin(complex_).graded_component(4 * n).scale((-1) ** n)


def sqrt_enumerate(complex_):
    """
    Every square root of (-1)^n p_n(K) in degree 2n, as e_ω for all ω.

    Each candidate is squared and checked before it is returned.
    """
    if complex_.n < 1:
        raise ValueError('square roots need a complex with at least one vertex')
    target = top_pontrjagin_signed(complex_)
    roots = []
    for omega in all_sign_functions(complex_):
        euler = euler_omega(complex_, omega)
        if euler * euler != target:
            raise ArithmeticError(f'e_ω squared does not give (-1)^n p_n for ω={omega.signs}')
        roots.append(euler)
    logger.debug(f'[SQRT_ENUM] {len(roots)} square roots for {complex_!r}')
    return roots


def _nonzero_monomials(complex_, degree):
    """Monomials of polynomial degree `degree` whose support is a face."""
    vertices = complex_.vertices()
    result = []
    for combo in combinations_with_replacement(vertices, degree):
        exponents = [0] * complex_.m
        for vertex in combo:
            exponents[vertex - 1] += 1
        monom = tuple(exponents)
        if complex_.is_face(support(monom)):
            result.append(monom)
    result.sort(key=grlex, reverse=True)
    return result


def square_roots_brute(complex_):
    """
    Exhaustive search for homogeneous square roots of (-1)^n p_n(K).

    Coefficients range over {-1, 0, 1} on the degree-n monomials that are
    nonzero in Z[K], visited in descending graded-lex order. Once the
    coefficients of all monomials >= M are fixed (partial sum H), the
    coefficient of e² at any monomial >= LM(H)·M is final, which prunes
    the search without losing solutions.
    """
    if complex_.n < 1:
        raise ValueError('square roots need a complex with at least one vertex')
    ring_ = polynomial_ring(complex_.m)
    target = dict(top_pontrjagin_signed(complex_).element)
    monomials = _nonzero_monomials(complex_, complex_.n)
    face_cache = {}

    def reduced_coefficients(poly):
        kept = {}
        for monom, coeff in poly.items():
            face = support(monom)
            if face not in face_cache:
                face_cache[face] = complex_.is_face(face)
            if face_cache[face] and coeff:
                kept[monom] = coeff
        return kept

    def consistent(square, threshold):
        bound = grlex(threshold)
        reduced = reduced_coefficients(square)
        for monom in set(reduced) | set(target):
            if grlex(monom) >= bound and reduced.get(monom, 0) != target.get(monom, 0):
                return False
        return True

    roots = []

    def search(index, partial, square, leading):
        if index == len(monomials):
            if reduced_coefficients(square) == target:
                roots.append(reduce(complex_, partial))
            return
        monom = monomials[index]
        term = ring_.from_dict({monom: 1})
        for coefficient in (0, 1, -1):
            if coefficient:
                new_partial = partial + coefficient * term
                new_square = square + 2 * coefficient * partial * term + term * term
                new_leading = leading or monom
            else:
                new_partial, new_square, new_leading = partial, square, leading
            threshold_factor = ring_.from_dict({new_leading or monom: 1})
            threshold = (threshold_factor * term).LM
            if consistent(new_square, threshold):
                search(index + 1, new_partial, new_square, new_leading)

    search(0, ring_.zero, ring_.zero, None)
    logger.debug(f'[SQRT_BRUTE] {len(roots)} square roots found by search')
    return roots


# ============================================================================
# CLASSIFICATION BY CHERN CLASSES
# ============================================================================

def vertex_sign_from_chern(complex_, chern):
    """The f with c_f(K) = chern, or None. Ghost vertices get f(i) = +1."""
    linear = chern.graded_component(2)
    signs = []
    for i in range(complex_.m):
        exponents = tuple(1 if j == i else 0 for j in range(complex_.m))
        coefficient = linear.coefficient(exponents)
        signs.append(-1 if coefficient == -1 else 1)
    f = VertexSign(tuple(signs))
    return f if chern_f(complex_, f) == chern else None
