"""
Higher derived limits over the face category.

A functor Φ: cat(K)^op -> ab assigns a free module Φ(α) of rank r(α) to
every face α and, for α ⊆ β, a homomorphism Φ(β) -> Φ(α): an r(α)×r(β)
integer matrix. Only covering pairs (|β∖α| = 1) are stored; longer arrows
are composites.

limⁱΦ is the cohomology of the normalized cochain complex

    Cᵏ = ∏ Φ(x_k)   over strict chains x_0 ⊋ x_1 ⊋ ... ⊋ x_k of faces,

    (δc)(x_0 ⊋ ... ⊋ x_{k+1}) = Σ_{j≤k} (-1)^j c(... x̂_j ...)
                                + (-1)^{k+1} Φ(x_k → x_{k+1}) c(x_0 ⊋ ... ⊋ x_k).
"""

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .abelian import INTEGERS, TRIVIAL, AbGroup, cohomology, integer_matrix
from .simplicial import FaceSet, sorted_faces

logger = logging.getLogger(__name__)


def _identity(rank):
    matrix = integer_matrix(rank, rank)
    for i in range(rank):
        matrix[i, i] = 1
    return matrix


def _as_face(face):
    return face if isinstance(face, FaceSet) else FaceSet.of(face)


def _as_matrix(rows, shape):
    matrix = integer_matrix(*shape)
    rows = list(rows)
    if len(rows) != shape[0] or any(len(row) != shape[1] for row in rows):
        raise ValueError(f'map matrix does not have shape {shape[0]}x{shape[1]}')
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            if isinstance(value, bool) or int(value) != value:
                raise ValueError(f'map entry {value!r} is not an integer')
            matrix[i, j] = int(value)
    return matrix


class AbFunctor:
    """
    Φ with free values. `ranks` maps faces to ranks (missing faces are 0);
    `maps` maps covering pairs (β, α), α = β minus one vertex, to matrices.
    Missing maps between non-zero values are zero maps.
    """

    def __init__(self, complex_, ranks, maps=None, ring=INTEGERS):
        self.complex = complex_
        self.ring = ring
        self._ranks = {}
        for face, value in ranks.items():
            face = _as_face(face)
            complex_.require_face(face)
            if value < 0:
                raise ValueError(f'negative rank at {face!r}')
            if value:
                self._ranks[face] = int(value)
        self._covers = {}
        for (big, small), rows in (maps or {}).items():
            big, small = _as_face(big), _as_face(small)
            complex_.require_face(big)
            if not (small < big and len(big) - len(small) == 1):
                raise ValueError(f'{small!r} -> {big!r} is not a covering pair')
            self._covers[(big, small)] = _as_matrix(rows, (self.rank(small), self.rank(big)))
        self._composites = {}
        self._check_functoriality()

    def rank(self, face):
        return self._ranks.get(face, 0)

    def value(self, face):
        return AbGroup.free(self.rank(face))

    @property
    def support(self):
        return sorted_faces(self._ranks)

    def cover(self, big, small):
        matrix = self._covers.get((big, small))
        if matrix is None:
            return integer_matrix(self.rank(small), self.rank(big))
        return matrix

    def map(self, big, small):
        """Φ(small ⊆ big): Φ(big) -> Φ(small), composed along covering pairs."""
        if not small <= big:
            raise ValueError(f'{small!r} is not contained in {big!r}')
        if small == big:
            return _identity(self.rank(big))
        key = (big, small)
        if key not in self._composites:
            vertex = min((big - small).vertices)
            step = big - FaceSet.of([vertex])
            self._composites[key] = self.map(step, small).dot(self.cover(big, step))
        return self._composites[key]

    def _check_functoriality(self):
        for face in self.complex.faces():
            vertices = face.vertices
            for a in range(len(vertices)):
                for b in range(a + 1, len(vertices)):
                    without_a = face - FaceSet.of([vertices[a]])
                    without_b = face - FaceSet.of([vertices[b]])
                    bottom = without_a - FaceSet.of([vertices[b]])
                    left = self.cover(without_a, bottom).dot(self.cover(face, without_a))
                    right = self.cover(without_b, bottom).dot(self.cover(face, without_b))
                    if not np.array_equal(self._reduce(left), self._reduce(right)):
                        raise ValueError(f'functor is not path-independent on {face!r} -> {bottom!r}')

    def _reduce(self, matrix):
        if self.ring == INTEGERS:
            return matrix
        return matrix % self.ring

    def covers(self):
        """Stored covering-pair matrices as ((big, small), matrix), in face order."""
        keys = sorted(self._covers, key=lambda pair: (pair[0].sort_key, pair[1].sort_key))
        return [(key, self._covers[key]) for key in keys]

    def __repr__(self):
        return f'AbFunctor(support={self.support}, ring={self.ring!r})'


# ============================================================================
# CONSTRUCTORS
# ============================================================================

def atomic_functor(complex_, face, value=1, ring=INTEGERS):
    """Φ_α: value at α, zero everywhere else."""
    face = _as_face(face)
    complex_.require_face(face)
    if isinstance(value, AbGroup):
        if value.torsion:
            raise ValueError('functor values must be free')
        value = value.rank
    return AbFunctor(complex_, {face: value}, ring=ring)


def constant_functor(complex_, value=1, ring=INTEGERS):
    if isinstance(value, AbGroup):
        if value.torsion:
            raise ValueError('functor values must be free')
        value = value.rank
    faces = complex_.faces()
    maps = {}
    for big in faces:
        for vertex in big.vertices:
            maps[(big, big - FaceSet.of([vertex]))] = _identity(value).tolist()
    return AbFunctor(complex_, {face: value for face in faces}, maps, ring=ring)


def diagonal_functor(complex_, weights, ring=INTEGERS):
    """Rank one everywhere; dropping vertex i multiplies by weights[i-1]."""
    if len(weights) != complex_.m:
        raise ValueError(f'expected {complex_.m} weights, got {len(weights)}')
    faces = complex_.faces()
    maps = {}
    for big in faces:
        for vertex in big.vertices:
            maps[(big, big - FaceSet.of([vertex]))] = [[int(weights[vertex - 1])]]
    return AbFunctor(complex_, {face: 1 for face in faces}, maps, ring=ring)


def _restrict(functor, keep):
    ranks = {face: functor.rank(face) for face in functor.support if keep(face)}
    maps = {
        (big, small): matrix.tolist()
        for (big, small), matrix in functor.covers()
        if keep(big) and keep(small)
    }
    return AbFunctor(functor.complex, ranks, maps, ring=functor.ring)


def truncate_below(functor, s):
    """Φ_{≤s}: keep values on faces with |α| ≤ s."""
    return _restrict(functor, lambda face: len(face) <= s)


def slice_functor(functor, s):
    """Φ_s: keep values on faces with |α| = s."""
    return _restrict(functor, lambda face: len(face) == s)


# ============================================================================
# COCHAIN COMPLEX
# ============================================================================

@dataclass(frozen=True)
class ChainOfFaces:
    faces: tuple

    def __post_init__(self):
        for big, small in zip(self.faces, self.faces[1:]):
            if not small < big:
                raise ValueError(f'{small!r} is not strictly below {big!r}')

    @property
    def last(self):
        return self.faces[-1]

    def drop(self, j):
        return ChainOfFaces(self.faces[:j] + self.faces[j + 1:])

    def __len__(self):
        return len(self.faces)


def strict_chains(complex_):
    """Every strict chain of faces, grouped by number of members (1..n+1)."""
    faces = complex_.faces()
    below = {face: [sub for sub in face.subsets() if sub != face] for face in faces}
    by_length = {}

    def extend(chain):
        by_length.setdefault(len(chain), []).append(ChainOfFaces(chain))
        for sub in below[chain[-1]]:
            extend(chain + (sub,))

    for face in faces:
        extend((face,))
    return [by_length.get(length, []) for length in range(1, complex_.n + 2)]


class CochainComplex:
    def __init__(self, functor):
        self.functor = functor
        self.chains = [
            [chain for chain in chains if functor.rank(chain.last) > 0]
            for chains in strict_chains(functor.complex)
        ]
        self.offsets = []
        self.dimensions = []
        for chains in self.chains:
            offsets, total = {}, 0
            for chain in chains:
                offsets[chain] = total
                total += functor.rank(chain.last)
            self.offsets.append(offsets)
            self.dimensions.append(total)

    @cached_property
    def coboundaries(self):
        return [self._coboundary(k) for k in range(len(self.dimensions) - 1)]

    def _coboundary(self, k):
        functor = self.functor
        matrix = integer_matrix(self.dimensions[k + 1], self.dimensions[k])
        sources = self.offsets[k]
        for chain, row in self.offsets[k + 1].items():
            r = functor.rank(chain.last)
            for j in range(k + 1):
                col = sources[chain.drop(j)]
                sign = -1 if j % 2 else 1
                for i in range(r):
                    matrix[row + i, col + i] += sign
            head = chain.drop(k + 1)
            if head in sources:
                sign = -1 if (k + 1) % 2 else 1
                block = functor.map(head.last, chain.last)
                col = sources[head]
                matrix[row:row + r, col:col + block.shape[1]] += sign * block
        return matrix

    def cohomology(self):
        return cohomology(self.dimensions, self.coboundaries, self.functor.ring)


def coboundary_matrices(functor):
    return CochainComplex(functor).coboundaries


def lim_groups(functor, max_degree):
    """limⁱΦ for i = 0..max_degree; degrees beyond n are 0."""
    if max_degree < 0:
        raise ValueError(f'degree must be non-negative, got {max_degree}')
    groups = CochainComplex(functor).cohomology()
    logger.info(f'[LIMITS] {functor!r}: {[str(g) for g in groups]}')
    groups = groups[:max_degree + 1]
    return groups + [TRIVIAL] * (max_degree + 1 - len(groups))


# ============================================================================
# LINK COHOMOLOGY
# ============================================================================

def link_cohomology(complex_, face, ring=INTEGERS):
    """
    H̃^j(ℓ_K(α); R) for j = -1..n-|α|-1 (entry 0 is degree -1).

    Augmented simplicial cochains: C^{-1} = R on ∅, and
    (δc)(σ) = Σ_i (-1)^i c(σ minus its i-th vertex).
    """
    face = _as_face(face)
    complex_.require_face(face)
    link = complex_.link(face)
    top = complex_.n - len(face)
    layers = [link.faces_of_card(card) for card in range(top + 1)]
    index = [{simplex: i for i, simplex in enumerate(layer)} for layer in layers]
    coboundaries = []
    for card in range(top):
        matrix = integer_matrix(len(layers[card + 1]), len(layers[card]))
        for row, simplex in enumerate(layers[card + 1]):
            for i, vertex in enumerate(simplex.vertices):
                matrix[row, index[card][simplex - FaceSet.of([vertex])]] += -1 if i % 2 else 1
        coboundaries.append(matrix)
    groups = cohomology([len(layer) for layer in layers], coboundaries, ring)
    logger.debug(f'[LINK] {face!r}: {[str(g) for g in groups]}')
    return groups


def verify_atomic_formula(complex_, face, ring=INTEGERS, max_degree=None):
    """limⁱ Φ_α = H̃^{i-1}(ℓ_K(α); Φ(α)) for i = 0..max_degree."""
    face = _as_face(face)
    if max_degree is None:
        max_degree = complex_.n
    limits = lim_groups(atomic_functor(complex_, face, ring=ring), max_degree)
    link = link_cohomology(complex_, face, ring)
    for degree, group in enumerate(limits):
        expected = link[degree] if degree < len(link) else TRIVIAL
        if group != expected:
            logger.warning(f'[LIMITS] atomic formula fails at {face!r}, degree {degree}: {group} != {expected}')
            return False
    return True


def rank_sum_consistent(functor, s, max_degree):
    """rank limⁱΦ_{≤s} ≤ rank limⁱΦ_{≤s-1} + rank limⁱΦ_s for every i."""
    whole = lim_groups(truncate_below(functor, s), max_degree)
    lower = lim_groups(truncate_below(functor, s - 1), max_degree)
    top = lim_groups(slice_functor(functor, s), max_degree)
    return all(w.rank <= a.rank + b.rank for w, a, b in zip(whole, lower, top))


def constant_is_acyclic(complex_, value=1, ring=INTEGERS):
    groups = lim_groups(constant_functor(complex_, value, ring), complex_.n)
    return groups[0] == AbGroup.free(value) and all(g.is_trivial for g in groups[1:])

