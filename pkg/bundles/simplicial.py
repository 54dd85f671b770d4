"""
Finite abstract simplicial complexes on the vertex set [m].

Faces are bit-indexed sets (bit i-1 stands for vertex i). A complex stores
only its inclusion-maximal faces; every other face is answered by the
membership test or generated on demand.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations


# ============================================================================
# FACES
# ============================================================================

@dataclass(frozen=True)
class FaceSet:
    """A subset of {1, ..., m}, stored as a bitmask."""

    bits: int = 0

    @classmethod
    def of(cls, vertices):
        bits = 0
        for vertex in vertices:
            if vertex < 1:
                raise ValueError(f'vertex index {vertex} must be positive')
            bits |= 1 << (vertex - 1)
        return cls(bits)

    @property
    def vertices(self):
        """Vertex indices in increasing order."""
        result = []
        bits, index = self.bits, 1
        while bits:
            if bits & 1:
                result.append(index)
            bits >>= 1
            index += 1
        return tuple(result)

    @property
    def dim(self):
        return len(self) - 1

    def __len__(self):
        return self.bits.bit_count()

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, vertex):
        return vertex >= 1 and bool(self.bits >> (vertex - 1) & 1)

    def __or__(self, other):
        return FaceSet(self.bits | other.bits)

    def __and__(self, other):
        return FaceSet(self.bits & other.bits)

    def __sub__(self, other):
        return FaceSet(self.bits & ~other.bits)

    def __le__(self, other):
        return self.bits & ~other.bits == 0

    def __lt__(self, other):
        return self <= other and self.bits != other.bits

    def issubset(self, other):
        return self <= other

    def subsets(self):
        """All subsets, including the empty set and the face itself."""
        sub = self.bits
        while True:
            yield FaceSet(sub)
            if sub == 0:
                return
            sub = (sub - 1) & self.bits

    @property
    def sort_key(self):
        """Graded lexicographic key: cardinality first, then vertex tuple."""
        return (len(self), self.vertices)

    def __repr__(self):
        return '{' + ','.join(str(v) for v in self.vertices) + '}'

EMPTY_FACE = FaceSet(0)


def sorted_faces(faces):
    return sorted(faces, key=lambda face: face.sort_key)


def _maximal(bit_sets):
    """Reduce a collection of bitmasks to its inclusion-maximal members."""
    candidates = sorted(set(bit_sets), key=lambda b: -b.bit_count())
    kept = []
    for bits in candidates:
        if not any(bits & ~other == 0 for other in kept):
            kept.append(bits)
    return kept


# ============================================================================
# SIMPLICIAL COMPLEX
# ============================================================================

@dataclass(frozen=True)
class SimplicialComplex:
    """
    A downward-closed family of subsets of [m], given by its facets.

    Facets are kept in lexicographic order of their vertex tuples; two
    complexes are equal when they have the same m and the same facets.
    """

    m: int
    facets: tuple

    @classmethod
    def from_facets(cls, m, facets):
        """
        Build a complex from vertex lists (1-based).

        Duplicates and non-maximal lists are dropped. An empty facet list,
        or a single empty vertex list, gives the complex {∅}.
        """
        if not isinstance(m, int) or m <= 0:
            raise ValueError(f'm must be a positive integer, got {m!r}')
        facets = [list(facet) for facet in facets]
        if any(not facet for facet in facets) and any(facets):
            raise ValueError('an empty vertex list is only allowed for the complex {∅}')
        bit_sets = []
        for facet in facets:
            for vertex in facet:
                if not isinstance(vertex, int) or not 1 <= vertex <= m:
                    raise ValueError(f'vertex index {vertex!r} out of range 1..{m}')
            bit_sets.append(FaceSet.of(facet).bits)
        return cls._from_bits(m, bit_sets)

    @classmethod
    def _from_bits(cls, m, bit_sets):
        kept = [FaceSet(bits) for bits in _maximal(bit_sets) if bits]
        if not kept:
            kept = [EMPTY_FACE]
        kept.sort(key=lambda face: face.vertices)
        return cls(m=m, facets=tuple(kept))

    # ------------------------------------------------------------------
    # Derived data
    # ------------------------------------------------------------------

    @cached_property
    def dim(self):
        return max(len(facet) for facet in self.facets) - 1

    @cached_property
    def n(self):
        """dim K + 1, the cardinality of the top faces."""
        return self.dim + 1

    @cached_property
    def _facet_bits(self):
        return tuple(facet.bits for facet in self.facets)

    @property
    def maximal_faces(self):
        return list(self.facets)

    @property
    def ambient(self):
        return FaceSet((1 << self.m) - 1)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def is_face(self, face):
        if isinstance(face, FaceSet):
            bits = face.bits
        else:
            bits = FaceSet.of(face).bits
        if bits >> self.m:
            raise ValueError(f'{face!r} is not a subset of [{self.m}]')
        return any(bits & ~facet == 0 for facet in self._facet_bits)

    def require_face(self, face):
        if not self.is_face(face):
            raise ValueError(f'{face!r} is not a face of the complex')

    @cached_property
    def _all_faces(self):
        seen = set()
        for facet in self.facets:
            seen.update(facet.subsets())
        return tuple(sorted_faces(seen))

    def faces(self):
        """Every face, ∅ included, in graded lexicographic order."""
        return list(self._all_faces)

    def faces_of_card(self, k):
        return [face for face in self._all_faces if len(face) == k]

    def top_faces(self):
        """All faces of cardinality exactly n, in lexicographic order."""
        return self.faces_of_card(self.n)

    def f_vector(self):
        """Face counts by cardinality 0..n (the entry for ∅ comes first)."""
        counts = [0] * (self.n + 1)
        for face in self._all_faces:
            counts[len(face)] += 1
        return counts

    def is_pure(self):
        return all(len(facet) == self.n for facet in self.facets)

    def vertices(self):
        """Vertices i with {i} a face."""
        return [face.vertices[0] for face in self.faces_of_card(1)]

    def ghost_vertices(self):
        present = set(self.vertices())
        return [i for i in range(1, self.m + 1) if i not in present]

    def edges(self):
        return self.faces_of_card(2)

    def link(self, face):
        """ℓ_K(α): faces β with α ∩ β = ∅ and α ∪ β ∈ K."""
        if not isinstance(face, FaceSet):
            face = FaceSet.of(face)
        self.require_face(face)
        bit_sets = [bits & ~face.bits for bits in self._facet_bits if face.bits & ~bits == 0]
        return SimplicialComplex._from_bits(self.m, bit_sets)

    def as_lists(self):
        return [list(facet.vertices) for facet in self.facets]

    def __repr__(self):
        return f'SimplicialComplex(m={self.m}, facets={self.as_lists()})'


# ============================================================================
# CONSTRUCTORS
# ============================================================================

def full_simplex(m):
    """Δ[m]: every subset of [m]."""
    return SimplicialComplex.from_facets(m, [list(range(1, m + 1))])


def boundary_simplex(m):
    """∂Δ[m]: every proper subset of [m]."""
    if m == 1:
        return SimplicialComplex.from_facets(1, [])
    return SimplicialComplex.from_facets(m, [list(c) for c in combinations(range(1, m + 1), m - 1)])


def simplex_on(m, face):
    """The full simplex Δ[α] on a face α, inside the ambient vertex set [m]."""
    return SimplicialComplex._from_bits(m, [face.bits])
