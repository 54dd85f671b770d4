"""
Example complexes and pairs, plus seeded random generators for the test corpus.
"""

import random
from itertools import combinations

from .cx_structures import DicharacteristicPair
from .simplicial import SimplicialComplex, boundary_simplex, full_simplex


def triangle():
    """∂Δ[3], the boundary of a triangle (a circle)."""
    return boundary_simplex(3)


def square():
    """The 4-cycle 1-2-3-4-1."""
    return SimplicialComplex.from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])


def tetrahedron_boundary():
    """∂Δ[4], a 2-sphere."""
    return boundary_simplex(4)


def simplex(m):
    return full_simplex(m)


def cp2_pair():
    """The fan of CP(2) over ∂Δ[3]; every facet minor has determinant +1."""
    return DicharacteristicPair(
        complex=triangle(),
        oriented_facets=((1, 2), (2, 3), (3, 1)),
        matrix=((1, 0, -1), (0, 1, -1)),
    )


def odd_square_pair():
    """
    A pair over the square with determinant signs (+, -, -, -).

    An odd number of negative minors cannot come from ε·ω_f, so the
    quasitoric manifold carries no complex structure of this kind.
    """
    return DicharacteristicPair(
        complex=square(),
        oriented_facets=((1, 2), (2, 3), (3, 4), (4, 1)),
        matrix=((1, 0, 1, 2), (0, 1, 1, 1)),
    )


NAMED_COMPLEXES = {
    'triangle': triangle,
    'square': square,
    'tetrahedron_boundary': tetrahedron_boundary,
}

NAMED_PAIRS = {
    'cp2_pair': cp2_pair,
    'odd_square_pair': odd_square_pair,
}


# ============================================================================
# RANDOM CORPUS
# ============================================================================

def random_complex(rng, m, max_facets=None, max_size=None):
    """Arbitrary complex on [m]: a handful of random non-empty facets."""
    max_facets = max_facets or m
    max_size = min(max_size or m, m)
    facets = []
    for _ in range(rng.randint(1, max_facets)):
        size = rng.randint(1, max_size)
        facets.append(rng.sample(range(1, m + 1), size))
    return SimplicialComplex.from_facets(m, facets)


def random_pure_complex(rng, m, n):
    """Pure (n-1)-dimensional complex: a random non-empty set of n-subsets of [m]."""
    candidates = list(combinations(range(1, m + 1), n))
    count = rng.randint(1, len(candidates))
    return SimplicialComplex.from_facets(m, rng.sample(candidates, count))


def random_complex_of_dim(rng, m, n):
    """An (n-1)-dimensional complex: one n-subset plus random smaller faces."""
    facets = [rng.sample(range(1, m + 1), n)]
    for _ in range(rng.randint(0, m)):
        facets.append(rng.sample(range(1, m + 1), rng.randint(1, n)))
    return SimplicialComplex.from_facets(m, facets)


def random_corpus(seed, count, max_m, pure=False, min_m=2, max_n=None):
    """`count` complexes from a seeded generator, m in min_m..max_m, n <= max_n."""
    rng = random.Random(seed)
    corpus = []
    for _ in range(count):
        m = rng.randint(min_m, max_m)
        if pure:
            corpus.append(random_pure_complex(rng, m, rng.randint(1, min(max_n or m, m))))
        else:
            corpus.append(random_complex(rng, m, max_size=max_n))
    return corpus
