"""
Regular r-paint colorings: non-degenerate simplicial maps K -> Δ[r].

A coloring g: [m] -> [r] splits the bundle λ as a sum of line bundles with
first Chern classes u_i = Σ_{g(j)=i} v_j, so ∏(1 + u_i) = c(K).
"""

import logging
from dataclasses import dataclass
from itertools import product

import networkx as nx

from .char_classes import SIGNS, VertexSign, omega_of, total_chern, total_pontrjagin
from .stanley_reisner import SRPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Coloring:
    """colors[j-1] = g(j) in 1..paints."""

    colors: tuple
    paints: int

    def __post_init__(self):
        object.__setattr__(self, 'colors', tuple(self.colors))
        for color in self.colors:
            if not 1 <= color <= self.paints:
                raise ValueError(f'color {color} outside 1..{self.paints}')

    def __call__(self, vertex):
        return self.colors[vertex - 1]

    def color_class(self, color):
        return [j for j, c in enumerate(self.colors, start=1) if c == color]


def skeleton_graph(complex_):
    """The 1-skeleton as a networkx graph on the non-ghost vertices."""
    graph = nx.Graph()
    graph.add_nodes_from(complex_.vertices())
    graph.add_edges_from(edge.vertices for edge in complex_.edges())
    return graph


def is_valid_coloring(complex_, coloring):
    """Distinct colors on every face; faces are cliques, so edges decide."""
    if len(coloring.colors) != complex_.m:
        return False
    return all(coloring(a) != coloring(b) for a, b in skeleton_graph(complex_).edges)


def find_coloring(complex_, paints):
    """
    First-fit backtracking with vertices ordered by decreasing degree
    (ties by index). Ghost vertices are painted 1.
    """
    if paints < 1:
        raise ValueError(f'number of paints must be at least 1, got {paints}')
    if paints < complex_.n:
        return None
    graph = skeleton_graph(complex_)
    order = sorted(graph.nodes, key=lambda v: (-graph.degree[v], v))
    assignment = {}

    def is_safe(vertex, color):
        return all(assignment.get(u) != color for u in graph.neighbors(vertex))

    def backtrack(index):
        if index == len(order):
            return True
        vertex = order[index]
        for color in range(1, paints + 1):
            if is_safe(vertex, color):
                assignment[vertex] = color
                if backtrack(index + 1):
                    return True
                del assignment[vertex]
        return False

    if not backtrack(0):
        logger.debug(f'[COLORING] no {paints}-coloring of {complex_!r}')
        return None
    colors = tuple(assignment.get(j, 1) for j in range(1, complex_.m + 1))
    return Coloring(colors, paints)


def chromatic_number(complex_):
    vertices = complex_.vertices()
    if not vertices:
        raise ValueError('the complex has no vertices')
    for paints in range(max(complex_.n, 1), len(vertices) + 1):
        if find_coloring(complex_, paints) is not None:
            return paints
    return len(vertices)


def _require_valid(complex_, coloring):
    if not is_valid_coloring(complex_, coloring):
        raise ValueError(f'{coloring.colors} is not a regular coloring of {complex_!r}')


def splitting_factors(complex_, coloring):
    """u_i = Σ_{g(j)=i} v_j for i = 1..r."""
    _require_valid(complex_, coloring)
    factors = []
    for color in range(1, coloring.paints + 1):
        u = SRPolynomial.zero(complex_)
        for j in coloring.color_class(color):
            u = u + SRPolynomial.generator(complex_, j)
        factors.append(u)
    return factors


def splitting_identity(complex_, coloring):
    """∏(1 + u_i) == c(K)."""
    result = SRPolynomial.one(complex_)
    for u in splitting_factors(complex_, coloring):
        result = result * (1 + u)
    return result == total_chern(complex_)


def real_splitting_identity(complex_, coloring):
    """∏(1 - u_i²) == p(K)."""
    result = SRPolynomial.one(complex_)
    for u in splitting_factors(complex_, coloring):
        result = result * (1 - u * u)
    return result == total_pontrjagin(complex_)


def composed_vertex_sign(coloring, paint_signs):
    """f∘g for f: [r] -> {±1}."""
    if paint_signs.m != coloring.paints:
        raise ValueError(f'expected {coloring.paints} paint signs, got {paint_signs.m}')
    return VertexSign(tuple(paint_signs(color) for color in coloring.colors))


def coloring_euler_classes(complex_, coloring, paint_signs):
    """ω_{f∘g} for an n-coloring g."""
    if coloring.paints != complex_.n:
        raise ValueError(f'need an n-coloring (n={complex_.n}), got {coloring.paints} paints')
    _require_valid(complex_, coloring)
    return omega_of(complex_, composed_vertex_sign(coloring, paint_signs))


def coloring_sign_family(complex_, coloring):
    """The 2^n vertex signs f∘g, one per f: [n] -> {±1}."""
    if coloring.paints != complex_.n:
        raise ValueError(f'need an n-coloring (n={complex_.n}), got {coloring.paints} paints')
    _require_valid(complex_, coloring)
    return [
        composed_vertex_sign(coloring, VertexSign(signs))
        for signs in product(SIGNS, repeat=coloring.paints)
    ]
