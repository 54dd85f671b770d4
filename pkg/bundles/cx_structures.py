"""
Complex structures on bundles with Pontrjagin class p(K).

A sign function ω is realized by vertex signs f when ω = ε·ω_f for a global
sign ε. Writing s ∈ {±1} as the bit (1 - s)/2 turns this into the GF(2)
system  Σ_{i∈μ} x_i + e = b_μ,  one row per top face μ.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from .char_classes import (
    SignFunction, VertexSign, all_vertex_signs, chern_f, euler_omega, omega_of,
)
from .gf2 import gf2_solve, least_solution
from .simplicial import FaceSet

logger = logging.getLogger(__name__)

BRUTE_FORCE_MAX_M = 20


# ============================================================================
# LINEAR SYSTEM
# ============================================================================

@dataclass(frozen=True)
class GF2System:
    """
    Rows over the unknowns (x_1, ..., x_m, e); the e column is absent for
    the oriented system. x_i = 1 encodes f(i) = -1, e = 1 encodes ε = -1
    and the right-hand side bit b_μ encodes ω(μ) = -1.
    """

    rows: np.ndarray
    rhs: np.ndarray
    with_epsilon: bool

    @property
    def unknowns(self):
        return self.rows.shape[1]

    def significance(self):
        """Columns from most to least significant: e, then x_m down to x_1."""
        m = self.unknowns - (1 if self.with_epsilon else 0)
        order = [m] if self.with_epsilon else []
        return order + list(range(m - 1, -1, -1))


def build_system(complex_, omega, with_epsilon=True):
    if omega.complex != complex_:
        raise ValueError('sign function belongs to a different complex')
    m = complex_.m
    top = complex_.top_faces()
    rows = np.zeros((len(top), m + (1 if with_epsilon else 0)), dtype=np.uint8)
    rhs = np.zeros(len(top), dtype=np.uint8)
    for row, (face, sign) in enumerate(zip(top, omega.signs)):
        for vertex in face.vertices:
            rows[row, vertex - 1] = 1
        if with_epsilon:
            rows[row, m] = 1
        rhs[row] = 1 if sign == -1 else 0
    return GF2System(rows=rows, rhs=rhs, with_epsilon=with_epsilon)


@dataclass(frozen=True)
class Realization:
    """A witness ω = ε·ω_f."""

    epsilon: int
    f: VertexSign


def omega_from_f(complex_, f):
    """ω_f(μ) = ∏_{i∈μ} f(i)."""
    if f.m != complex_.m:
        raise ValueError(f'vertex sign has length {f.m}, complex has m={complex_.m}')
    return omega_of(complex_, f)


def _solve(complex_, omega, with_epsilon):
    system = build_system(complex_, omega, with_epsilon)
    solution = gf2_solve(system.rows, system.rhs)
    if solution is None:
        logger.debug(f'[GF2_SOLVE] inconsistent system for ω={omega.signs}')
    else:
        logger.debug(f'[GF2_SOLVE] rank {solution.rank}, nullity {solution.nullity} for ω={omega.signs}')
    return system, solution


def realizable(complex_, omega) -> Optional[Realization]:
    """
    Some (ε, f) with ω = ε·ω_f, or None.

    The witness is the least one when read as the integer
    Σ x_i 2^(i-1) + e 2^m, so ε = +1 is preferred.
    """
    system, solution = _solve(complex_, omega, with_epsilon=True)
    if solution is None:
        return None
    bits = least_solution(solution, system.significance())
    m = complex_.m
    f = VertexSign(tuple(-1 if bits[i] else 1 for i in range(m)))
    return Realization(epsilon=-1 if bits[m] else 1, f=f)


def realizable_oriented(complex_, omega) -> Optional[VertexSign]:
    """Some f with ω = ω_f exactly (ε fixed to +1), or None."""
    system, solution = _solve(complex_, omega, with_epsilon=False)
    if solution is None:
        return None
    bits = least_solution(solution, system.significance())
    return VertexSign(tuple(-1 if bit else 1 for bit in bits))


def count_structures(complex_, omega):
    """
    |{f : ω_f = ω or ω_f = -ω}|, the number of complex structures.

    Every top face gives a row, so ω ≠ -ω and each f solves at most one of
    the two ε-branches; the count is 2^nullity of the joint system.
    """
    _, solution = _solve(complex_, omega, with_epsilon=True)
    return 0 if solution is None else solution.count


def count_oriented_structures(complex_, omega):
    """|{f : ω_f = ω}|."""
    _, solution = _solve(complex_, omega, with_epsilon=False)
    return 0 if solution is None else solution.count


def _pattern_bits(omega):
    return sum(1 << j for j, sign in enumerate(omega.signs) if sign == -1)


def _count_range(face_bits, targets, start, stop):
    count = 0
    for bits in range(start, stop):
        pattern = 0
        for j, face in enumerate(face_bits):
            if (bits & face).bit_count() & 1:
                pattern |= 1 << j
        if pattern in targets:
            count += 1
    return count


def count_structures_brute(complex_, omega, threads=1):
    """Count f with ω_f = ±ω by trying all 2^m vertex signs."""
    m = complex_.m
    if m > BRUTE_FORCE_MAX_M:
        raise ValueError(f'brute force is limited to m <= {BRUTE_FORCE_MAX_M}, got m={m}')
    if omega.complex != complex_:
        raise ValueError('sign function belongs to a different complex')
    face_bits = [face.bits for face in complex_.top_faces()]
    full = (1 << len(face_bits)) - 1
    wanted = _pattern_bits(omega)
    targets = {wanted, wanted ^ full}
    total = 1 << m
    if threads <= 1 or total < 1024:
        return _count_range(face_bits, targets, 0, total)
    chunk = -(-total // threads)
    bounds = [(start, min(start + chunk, total)) for start in range(0, total, chunk)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        counts = pool.map(lambda b: _count_range(face_bits, targets, *b), bounds)
    return sum(counts)


def stable_count(complex_, s):
    """Complex structures on a 2s-dimensional bundle with p = p(K), s > n."""
    if s <= complex_.n:
        raise ValueError(f'stable count needs s > n={complex_.n}, got s={s}')
    return 2 ** complex_.m


# ============================================================================
# CLASSIFICATION OF THE ξ_f
# ============================================================================

def distinct_chern_count(complex_):
    """Number of distinct total Chern classes c_f(K) over all f."""
    return len({chern_f(complex_, f) for f in all_vertex_signs(complex_.m)})


def realifications_isomorphic(complex_, f, g):
    """(ξ_f)_R ≅ (ξ_g)_R as non-oriented bundles iff ω_f = ±ω_g."""
    omega_f = omega_from_f(complex_, f)
    omega_g = omega_from_f(complex_, g)
    return omega_f == omega_g or omega_f == -omega_g


def structure_classes(complex_):
    """
    Group all vertex signs by ω_f up to sign.

    Returns (canonical ω, [f, ...]) pairs; the canonical representative is
    the one with ω = +1 on the first top face.
    """
    classes = {}
    for f in all_vertex_signs(complex_.m):
        omega = omega_from_f(complex_, f)
        if omega.signs and omega.signs[0] == -1:
            omega = -omega
        classes.setdefault(omega, []).append(f)
    ordered = sorted(classes.items(), key=lambda item: tuple(s == -1 for s in item[0].signs))
    return ordered


# ============================================================================
# DICHARACTERISTIC PAIRS
# ============================================================================

@dataclass(frozen=True)
class DicharacteristicPair:
    """Oriented top faces of K_P together with an integer n×m matrix Λ."""

    complex: object
    oriented_facets: tuple
    matrix: tuple

    def __post_init__(self):
        object.__setattr__(self, 'oriented_facets', tuple(tuple(f) for f in self.oriented_facets))
        object.__setattr__(self, 'matrix', tuple(tuple(row) for row in self.matrix))
        complex_ = self.complex
        if not complex_.is_pure():
            raise ValueError('K_P must be pure')
        supports = []
        for facet in self.oriented_facets:
            if len(set(facet)) != len(facet):
                raise ValueError(f'oriented facet {list(facet)} repeats a vertex')
            supports.append(FaceSet.of(facet))
        if sorted(s.bits for s in supports) != sorted(f.bits for f in complex_.top_faces()):
            raise ValueError('oriented facets must list every top face exactly once')
        if len(self.matrix) != complex_.n:
            raise ValueError(f'Λ must have n={complex_.n} rows, got {len(self.matrix)}')
        for row in self.matrix:
            if len(row) != complex_.m:
                raise ValueError(f'Λ must have m={complex_.m} columns, got a row of length {len(row)}')
            for entry in row:
                if not isinstance(entry, int):
                    raise ValueError(f'Λ entries must be integers, got {entry!r}')

    def minor(self, facet):
        """Λ_μ with columns in the supplied (oriented) order."""
        rows = [[row[vertex - 1] for vertex in facet] for row in self.matrix]
        return DomainMatrix([[ZZ(x) for x in r] for r in rows], (len(rows), len(facet)), ZZ)


@dataclass(frozen=True)
class PairValidation:
    omega: SignFunction
    euler: object
    determinants: tuple


def validate_pair(pair):
    """
    Check |det Λ_μ| = 1 on every top face and return μ ↦ det Λ_μ.

    The Euler class of the Borel construction is Σ det Λ_μ v_μ.
    """
    by_face = {}
    determinants = []
    for facet in pair.oriented_facets:
        det = int(pair.minor(facet).det())
        if abs(det) != 1:
            raise ValueError(f'det Λ_μ = {det} on face {list(facet)}; expected ±1')
        by_face[FaceSet.of(facet)] = det
        determinants.append(det)
    omega = SignFunction.from_mapping(pair.complex, by_face)
    euler = euler_omega(pair.complex, omega)
    logger.debug(f'[QUASITORIC] determinant signs {omega.signs}')
    return PairValidation(omega=omega, euler=euler, determinants=tuple(determinants))


def pair_admits_complex_structure(pair):
    """True iff det Λ_μ = ε·f(μ) for some f and ε."""
    return realizable(pair.complex, validate_pair(pair).omega) is not None
