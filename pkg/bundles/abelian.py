"""
Finitely generated abelian groups and cochain-complex cohomology.

Groups are kept in invariant-factor form Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k with
d_1 | d_2 | ... | d_k. Cohomology over Z is read off Smith normal forms,
over F_p off ranks.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np
from sympy import GF, ZZ, factorint, isprime
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_form

logger = logging.getLogger(__name__)

INTEGERS = 'Z'


def parse_ring(text):
    """'Z' -> 'Z'; 'F2', 'F3', ... -> the prime as an int."""
    if isinstance(text, int) and not isinstance(text, bool):
        if not isprime(text):
            raise ValueError(f'{text} is not a prime')
        return text
    value = str(text).strip()
    if value.upper() == INTEGERS:
        return INTEGERS
    if value[:1].upper() == 'F' and value[1:].isdigit():
        p = int(value[1:])
        if isprime(p):
            return p
        raise ValueError(f'F{p}: {p} is not a prime')
    raise ValueError(f'unknown coefficient ring {text!r}; use Z or F<p>')


def ring_name(ring):
    return INTEGERS if ring == INTEGERS else f'F{ring}'


def invariant_factors(orders):
    """
    Canonical torsion coefficients for Z/o_1 ⊕ Z/o_2 ⊕ ...

    Each order is split into prime powers; the k-th largest power of every
    prime goes into the k-th largest invariant factor.
    """
    powers = defaultdict(list)
    for order in orders:
        order = abs(int(order))
        if order == 0:
            raise ValueError('torsion orders must be non-zero')
        for p, e in factorint(order).items():
            powers[int(p)].append(int(p) ** int(e))
    if not powers:
        return ()
    length = max(len(v) for v in powers.values())
    factors = [1] * length
    for values in powers.values():
        for k, value in enumerate(sorted(values, reverse=True)):
            factors[k] *= value
    return tuple(sorted(factors))


@dataclass(frozen=True)
class AbGroup:
    rank: int = 0
    torsion: tuple = field(default=())

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError(f'negative rank {self.rank}')
        object.__setattr__(self, 'torsion', invariant_factors(self.torsion))

    @classmethod
    def free(cls, rank):
        return cls(rank, ())

    @property
    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    @property
    def is_free(self):
        return not self.torsion

    def direct_sum(self, other):
        return AbGroup(self.rank + other.rank, self.torsion + other.torsion)

    def to_json(self):
        return {'rank': self.rank, 'torsion': list(self.torsion)}

    def __str__(self):
        parts = ['Z'] * self.rank + [f'Z/{d}' for d in self.torsion]
        return ' + '.join(parts) if parts else '0'


TRIVIAL = AbGroup()


# ============================================================================
# MATRICES
# ============================================================================

def integer_matrix(rows, cols):
    """A zero matrix of Python ints, shaped for arbitrary-precision arithmetic."""
    return np.zeros((rows, cols), dtype=object)


def to_domain_matrix(array, ring=INTEGERS):
    rows, cols = array.shape
    entries = [[ZZ(int(x)) for x in row] for row in array.tolist()]
    matrix = DomainMatrix(entries, (rows, cols), ZZ)
    if ring != INTEGERS:
        matrix = matrix.convert_to(GF(ring))
    return matrix


def matrix_rank(array, ring=INTEGERS):
    if 0 in array.shape:
        return 0
    return to_domain_matrix(array, ring).rank()


def elementary_divisors(array):
    """Non-zero diagonal of the Smith normal form over Z, as positive ints."""
    if 0 in array.shape:
        return []
    snf = smith_normal_form(to_domain_matrix(array)).to_Matrix()
    diagonal = (abs(int(snf[i, i])) for i in range(min(array.shape)))
    return [d for d in diagonal if d != 0]


def cohomology(dimensions, coboundaries, ring=INTEGERS):
    """
    H^k of 0 -> C^0 -> C^1 -> ... with dim C^k = dimensions[k].

    coboundaries[k] is the matrix of C^k -> C^{k+1}, shape
    (dimensions[k+1], dimensions[k]); missing trailing entries are zero maps.
    """
    groups = []
    incoming_rank = 0
    incoming_torsion = []
    for k, dimension in enumerate(dimensions):
        outgoing = coboundaries[k] if k < len(coboundaries) else integer_matrix(0, dimension)
        if ring == INTEGERS:
            divisors = elementary_divisors(outgoing)
            out_rank = len(divisors)
        else:
            divisors = []
            out_rank = matrix_rank(outgoing, ring)
        groups.append(AbGroup(dimension - out_rank - incoming_rank, tuple(incoming_torsion)))
        logger.debug(f'[COHOMOLOGY] degree {k}: dim={dimension} rank_out={out_rank} -> {groups[-1]}')
        incoming_rank = out_rank
        incoming_torsion = [d for d in divisors if d > 1]
    return groups
