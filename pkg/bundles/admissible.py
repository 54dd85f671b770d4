"""
K-admissible matrices.

An (m-n)×m matrix A is K-admissible when A_α, the columns of A indexed by
[m]∖α, has full row rank m-n for every face α. Ranks are exact over QQ.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .simplicial import FaceSet

logger = logging.getLogger(__name__)


def _parse_entry(value):
    if isinstance(value, bool):
        raise ValueError(f'matrix entry {value!r} is not a number')
    if isinstance(value, (int, Fraction)):
        fraction = Fraction(value)
    elif isinstance(value, str):
        try:
            fraction = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f'matrix entry {value!r} is not an exact rational') from exc
    else:
        raise ValueError(f'matrix entry {value!r} is not an exact rational')
    return QQ(fraction.numerator, fraction.denominator)


@dataclass(frozen=True)
class ExactMatrix:
    """A rows×cols matrix over QQ; rows may be 0 (the empty matrix)."""

    rows: int
    cols: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows, cols=None):
        parsed = tuple(tuple(_parse_entry(x) for x in row) for row in rows)
        if cols is None:
            if not parsed:
                raise ValueError('column count is required for a matrix without rows')
            cols = len(parsed[0])
        if cols <= 0:
            raise ValueError('a matrix needs at least one column')
        for row in parsed:
            if len(row) != cols:
                raise ValueError(f'ragged matrix: expected rows of length {cols}, got {len(row)}')
        return cls(rows=len(parsed), cols=cols, entries=parsed)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def to_domain_matrix(self):
        return DomainMatrix([list(row) for row in self.entries], self.shape, QQ)

    def columns(self, indices):
        """Submatrix on the given 0-based column indices, in that order."""
        indices = list(indices)
        entries = tuple(tuple(row[j] for j in indices) for row in self.entries)
        return ExactMatrix(self.rows, len(indices), entries)

    def rank(self):
        return rank(self)

    def as_strings(self):
        return [[_format_entry(x) for x in row] for row in self.entries]


def _format_entry(value):
    fraction = Fraction(int(value.numerator), int(value.denominator))
    return str(fraction)


def exact_matrix(rows, cols=None):
    """Parse integers, 'p/q' strings or Fractions into an ExactMatrix."""
    return ExactMatrix.from_rows(rows, cols)


def rank(matrix):
    """Rank over QQ; sympy eliminates fraction-free over the cleared integers."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return matrix.to_domain_matrix().rank()


def vandermonde(m, n):
    """A = (s^r) with rows s = 1..m-n and columns r = 1..m."""
    if not 1 <= n <= m:
        raise ValueError(f'vandermonde needs 1 <= n <= m, got m={m}, n={n}')
    rows = [[s ** r for r in range(1, m + 1)] for s in range(1, m - n + 1)]
    return ExactMatrix.from_rows(rows, cols=m)


def complement_columns(m, face):
    return [j for j in range(m) if j + 1 not in face]


def submatrix_rank(matrix, face):
    """rank(A_α)."""
    return rank(matrix.columns(complement_columns(matrix.cols, face)))


def kernel_dimension(matrix, face):
    """dim ker A_α = (m - |α|) - rank(A_α)."""
    return (matrix.cols - len(face)) - submatrix_rank(matrix, face)


@dataclass(frozen=True)
class Admissibility:
    admissible: bool
    witness: Optional[FaceSet] = None

    def __bool__(self):
        return self.admissible


def is_admissible(complex_, matrix, all_faces=False):
    """
    Check rank(A_α) = m - n for every face α.

    Removing columns can only lower the rank, so the maximal faces decide;
    `all_faces=True` walks every face instead. The first failing face is
    returned as the witness.
    """
    m, n = complex_.m, complex_.n
    if matrix.cols != m or matrix.rows != max(m - n, 0):
        raise ValueError(f'matrix has shape {matrix.rows}x{matrix.cols}, expected {max(m - n, 0)}x{m}')
    if m - n <= 0:
        return Admissibility(True)
    faces = complex_.faces() if all_faces else complex_.maximal_faces
    for face in faces:
        if submatrix_rank(matrix, face) != m - n:
            logger.debug(f'[ADMISSIBLE] rank deficit on face {face!r}')
            return Admissibility(False, face)
    return Admissibility(True)
