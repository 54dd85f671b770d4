"""GF(2) linear algebra on numpy uint8 arrays."""

from dataclasses import dataclass

import numpy as np


def to_gf2(matrix):
    return np.array(matrix, dtype=np.uint8) % 2


@dataclass(frozen=True)
class RowReduceResult:
    matrix: np.ndarray
    rank: int
    pivots: tuple


def gf2_row_reduce(matrix):
    """Reduced row echelon form over GF(2)."""
    mat = to_gf2(matrix).copy()
    if mat.ndim != 2:
        raise ValueError('expected a two-dimensional array')
    rows, cols = mat.shape
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        candidates = np.nonzero(mat[row:, col])[0]
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        for r in range(rows):
            if r != row and mat[r, col] == 1:
                mat[r, :] ^= mat[row, :]
        pivots.append(col)
        row += 1
    return RowReduceResult(matrix=mat, rank=len(pivots), pivots=tuple(pivots))


def gf2_rank(matrix):
    return gf2_row_reduce(matrix).rank


@dataclass(frozen=True)
class AffineSolution:
    """The solution set particular + span(basis) of a consistent system."""

    particular: np.ndarray
    basis: np.ndarray
    rank: int

    @property
    def nullity(self):
        return self.basis.shape[0]

    @property
    def count(self):
        return 1 << self.nullity


def gf2_solve(matrix, rhs):
    """Solve matrix · x = rhs over GF(2); None when inconsistent."""
    mat = to_gf2(matrix)
    vec = to_gf2(rhs).reshape(-1, 1)
    rows, cols = mat.shape
    reduced = gf2_row_reduce(np.concatenate([mat, vec], axis=1))
    if cols in reduced.pivots:
        return None
    echelon = reduced.matrix
    particular = np.zeros(cols, dtype=np.uint8)
    for row, col in enumerate(reduced.pivots):
        particular[col] = echelon[row, cols]
    pivots = set(reduced.pivots)
    basis = []
    for free in range(cols):
        if free in pivots:
            continue
        vec_ = np.zeros(cols, dtype=np.uint8)
        vec_[free] = 1
        for row, col in enumerate(reduced.pivots):
            if echelon[row, free] == 1:
                vec_[col] = 1
        basis.append(vec_)
    basis_array = np.vstack(basis) if basis else np.zeros((0, cols), dtype=np.uint8)
    return AffineSolution(particular=particular, basis=basis_array, rank=reduced.rank)


def _as_int(vector, order):
    value = 0
    for col in order:
        value = (value << 1) | int(vector[col])
    return value


def least_solution(solution, order):
    """
    The solution that is smallest as a binary number.

    `order` lists the columns from most to least significant bit.
    """
    width = len(order)
    current = _as_int(solution.particular, order)
    basis = []
    for vector in solution.basis:
        value = _as_int(vector, order)
        for other in basis:
            value = min(value, value ^ other)
        if value:
            basis.append(value)
            basis.sort(reverse=True)
    for value in basis:
        current = min(current, current ^ value)
    result = np.zeros(len(solution.particular), dtype=np.uint8)
    for position, col in enumerate(order):
        result[col] = (current >> (width - 1 - position)) & 1
    return result
