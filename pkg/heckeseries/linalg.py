"""Exact linear algebra over the rationals.

Dense matrices are numpy arrays with ``dtype=object`` holding ``Fraction`` or
``int`` entries, so every product stays exact. Elimination is fraction-free:
rows are scaled to primitive integer vectors and combined by
cross-multiplication, never by division.
"""

from __future__ import annotations

import bisect
import logging
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]
SparseVector = Dict[int, int]


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=object)


def zeros(rows: int, cols: Optional[int] = None) -> np.ndarray:
    return np.zeros((rows, rows if cols is None else cols), dtype=object)


def to_matrix(rows: Sequence[Sequence[Rational]]) -> np.ndarray:
    """Build an object-dtype matrix from nested sequences of rationals."""
    out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            out[i, j] = Fraction(value)
    return out


def is_zero(matrix: np.ndarray) -> bool:
    return all(x == 0 for x in matrix.flat)


def matrices_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def primitive(vec: Mapping[int, Rational]) -> SparseVector:
    """Scale a sparse rational vector to a primitive integer vector.

    Zero entries are dropped; the direction (and sign) of the vector is kept.
    """
    items = [(k, Fraction(v)) for k, v in vec.items() if v != 0]
    if not items:
        return {}
    den = reduce(lcm, (v.denominator for _, v in items), 1)
    ints = {k: int(v * den) for k, v in items}
    g = reduce(gcd, ints.values(), 0)
    return {k: v // g for k, v in ints.items()}


def _combine(
    piv: int,
    vec: Dict[Hashable, int],
    lead: int,
    row: Mapping[Hashable, int],
) -> Dict[Hashable, int]:
    out = {k: piv * v for k, v in vec.items()}
    for k, v in row.items():
        value = out.get(k, 0) - lead * v
        if value:
            out[k] = value
        else:
            out.pop(k, None)
    return out


class FractionFreeReducer:
    """Incremental fraction-free row reduction of sparse integer vectors.

    Every stored row has its pivot at its smallest column, so a single pass
    over the pivots in increasing order fully reduces a new vector. Each
    stored row also remembers the combination of inserted vectors it came
    from, which is how linear relations (kernel vectors) are recovered.
    """

    def __init__(self) -> None:
        self._order: List[int] = []
        self._rows: Dict[int, Tuple[SparseVector, Dict[Hashable, int]]] = {}

    @property
    def rank(self) -> int:
        return len(self._order)

    def rows(self) -> List[SparseVector]:
        return [self._rows[p][0] for p in self._order]

    def reduce(
        self,
        vec: Mapping[int, Rational],
        tag: Hashable = None,
    ) -> Tuple[SparseVector, Dict[Hashable, int]]:
        items = {k: Fraction(v) for k, v in vec.items() if v != 0}
        den = reduce(lcm, (v.denominator for v in items.values()), 1)
        current: Dict[Hashable, int] = {k: int(v * den) for k, v in items.items()}
        combo: Dict[Hashable, int] = {tag: den} if tag is not None and current else {}
        current, combo = _divide_content(current, combo)
        for p in self._order:
            if p not in current:
                continue
            row, row_combo = self._rows[p]
            piv, lead = row[p], current[p]
            current = _combine(piv, current, lead, row)
            combo = _combine(piv, combo, lead, row_combo)
            current, combo = _divide_content(current, combo)
        return current, combo

    def add(self, vec: Mapping[int, Rational], tag: Hashable = None) -> Optional[Dict[Hashable, int]]:
        """Insert a vector; return the linear relation it completes, if any.

        The returned mapping sends tags to integer coefficients of a
        vanishing combination of inserted vectors. ``None`` means the vector
        was independent and became a new pivot row.
        """
        current, combo = self.reduce(vec, tag)
        if not current:
            return combo
        pivot = min(current)
        bisect.insort(self._order, pivot)
        self._rows[pivot] = (current, combo)
        return None


def _divide_content(
    vec: Dict[Hashable, int],
    combo: Dict[Hashable, int],
) -> Tuple[Dict[Hashable, int], Dict[Hashable, int]]:
    g = reduce(gcd, list(vec.values()) + list(combo.values()), 0)
    if g > 1:
        vec = {k: v // g for k, v in vec.items()}
        combo = {k: v // g for k, v in combo.items()}
    return vec, combo


def _rows_of(matrix: Union[np.ndarray, Sequence[Sequence[Rational]]]) -> Iterable[Dict[int, Rational]]:
    for row in matrix:
        yield {j: v for j, v in enumerate(row) if v != 0}


def rank(matrix: Union[np.ndarray, Sequence[Sequence[Rational]]]) -> int:
    reducer = FractionFreeReducer()
    for row in _rows_of(matrix):
        if row:
            reducer.add(row)
    return reducer.rank


def kernel_relations(vectors: Sequence[Mapping[int, Rational]]) -> List[Dict[int, Fraction]]:
    """Basis of the linear relations among ``vectors``.

    Each relation maps positions in ``vectors`` to coefficients whose
    combination is the zero vector.
    """
    reducer = FractionFreeReducer()
    relations = []
    for idx, vec in enumerate(vectors):
        if not any(v != 0 for v in vec.values()):
            relations.append({idx: Fraction(1)})
            continue
        relation = reducer.add(vec, tag=idx)
        if relation:
            relations.append({k: Fraction(v) for k, v in relation.items() if v})
    return relations


def determinant(matrix: Union[np.ndarray, Sequence[Sequence[Rational]]]) -> Fraction:
    """Bareiss determinant after clearing each row's denominators."""
    rows = [[Fraction(v) for v in row] for row in matrix]
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in rows):
        raise ValueError("determinant of a non-square matrix")
    scale = Fraction(1)
    m: List[List[int]] = []
    for row in rows:
        den = reduce(lcm, (v.denominator for v in row), 1)
        scale *= den
        m.append([int(v * den) for v in row])

    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            lead = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (piv * row_i[j] - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return Fraction(sign * m[n - 1][n - 1]) / scale


def solve(
    matrix: Sequence[Sequence[Rational]],
    rhs: Sequence[Rational],
) -> Optional[List[Fraction]]:
    """One exact solution of ``matrix @ x = rhs`` (free variables set to 0).

    Returns ``None`` when the system is inconsistent.
    """
    ncols = len(matrix[0]) if matrix else 0
    reducer = FractionFreeReducer()
    for row, b in zip(matrix, rhs):
        augmented = {j: v for j, v in enumerate(row) if v != 0}
        if b != 0:
            augmented[ncols] = b
        if augmented:
            reducer.add(augmented)

    solution = [Fraction(0)] * ncols
    for row in sorted(reducer.rows(), key=min, reverse=True):
        pivot = min(row)
        if pivot == ncols:
            return None
        acc = Fraction(row.get(ncols, 0))
        for j, v in row.items():
            if pivot < j < ncols:
                acc -= v * solution[j]
        solution[pivot] = acc / row[pivot]
    return solution


__all__ = [
    "identity",
    "zeros",
    "to_matrix",
    "is_zero",
    "matrices_equal",
    "primitive",
    "FractionFreeReducer",
    "rank",
    "kernel_relations",
    "determinant",
    "solve",
]
