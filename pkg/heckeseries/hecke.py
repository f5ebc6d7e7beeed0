"""The Hecke algebra H_{q,n} on the T_w basis and its action on V^⊗n.

Permutations are 0-based one-line tuples w = (w(0), …, w(n−1)). The
generator s_i (1 ≤ i < n) acts on the left by swapping the values i−1 and i,
so T_i·T_w = T_{s_i w} whenever that raises the length.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import TYPE_CHECKING, Dict, List, Mapping, Tuple, Union

import numpy as np

from heckeseries import config
from heckeseries.errors import CapacityError, InvalidInputError

if TYPE_CHECKING:
    from heckeseries.symmetry import HeckeSymmetry

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]
Permutation = Tuple[int, ...]


@dataclass(frozen=True)
class QContext:
    """A concrete rational Hecke parameter q ∉ {0, −1}."""

    q: Fraction

    def __post_init__(self) -> None:
        q = Fraction(self.q)
        if q in (0, -1):
            raise InvalidInputError(f"Hecke parameter q={q} is excluded (q must avoid 0 and -1)")
        object.__setattr__(self, "q", q)


def identity_perm(n: int) -> Permutation:
    return tuple(range(n))


def length(w: Permutation) -> int:
    """Number of inversions."""
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def left_mul_generator(i: int, w: Permutation) -> Permutation:
    """s_i·w, swapping the values i−1 and i."""
    return tuple(i if v == i - 1 else i - 1 if v == i else v for v in w)


def raises_length(i: int, w: Permutation) -> bool:
    """l(s_i w) > l(w), i.e. value i−1 sits left of value i in w."""
    return w.index(i - 1) < w.index(i)


@lru_cache(maxsize=8192)
def reduced_word(w: Permutation) -> Tuple[int, ...]:
    """Canonical reduced word (i_1, …, i_l) with w = s_{i_1}⋯s_{i_l}.

    Peels the smallest left descent at every step.
    """
    word: List[int] = []
    current = w
    while True:
        descent = next((i for i in range(1, len(current)) if not raises_length(i, current)), None)
        if descent is None:
            return tuple(word)
        word.append(descent)
        current = left_mul_generator(descent, current)


def q_int(n: int, ctx: QContext) -> Fraction:
    """[n]_q = 1 + q + … + q^{n−1}."""
    if n < 0:
        raise InvalidInputError(f"q-integer needs n ≥ 0, got {n}")
    return sum((ctx.q ** i for i in range(n)), Fraction(0))


def q_factorial(n: int, ctx: QContext) -> Fraction:
    out = Fraction(1)
    for k in range(1, n + 1):
        out *= q_int(k, ctx)
    return out


@dataclass(frozen=True)
class HeckeElement:
    """Σ c_w T_w in H_{q,n}; zero coefficients are never stored."""

    n: int
    ctx: QContext
    terms: Tuple[Tuple[Permutation, Fraction], ...] = field(default=())

    def __post_init__(self) -> None:
        merged: Dict[Permutation, Fraction] = defaultdict(Fraction)
        for w, c in self.terms:
            w = tuple(w)
            if sorted(w) != list(range(self.n)):
                raise InvalidInputError(f"{w} is not a permutation of {self.n} letters")
            merged[w] += Fraction(c)
        object.__setattr__(self, "terms", tuple(sorted((w, c) for w, c in merged.items() if c)))

    @classmethod
    def from_mapping(cls, n: int, ctx: QContext, mapping: Mapping[Permutation, Rational]) -> "HeckeElement":
        return cls(n, ctx, tuple(mapping.items()))

    @classmethod
    def basis(cls, w: Permutation, ctx: QContext) -> "HeckeElement":
        return cls(len(w), ctx, ((tuple(w), Fraction(1)),))

    @classmethod
    def one(cls, n: int, ctx: QContext) -> "HeckeElement":
        return cls.basis(identity_perm(n), ctx)

    @classmethod
    def generator(cls, i: int, n: int, ctx: QContext) -> "HeckeElement":
        if not 1 <= i < n:
            raise InvalidInputError(f"T_{i} does not exist in H_{n}")
        return cls.basis(left_mul_generator(i, identity_perm(n)), ctx)

    def as_dict(self) -> Dict[Permutation, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        _check_compatible(self, other)
        return HeckeElement(self.n, self.ctx, self.terms + other.terms)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(-1)

    def scale(self, c: Rational) -> "HeckeElement":
        return HeckeElement(self.n, self.ctx, tuple((w, v * c) for w, v in self.terms))

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        return hecke_mul(self, other, self.ctx)


def _check_compatible(a: HeckeElement, b: HeckeElement) -> None:
    if a.n != b.n:
        raise InvalidInputError(f"strand counts differ: {a.n} vs {b.n}")
    if a.ctx != b.ctx:
        raise InvalidInputError(f"Hecke parameters differ: {a.ctx.q} vs {b.ctx.q}")


def _generator_times(i: int, element: Dict[Permutation, Fraction], q: Fraction) -> Dict[Permutation, Fraction]:
    out: Dict[Permutation, Fraction] = defaultdict(Fraction)
    for w, c in element.items():
        sw = left_mul_generator(i, w)
        if raises_length(i, w):
            out[sw] += c
        else:
            out[w] += (q - 1) * c
            out[sw] += q * c
    return out


def hecke_mul(a: HeckeElement, b: HeckeElement, ctx: QContext) -> HeckeElement:
    """Product in H_{q,n}: each T_u of ``a`` is applied to ``b`` generator by generator."""
    _check_compatible(a, b)
    if a.ctx != ctx:
        raise InvalidInputError(f"Hecke parameters differ: {a.ctx.q} vs {ctx.q}")
    total: Dict[Permutation, Fraction] = defaultdict(Fraction)
    right = b.as_dict()
    for u, coeff in a.terms:
        current = right
        for i in reversed(reduced_word(u)):
            current = _generator_times(i, current, ctx.q)
        for w, c in current.items():
            total[w] += coeff * c
    return HeckeElement.from_mapping(a.n, ctx, total)


def symmetrizer_x(n: int, ctx: QContext) -> HeckeElement:
    """x_n = (1/[n]_q!)·Σ_w T_w, the idempotent with x_n·T_i = q·x_n."""
    if n < 1:
        raise InvalidInputError(f"x_n needs n ≥ 1, got {n}")
    norm = q_factorial(n, ctx)
    if norm == 0:
        raise InvalidInputError(f"[{n}]_q! vanishes at q={ctx.q}")
    return HeckeElement(n, ctx, tuple((w, 1 / norm) for w in permutations(range(n))))


def antisymmetrizer_y(n: int, ctx: QContext) -> HeckeElement:
    """y_n = (1/[n]_{1/q}!)·Σ_w (−q)^{−l(w)} T_w, the idempotent with y_n·T_i = −y_n."""
    if n < 1:
        raise InvalidInputError(f"y_n needs n ≥ 1, got {n}")
    norm = q_factorial(n, QContext(1 / ctx.q))
    if norm == 0:
        raise InvalidInputError(f"[{n}]_{{1/q}}! vanishes at q={ctx.q}")
    return HeckeElement(
        n,
        ctx,
        tuple((w, (-ctx.q) ** (-length(w)) / norm) for w in permutations(range(n))),
    )


SparseColumns = List[List[Tuple[int, Fraction]]]


def sparse_columns(R: np.ndarray) -> SparseColumns:
    """Nonzero (row, value) pairs of each column of R."""
    return [
        [(int(row), Fraction(R[row, col])) for row in range(R.shape[0]) if R[row, col] != 0]
        for col in range(R.shape[1])
    ]


def apply_generator(
    i: int,
    vec: Mapping[int, Fraction],
    R: Union[np.ndarray, SparseColumns],
    d: int,
    n: int,
) -> Dict[int, Fraction]:
    """R_i = id^{⊗ i−1} ⊗ R ⊗ id^{⊗ n−i−1} on a sparse vector of V^⊗n.

    Basis index Σ a_p d^{n−p}, first tensor factor most significant.
    """
    columns = sparse_columns(R) if isinstance(R, np.ndarray) else R
    low = d ** (n - i - 1)
    block = d * d * low
    out: Dict[int, Fraction] = defaultdict(Fraction)
    for idx, c in vec.items():
        high, rest = divmod(idx, block)
        pair, tail = divmod(rest, low)
        for target, value in columns[pair]:
            out[high * block + target * low + tail] += c * value
    return {k: v for k, v in out.items() if v}


def act_on_tensor(h: HeckeElement, sym: "HeckeSymmetry", n: int) -> np.ndarray:
    """Matrix of ``h`` on V^⊗n under T_i ↦ R_i."""
    if n != h.n:
        raise InvalidInputError(f"element lives in H_{h.n}, asked to act on {n} strands")
    if h.ctx.q != sym.q:
        raise InvalidInputError(f"Hecke parameter {h.ctx.q} does not match the symmetry's q={sym.q}")
    size = sym.d ** n
    if size > config.TENSOR_DIM_CAP:
        raise CapacityError(f"d^n = {size} exceeds the tensor cap {config.TENSOR_DIM_CAP}")
    columns = sparse_columns(sym.R)
    out = np.zeros((size, size), dtype=object)
    for col in range(size):
        # T_w e = R_i (T_{s_i w} e) with i the first letter of the canonical word
        images: Dict[Permutation, Dict[int, Fraction]] = {identity_perm(n): {col: Fraction(1)}}

        def image(w: Permutation) -> Dict[int, Fraction]:
            if w not in images:
                i = reduced_word(w)[0]
                images[w] = apply_generator(i, image(left_mul_generator(i, w)), columns, sym.d, n)
            return images[w]

        for w, coeff in h.terms:
            for row, value in image(w).items():
                out[row, col] += coeff * value
    logger.debug("acted with %d terms on %d-dimensional V^⊗%d", len(h.terms), size, n)
    return out


__all__ = [
    "QContext",
    "Permutation",
    "identity_perm",
    "length",
    "left_mul_generator",
    "raises_length",
    "reduced_word",
    "q_int",
    "q_factorial",
    "HeckeElement",
    "hecke_mul",
    "symmetrizer_x",
    "antisymmetrizer_y",
    "sparse_columns",
    "apply_generator",
    "act_on_tensor",
]
