"""Schur functions and Littlewood–Richardson coefficients.

Two independent routes to c^γ_{λμ} live here: backtracking over skew LR
tableaux (the one the library uses) and a monomial-expansion oracle built
from semistandard tableaux, which the tests and the acceptance harness use
to cross-check the first.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from heckeseries import linalg
from heckeseries.errors import InvalidInputError
from heckeseries.partitions import (
    Birank,
    Partition,
    in_gamma,
    is_splitting,
    partitions_of,
    rectangle,
    split_decompose,
)
from heckeseries.series import TruncatedSeries, format_rational, series_mul

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]
Monomial = Tuple[int, ...]


# ---------------------------------------------------------------------------
# Littlewood–Richardson
# ---------------------------------------------------------------------------


@lru_cache(maxsize=65536)
def lr_coeff(lam: Partition, mu: Partition, gamma: Partition) -> int:
    """Number of LR skew tableaux of shape γ/λ and content μ."""
    if not gamma.contains(lam) or gamma.weight != lam.weight + mu.weight:
        return 0
    if mu.weight == 0:
        return 1

    # reading order: rows top to bottom, each row right to left
    cells = [
        (r, c)
        for r in range(1, gamma.length + 1)
        for c in range(gamma.part(r), lam.part(r), -1)
    ]
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * (mu.length + 1)

    def extend(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        upper = filling.get((r, c + 1), mu.length)
        lower = filling.get((r - 1, c), 0) + 1 if c > lam.part(r - 1) else 1
        total = 0
        for v in range(lower, upper + 1):
            if counts[v] >= mu.part(v):
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            filling[(r, c)] = v
            counts[v] += 1
            total += extend(idx + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return total

    return extend(0)


def _containing(lam: Partition, added: int, max_step: int, max_length: int) -> Iterator[Partition]:
    """Partitions γ ⊇ λ with |γ/λ| = added and γ_i − λ_i ≤ max_step."""

    def build(i: int, prefix: Tuple[int, ...], left: int) -> Iterator[Tuple[int, ...]]:
        if left == 0:
            yield prefix + tuple(lam.parts[i - 1:])
            return
        if i > max_length:
            return
        base = lam.part(i)
        cap = prefix[-1] if prefix else base + left
        for value in range(min(cap, base + max_step, base + left), base - 1, -1):
            yield from build(i + 1, prefix + (value,), left - (value - base))

    for parts in build(1, (), added):
        yield Partition(parts)


@dataclass(frozen=True)
class SchurExpansion:
    """⊕ I_γ^{c_γ}, kept sorted descending-lex with positive multiplicities."""

    terms: Tuple[Tuple[Partition, int], ...] = ()

    def __post_init__(self) -> None:
        for gamma, mult in self.terms:
            if mult <= 0:
                raise InvalidInputError(f"multiplicity of {gamma} must be positive, got {mult}")
        if len({gamma for gamma, _ in self.terms}) != len(self.terms):
            raise InvalidInputError("duplicate partitions in expansion")
        ordered = tuple(sorted(self.terms, key=lambda item: item[0].parts, reverse=True))
        object.__setattr__(self, "terms", ordered)

    @classmethod
    def from_mapping(cls, mapping: Mapping[Partition, int]) -> "SchurExpansion":
        return cls(tuple((gamma, mult) for gamma, mult in mapping.items() if mult))

    def as_dict(self) -> Dict[Partition, int]:
        return dict(self.terms)

    def partitions(self) -> List[Partition]:
        return [gamma for gamma, _ in self.terms]

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return "  ".join(f"{gamma}:{mult}" for gamma, mult in self.terms)

    def to_json(self) -> List[dict]:
        return [{"partition": gamma.to_json(), "multiplicity": mult} for gamma, mult in self.terms]


def tensor_decompose(lam: Partition, mu: Partition, b: Optional[Birank] = None) -> SchurExpansion:
    """I_λ ⊗ I_μ as a sum of simples, dropping the zero ones when a birank is given."""
    if mu.weight == 0:
        found = {lam: 1}
    else:
        found = {}
        for gamma in _containing(lam, mu.weight, mu.part(1), lam.length + mu.length):
            c = lr_coeff(lam, mu, gamma)
            if c:
                found[gamma] = c
    if b is not None:
        found = {gamma: c for gamma, c in found.items() if in_gamma(gamma, b)}
    logger.debug("%s ⊗ %s → %d terms", lam, mu, len(found))
    return SchurExpansion.from_mapping(found)


# ---------------------------------------------------------------------------
# Semistandard tableaux oracle
# ---------------------------------------------------------------------------


@lru_cache(maxsize=4096)
def _ssyt_monomials(lam: Partition, nvars: int) -> Tuple[Tuple[Monomial, int], ...]:
    # branching rule: remove a horizontal strip filled with the largest letter
    if lam.length > nvars:
        return ()
    if nvars == 0:
        return (((), 1),)
    out: Dict[Monomial, int] = defaultdict(int)
    for inner in _horizontal_strips(lam):
        strip = lam.weight - inner.weight
        for mono, count in _ssyt_monomials(inner, nvars - 1):
            out[mono + (strip,)] += count
    return tuple(out.items())


def _horizontal_strips(lam: Partition) -> Iterator[Partition]:
    """All μ with λ_{i+1} ≤ μ_i ≤ λ_i."""

    def build(i: int, prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if i > lam.length:
            yield prefix
            return
        for value in range(lam.part(i + 1), lam.part(i) + 1):
            yield from build(i + 1, prefix + (value,))

    for parts in build(1, ()):
        yield Partition(parts)


def schur_monomials(lam: Partition, nvars: int) -> Dict[Monomial, int]:
    """Monomial expansion of s_λ(x_1 … x_nvars), one entry per SSYT content."""
    return dict(_ssyt_monomials(lam, nvars))


def kostka(lam: Partition, content: Sequence[int]) -> int:
    """Number of SSYT of shape λ with the given content."""
    content = tuple(content)
    return schur_monomials(lam, len(content)).get(content, 0)


def lr_oracle(lam: Partition, mu: Partition) -> SchurExpansion:
    """s_λ·s_μ expanded in Schur functions by peeling monomial coefficients.

    Only exponent vectors that are partitions are needed: the product is
    symmetric, and Kostka numbers are unitriangular in dominance order, so
    walking the partitions of |λ|+|μ| in decreasing lex order recovers each
    Schur coefficient in turn.
    """
    nvars = lam.length + mu.length
    left, right = schur_monomials(lam, nvars), schur_monomials(mu, nvars)

    def padded(p: Partition) -> Monomial:
        return p.parts + (0,) * (nvars - p.length)

    found: Dict[Partition, int] = {}
    for gamma in partitions_of(lam.weight + mu.weight, nvars):
        target = padded(gamma)
        coeff = 0
        for mono, count in left.items():
            rest = tuple(t - a for t, a in zip(target, mono))
            if min(rest, default=0) >= 0:
                coeff += count * right.get(rest, 0)
        coeff -= sum(c * kostka(nu, target) for nu, c in found.items())
        if coeff < 0:
            raise AssertionError(f"negative Schur coefficient at {gamma}")
        if coeff:
            found[gamma] = coeff
    return SchurExpansion.from_mapping(found)


# ---------------------------------------------------------------------------
# Elementary expansion and evaluation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ElementaryPolynomial:
    """Integer polynomial in e_1, e_2, …; each key lists e-indices in descending order."""

    terms: Tuple[Tuple[Tuple[int, ...], int], ...] = ()

    def __post_init__(self) -> None:
        merged: Dict[Tuple[int, ...], int] = defaultdict(int)
        for key, coeff in self.terms:
            if any(i <= 0 for i in key):
                raise InvalidInputError(f"e-indices must be positive, got {key}")
            merged[tuple(sorted(key, reverse=True))] += coeff
        ordered = tuple(
            sorted(((k, c) for k, c in merged.items() if c), key=lambda item: (-len(item[0]), item[0]))
        )
        object.__setattr__(self, "terms", ordered)

    @classmethod
    def from_mapping(cls, mapping: Mapping[Tuple[int, ...], int]) -> "ElementaryPolynomial":
        return cls(tuple(mapping.items()))

    @property
    def max_index(self) -> int:
        return max((max(key, default=0) for key, _ in self.terms), default=0)

    def evaluate(self, values: Sequence[Rational]) -> Fraction:
        """Substitute e_k := values[k]."""
        total = Fraction(0)
        for key, coeff in self.terms:
            term = Fraction(coeff)
            for i in key:
                term *= values[i]
            total += term
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for key, coeff in self.terms:
            powers: Dict[int, int] = defaultdict(int)
            for i in key:
                powers[i] += 1
            mono = "*".join(f"e{i}" if p == 1 else f"e{i}^{p}" for i, p in sorted(powers.items()))
            mag = abs(coeff)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


@lru_cache(maxsize=1024)
def schur_to_elementary(lam: Partition) -> ElementaryPolynomial:
    """Dual Jacobi–Trudi: s_λ = det[e_{λ'_i − i + j}]."""
    conj = lam.conjugate().parts
    k = len(conj)
    # row-by-row Laplace expansion keyed by the set of used columns
    states: Dict[int, Dict[Tuple[int, ...], int]] = {0: {(): 1}}
    for i in range(k):
        nxt: Dict[int, Dict[Tuple[int, ...], int]] = defaultdict(lambda: defaultdict(int))
        for used, poly in states.items():
            for j in range(k):
                if used >> j & 1:
                    continue
                index = conj[i] - i + j
                if index < 0:
                    continue
                sign = -1 if bin(used >> (j + 1)).count("1") % 2 else 1
                for key, coeff in poly.items():
                    new_key = tuple(sorted(key + (index,), reverse=True)) if index else key
                    nxt[used | 1 << j][new_key] += sign * coeff
        states = {used: dict(poly) for used, poly in nxt.items()}
    return ElementaryPolynomial.from_mapping(states.get((1 << k) - 1, {}))


def complete_homogeneous(values: Sequence[Rational], order: int) -> List[Fraction]:
    """h_0 … h_order of the values, from ∏(1 − v t)^{-1}."""
    acc = TruncatedSeries((Fraction(1),) + (Fraction(0),) * order)
    for v in values:
        v = Fraction(v)
        acc = series_mul(acc, TruncatedSeries(tuple(v ** i for i in range(order + 1))))
    return list(acc.coefficients)


def schur_eval(lam: Partition, values: Sequence[Rational]) -> Fraction:
    """s_λ(v_1 … v_r) via the Jacobi–Trudi determinant det[h_{λ_i − i + j}]."""
    if lam.length > len(values):
        return Fraction(0)
    if lam.length == 0:
        return Fraction(1)
    size = lam.length
    h = complete_homogeneous(values, lam.part(1) + size)

    def entry(i: int, j: int) -> Fraction:
        index = lam.part(i + 1) - i + j
        return h[index] if index >= 0 else Fraction(0)

    return linalg.determinant([[entry(i, j) for j in range(size)] for i in range(size)])


def _as_exact(value: Fraction) -> Union[int, Fraction]:
    return value.numerator if value.denominator == 1 else value


def dim_simple(lam: Partition, lambda_dims: Sequence[Rational]) -> Union[int, Fraction]:
    """dim I_λ from the dims of Λ, substituting e_n := dim Λ_n.

    The result is not checked for sign: inconsistent input may give 0 or a
    negative value.
    """
    poly = schur_to_elementary(lam)
    if len(lambda_dims) <= poly.max_index:
        raise InvalidInputError(
            f"dim of I_{lam} needs dim Λ_n up to n={poly.max_index}, got {len(lambda_dims)} values"
        )
    return _as_exact(poly.evaluate(lambda_dims))


def _check_positive(name: str, values: Sequence[Rational]) -> List[Fraction]:
    out = [Fraction(v) for v in values]
    if any(v <= 0 for v in out):
        raise InvalidInputError(f"{name} must be positive rationals, got {[format_rational(v) for v in out]}")
    return out


def dim_splitting(lam: Partition, x: Sequence[Rational], y: Sequence[Rational]) -> Union[int, Fraction]:
    """∏(x_i + y_j) · s_α(x) · s_β'(y) for λ = ((n^m)+α) ∪ β."""
    x = _check_positive("x", x)
    y = _check_positive("y", y)
    b = Birank(len(x), len(y))
    if not is_splitting(lam, b):
        raise InvalidInputError(f"{lam} is not splitting for birank ({b})")
    split = split_decompose(lam, b)
    value = Fraction(1)
    for xi in x:
        for yj in y:
            value *= xi + yj
    value *= schur_eval(split.alpha, x) * schur_eval(split.beta.conjugate(), y)
    return _as_exact(value)


def hook_schur_identity_check(k: int, n: int, y: Sequence[Rational]) -> bool:
    """s_{(k^{n−1})}(y) = s_{(k)}(y⁻¹)·(∏y_j)^k.

    (k^{n−1}) is the complement of (k) in the n×k box.
    """
    if len(y) != n:
        raise InvalidInputError(f"expected {n} values, got {len(y)}")
    y = [Fraction(v) for v in y]
    if any(v == 0 for v in y):
        raise InvalidInputError("values must be nonzero")
    product = Fraction(1)
    for v in y:
        product *= v
    lhs = schur_eval(rectangle(n - 1, k), y)
    rhs = schur_eval(Partition((k,)), [1 / v for v in y]) * product ** k
    return lhs == rhs


__all__ = [
    "lr_coeff",
    "tensor_decompose",
    "SchurExpansion",
    "schur_monomials",
    "kostka",
    "lr_oracle",
    "ElementaryPolynomial",
    "schur_to_elementary",
    "complete_homogeneous",
    "schur_eval",
    "dim_simple",
    "dim_splitting",
    "hook_schur_identity_check",
]
