"""Partitions, biranks and the splitting decomposition ((n^m)+α)∪β.

A partition indexes a simple comodule I_λ. Parts beyond the length of a
partition read as 0 everywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from heckeseries.errors import InvalidInputError

EMPTY_TOKEN = "-"


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing sequence of positive integers.

    Trailing zeros are stripped on construction. Any increase between
    adjacent parts is rejected instead of being sorted away.
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise InvalidInputError(f"negative part in partition {parts}")
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise InvalidInputError(f"parts of {parts} are not weakly decreasing")
        if any(p == 0 for p in parts):
            raise InvalidInputError(f"zero part inside partition {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read the comma-separated encoding; ``-`` is the empty partition."""
        text = text.strip()
        if text in (EMPTY_TOKEN, ""):
            return cls(())
        try:
            parts = tuple(int(token) for token in text.split(","))
        except ValueError as exc:
            raise InvalidInputError(f"malformed partition {text!r}") from exc
        if any(p <= 0 for p in parts):
            raise InvalidInputError(f"partition {text!r} must have positive parts")
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else EMPTY_TOKEN

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, i: int) -> int:
        """λ_i with 1-based indexing; 0 beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= p for i, p in enumerate(other.parts, start=1))

    def to_json(self) -> List[int]:
        return list(self.parts)


@dataclass(frozen=True)
class Birank:
    """Degrees (m, n) of numerator and denominator of P_Λ."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise InvalidInputError(f"birank ({self.m},{self.n}) must be nonnegative")

    @classmethod
    def parse(cls, text: str) -> "Birank":
        try:
            m, n = (int(token) for token in text.split(","))
        except ValueError as exc:
            raise InvalidInputError(f"malformed birank {text!r}, expected 'm,n'") from exc
        return cls(m, n)

    def __str__(self) -> str:
        return f"{self.m},{self.n}"


@dataclass(frozen=True)
class SplitDecomposition:
    alpha: Partition = field(default_factory=Partition)
    beta: Partition = field(default_factory=Partition)


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for p in lam.parts if p >= i) for i in range(1, lam.parts[0] + 1)))


def rectangle(m: int, n: int) -> Partition:
    """The partition (n^m)."""
    return Partition((n,) * m if n > 0 else ())


def in_gamma(lam: Partition, b: Birank) -> bool:
    """λ ∈ Γ_{m,n}, i.e. I_λ is nonzero."""
    return lam.part(b.m + 1) <= b.n


def is_splitting(lam: Partition, b: Birank) -> bool:
    """I_λ is projective and injective iff λ_m ≥ n (vacuous for m = 0)."""
    if not in_gamma(lam, b):
        raise InvalidInputError(f"{lam} is not in Γ_{{{b.m},{b.n}}}")
    if b.m == 0:
        return True
    return lam.part(b.m) >= b.n


def is_cosemisimple(b: Birank) -> bool:
    """H is cosemisimple exactly when one of the birank degrees vanishes."""
    return b.m == 0 or b.n == 0


def split_decompose(lam: Partition, b: Birank) -> SplitDecomposition:
    if not is_splitting(lam, b):
        raise InvalidInputError(f"{lam} is not splitting for birank ({b})")
    alpha = Partition(tuple(lam.part(i) - b.n for i in range(1, b.m + 1)))
    beta = Partition(lam.parts[b.m:])
    return SplitDecomposition(alpha=alpha, beta=beta)


def recompose(split: SplitDecomposition, b: Birank) -> Partition:
    top = tuple(b.n + split.alpha.part(i) for i in range(1, b.m + 1))
    return Partition(top + split.beta.parts)


def eq4_partition_list(b: Birank, k: int) -> List[Partition]:
    """Summands of I_{((n+1)^m, n^{k+1})} ⊗ I_{(1^k)}^*, for l = 0 … min(k, m)."""
    if b.m == 0 and b.n == 0:
        raise InvalidInputError("birank (0,0) has no dual decomposition")
    if k < 0:
        raise InvalidInputError(f"k must be nonnegative, got {k}")
    n = b.n
    out = []
    for l in range(min(k, b.m) + 1):
        if n == 0 and k - l > 0:
            raise InvalidInputError(f"birank ({b}) with k={k} produces negative parts")
        parts = (n + 1,) * (b.m - l) + (n,) * (2 * l + 1) + (n - 1,) * (k - l)
        out.append(Partition(parts))
    return out


@lru_cache(maxsize=128)
def _partitions(total: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if total == 0:
        return ((),)
    out = []
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(weight: int, max_length: Optional[int] = None) -> List[Partition]:
    """All partitions of ``weight``, descending lexicographic."""
    return [
        Partition(p)
        for p in _partitions(weight, weight)
        if max_length is None or len(p) <= max_length
    ]


def partitions_up_to(weight: int) -> List[Partition]:
    out: List[Partition] = []
    for w in range(weight + 1):
        out.extend(partitions_of(w))
    return out


def sort_descending(partitions: Sequence[Partition]) -> List[Partition]:
    return sorted(partitions, key=lambda p: p.parts, reverse=True)


__all__ = [
    "Partition",
    "Birank",
    "SplitDecomposition",
    "conjugate",
    "rectangle",
    "in_gamma",
    "is_splitting",
    "is_cosemisimple",
    "split_decompose",
    "recompose",
    "eq4_partition_list",
    "partitions_of",
    "partitions_up_to",
    "sort_descending",
]
