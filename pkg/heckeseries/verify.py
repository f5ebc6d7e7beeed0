"""Identity suite for Poincaré series of Hecke symmetries.

Every check produces an ``IdentityReport`` whose pass flag is exactly the
equality of its two recorded sides. Negative controls wrap a report that is
expected to fail, so that a suite passes only when the broken data is caught.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from heckeseries import config
from heckeseries.errors import InvalidInputError
from heckeseries.partitions import (
    Birank,
    Partition,
    eq4_partition_list,
    in_gamma,
    is_splitting,
    partitions_up_to,
    rectangle,
)
from heckeseries.series import (
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    birank,
    duality_check,
    elementary_from_roots,
    expand,
    format_rational,
    is_reciprocal,
    is_skew_reciprocal,
    rational_roots,
    roots_all_negative,
    roots_all_positive,
    series_invert,
    series_mul,
)
from heckeseries.symfunc import (
    SchurExpansion,
    dim_simple,
    dim_splitting,
    hook_schur_identity_check,
    tensor_decompose,
)
from heckeseries.symmetry import (
    DEFAULT_FIXTURES,
    HeckeSymmetry,
    parse_fixture,
    poincare_from_dims,
    series_dims,
)

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]

SUITES = ("eq4", "eq9", "thm1", "all")
DUALITY_ORDER = 8


class IdentityReport(BaseModel):
    """One checked identity; ``passed`` serializes as ``pass``."""

    model_config = ConfigDict(populate_by_name=True)

    identity: str = Field(..., description="name of the identity checked")
    params: Dict[str, Any] = Field(default_factory=dict, description="parameters the check ran with")
    lhs: Any = Field(..., description="left side as exact strings")
    rhs: Any = Field(..., description="right side as exact strings")
    passed: bool = Field(..., alias="pass", description="lhs == rhs")

    @classmethod
    def compare(cls, identity: str, params: Dict[str, Any], lhs: Any, rhs: Any) -> "IdentityReport":
        return cls(identity=identity, params=params, lhs=lhs, rhs=rhs, passed=lhs == rhs)

    def to_json(self) -> Dict[str, Any]:
        return self.model_dump(by_alias=True)

    def __str__(self) -> str:
        mark = "✓" if self.passed else "✗"
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{mark} {self.identity} ({params})"


def negative_control(report: IdentityReport) -> IdentityReport:
    """Passes exactly when the wrapped identity fails."""
    return IdentityReport.compare(
        f"{report.identity}:negative",
        {**report.params, "lhs": report.lhs, "rhs": report.rhs},
        report.passed,
        False,
    )


def _fmt(values: Sequence[Rational]) -> List[str]:
    return [format_rational(v) for v in values]


def _product(values: Sequence[Rational]) -> Fraction:
    out = Fraction(1)
    for v in values:
        out *= v
    return out


# ---------------------------------------------------------------------------
# Decompositions and dual dimensions
# ---------------------------------------------------------------------------


def _require_birank(b: Birank, k: int) -> None:
    if b.n < 1:
        raise InvalidInputError(f"birank ({b}) needs n ≥ 1 for the rectangle decomposition")
    if k < 0:
        raise InvalidInputError(f"k must be nonnegative, got {k}")


def expected_tensor_terms(b: Birank, k: int) -> SchurExpansion:
    m, n = b.m, b.n
    return SchurExpansion.from_mapping(
        {
            Partition((n + 2,) * l + (n + 1,) * (m - l) + (n,) * (k + 1) + (1,) * (k - l)): 1
            for l in range(min(k, m) + 1)
        }
    )


def verify_tensor_lr(b: Birank, k: int) -> IdentityReport:
    """I_{((n+1)^m, n^{k+1})} ⊗ I_{(1^k)} against its closed-form decomposition."""
    _require_birank(b, k)
    lam = Partition((b.n + 1,) * b.m + (b.n,) * (k + 1))
    found = tensor_decompose(lam, rectangle(k, 1), b)
    expected = expected_tensor_terms(b, k)
    return IdentityReport.compare(
        "tensor_lr",
        {"m": b.m, "n": b.n, "k": k, "terms": len(found), "expected_terms": min(k, b.m) + 1},
        str(found),
        str(expected),
    )


def poincare_of_roots(x: Sequence[Rational], y: Sequence[Rational]) -> RationalFunction:
    """∏(1 + x_i t) / ∏(1 − y_j t)."""
    return RationalFunction(Polynomial.from_roots(x), Polynomial.from_roots(y, sign=-1))


def verify_dual_dims(b: Birank, k: int, x: Sequence[Rational], y: Sequence[Rational]) -> IdentityReport:
    """C·λ_k·a_m·b_n^{k+1} against the dims of the dual decomposition."""
    _require_birank(b, k)
    if len(x) != b.m or len(y) != b.n:
        raise InvalidInputError(f"expected {b.m} x-values and {b.n} y-values, got {len(x)} and {len(y)}")
    x = [Fraction(v) for v in x]
    y = [Fraction(v) for v in y]
    a_m = _product(x)
    b_n = _product(y)
    c = _product([xi + yj for xi in x for yj in y])
    lam_k = expand(poincare_of_roots(x, y), k)[k]
    lhs = c * lam_k * a_m * b_n ** (k + 1)
    rhs = sum((Fraction(dim_splitting(p, x, y)) for p in eq4_partition_list(b, k)), Fraction(0))
    return IdentityReport.compare(
        "dual_dims",
        {"m": b.m, "n": b.n, "k": k, "x": _fmt(x), "y": _fmt(y)},
        format_rational(lhs),
        format_rational(rhs),
    )


def verify_eq9(a: Sequence[Rational], b: Sequence[Rational], order: int) -> IdentityReport:
    """The reversed-coefficient form of P/Q against P/Q itself, to ``order``.

    ``a`` lists a_0 … a_m of P(t) = Σ a_i t^i and ``b`` lists b_0 … b_n of
    Q(t) = Σ b_j (−t)^j.
    """
    a = [Fraction(v) for v in a]
    b = [Fraction(v) for v in b]
    if not a or not b or a[0] != 1 or b[0] != 1:
        raise InvalidInputError("coefficient lists must start with a_0 = b_0 = 1")
    if a[-1] == 0 or b[-1] == 0:
        raise InvalidInputError("leading coefficients a_m and b_n must be nonzero")
    m, n = len(a) - 1, len(b) - 1

    p = Polynomial(tuple(a))
    q = Polynomial(tuple(b)).substitute_neg()
    rhs = series_mul(TruncatedSeries.from_polynomial(p, order), series_invert(TruncatedSeries.from_polynomial(q, order)))

    top = p.reverse() * (b[n] / a[m])
    bottom = Polynomial(tuple(b[n - i] for i in range(n + 1))).substitute_neg()
    lhs = series_mul(
        TruncatedSeries.from_polynomial(top, order),
        series_invert(TruncatedSeries.from_polynomial(bottom, order)),
    )
    return IdentityReport.compare(
        "eq9",
        {"a": _fmt(a), "b": _fmt(b), "order": order},
        lhs.to_json(),
        rhs.to_json(),
    )


def verify_hook_identity(k: int, n: int, y: Sequence[Rational]) -> IdentityReport:
    holds = hook_schur_identity_check(k, n, y)
    return IdentityReport.compare("hook_schur", {"k": k, "n": n, "y": _fmt(y)}, holds, True)


# ---------------------------------------------------------------------------
# Fixture checks
# ---------------------------------------------------------------------------


def _poincare_with_dims(sym: HeckeSymmetry, N: Optional[int]) -> Tuple[List[int], RationalFunction]:
    dims = series_dims(sym, N if N is not None else config.SERIES_ORDER)
    return dims, poincare_from_dims(dims)


def theorem1_verdicts(r: RationalFunction) -> Dict[str, bool]:
    p, q = r.numerator, r.denominator
    return {
        "numerator_reciprocal": is_reciprocal(p),
        "denominator_skew_reciprocal": is_skew_reciprocal(q),
        "integral": p.is_integral() and q.is_integral(),
        "numerator_roots_negative": roots_all_negative(p),
        "denominator_roots_positive": roots_all_positive(q),
    }


def verify_theorem1(sym: HeckeSymmetry, N: Optional[int] = None) -> IdentityReport:
    """Reciprocity, integrality and root signs of the reconstructed P_Λ."""
    dims, r = _poincare_with_dims(sym, N)
    verdicts = theorem1_verdicts(r)
    return IdentityReport.compare(
        "theorem1",
        {
            "symmetry": repr(sym),
            "dims": dims,
            "numerator": r.numerator.to_json(),
            "denominator": r.denominator.to_json(),
        },
        verdicts,
        {name: True for name in verdicts},
    )


def verify_duality(sym: HeckeSymmetry, N: int = DUALITY_ORDER) -> IdentityReport:
    """P_Λ(t)·P_S(−t) = 1 with both series reconstructed from ranks."""
    p_lambda = poincare_from_dims(series_dims(sym, N, "lambda"))
    p_s = poincare_from_dims(series_dims(sym, N, "s"))
    product = series_mul(expand(p_lambda, N), expand(p_s, N).substitute_neg())
    return IdentityReport.compare(
        "duality",
        {"symmetry": repr(sym), "order": N, "p_lambda": str(p_lambda), "p_s": str(p_s)},
        product.to_json(),
        ["1"] + ["0"] * N,
    )


def verify_gamma_criterion(sym: HeckeSymmetry, max_weight: int = 8) -> IdentityReport:
    """dim I_λ ≥ 0 from the dims of Λ, vanishing exactly off Γ_{m,n}."""
    _, r = _poincare_with_dims(sym, None)
    b = birank(r)
    dims = expand(r, max_weight).coefficients
    observed, expected = [], []
    for lam in partitions_up_to(max_weight):
        value = dim_simple(lam, dims)
        sign = "+" if value > 0 else ("0" if value == 0 else "-")
        observed.append(f"{lam}:{sign}")
        expected.append(f"{lam}:{'+' if in_gamma(lam, b) else '0'}")
    return IdentityReport.compare(
        "gamma_criterion",
        {"symmetry": repr(sym), "birank": str(b), "max_weight": max_weight},
        observed,
        expected,
    )


def splitting_roots(r: RationalFunction) -> Tuple[List[Fraction], List[Fraction]]:
    """x_i, y_j with P = ∏(1 + x_i t) and Q = ∏(1 − y_j t), when all are rational."""
    p_roots = rational_roots(r.numerator)
    q_roots = rational_roots(r.denominator)
    if p_roots is None or q_roots is None:
        raise InvalidInputError(f"{r} does not factor over the rationals")
    return [-1 / root for root in p_roots], [1 / root for root in q_roots]


def verify_splitting_dims(sym: HeckeSymmetry, max_weight: int = 8) -> IdentityReport:
    """dim I_λ from the dims of Λ against the product formula, on every splitting λ."""
    _, r = _poincare_with_dims(sym, None)
    x, y = splitting_roots(r)
    b = Birank(len(x), len(y))
    dims = expand(r, max_weight).coefficients
    observed, expected = [], []
    for lam in partitions_up_to(max_weight):
        if not in_gamma(lam, b) or not is_splitting(lam, b):
            continue
        observed.append(f"{lam}:{format_rational(Fraction(dim_simple(lam, dims)))}")
        expected.append(f"{lam}:{format_rational(Fraction(dim_splitting(lam, x, y)))}")
    return IdentityReport.compare(
        "splitting_dims",
        {"symmetry": repr(sym), "x": _fmt(x), "y": _fmt(y), "max_weight": max_weight},
        observed,
        expected,
    )


# ---------------------------------------------------------------------------
# Low-birank classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassifiedSeries:
    """(1+t)^ε₁(1+at+t²)^ε₂ / (1−t)^δ₁(1−bt+t²)^δ₂ with its predicate verdicts."""

    eps1: int
    a: Optional[int]
    delta1: int
    b: Optional[int]
    series: RationalFunction
    checks: Tuple[Tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def label(self) -> str:
        top = ("(1+t)^1" if self.eps1 else "") + (f"(1+{self.a}t+t^2)^1" if self.a is not None else "")
        bottom = ("(1-t)^1" if self.delta1 else "") + (f"(1-{self.b}t+t^2)^1" if self.b is not None else "")
        if not top and not bottom:
            return "1/1"
        return f"{top or '1'} / {bottom or '1'}"

    def to_json(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "series": self.series.to_json(),
            "checks": dict(self.checks),
        }


def _classify_candidate(eps1: int, a: Optional[int], delta1: int, b: Optional[int]) -> ClassifiedSeries:
    top = Polynomial.of(1, 1) ** eps1
    if a is not None:
        top = top * Polynomial.of(1, a, 1)
    bottom = Polynomial.of(1, -1) ** delta1
    if b is not None:
        bottom = bottom * Polynomial.of(1, -b, 1)
    checks = (
        ("reciprocal", is_reciprocal(top)),
        ("skew_reciprocal", is_skew_reciprocal(bottom)),
        ("numerator_roots_negative", roots_all_negative(top)),
        ("denominator_roots_positive", roots_all_positive(bottom)),
    )
    return ClassifiedSeries(eps1, a, delta1, b, RationalFunction(top, bottom), checks)


def enumerate_low_birank(max_a: int, max_b: int, min_a: int = 2, min_b: int = 2) -> List[ClassifiedSeries]:
    """Every parameter choice, whether or not it passes the predicates."""
    out = []
    for eps1 in (0, 1):
        for a in [None, *range(min_a, max_a + 1)]:
            for delta1 in (0, 1):
                for b in [None, *range(min_b, max_b + 1)]:
                    out.append(_classify_candidate(eps1, a, delta1, b))
    return out


def expected_classification_count(max_a: int, max_b: int) -> int:
    """Two choices each for ε₁ and δ₁; ε₂ = 0 or one of a = 2 … A; likewise for b."""
    return 4 * max_a * max_b


def classify_low_birank(max_a: int, max_b: int) -> List[ClassifiedSeries]:
    """Candidate P_Λ of the low-birank family that pass all four predicates."""
    if max_a < 2 or max_b < 2:
        raise InvalidInputError(f"max-a and max-b must be at least 2, got {max_a} and {max_b}")
    raw = enumerate_low_birank(max_a, max_b)
    kept = [c for c in raw if c.passed]
    if len(kept) != len(raw):
        logger.warning("%d candidates failed the predicates", len(raw) - len(kept))
    return kept


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def random_positive_rational(rng: random.Random, height: int = 9) -> Fraction:
    return Fraction(rng.randint(1, height), rng.randint(1, height))


def reciprocal_roots(size: int, rng: random.Random) -> List[Fraction]:
    """A root multiset closed under inversion, so ∏(1 + r t) is reciprocal."""
    out: List[Fraction] = []
    for _ in range(size // 2):
        r = random_positive_rational(rng)
        out.extend([r, 1 / r])
    if size % 2:
        out.append(Fraction(1))
    return sorted(out)


def nonreciprocal_roots(size: int, rng: random.Random) -> List[Fraction]:
    """Integer roots ≥ 2; Σ 1/r < Σ r keeps the degree-one identity from holding."""
    return [Fraction(rng.randint(2, 9)) for _ in range(size)]


def dual_dims_grid(m_max: int, n_max: int, kmax: int, rng: random.Random, samples: int = 5) -> List[IdentityReport]:
    reports = []
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            b = Birank(m, n)
            for _ in range(samples):
                x, y = reciprocal_roots(m, rng), reciprocal_roots(n, rng)
                reports.extend(verify_dual_dims(b, k, x, y) for k in range(kmax + 1))
            if kmax >= 1:
                x, y = nonreciprocal_roots(m, rng), nonreciprocal_roots(n, rng)
                reports.append(negative_control(verify_dual_dims(b, 1, x, y)))
    return reports


def eq4_suite(m_max: int, n_max: int, kmax: int, rng: random.Random) -> List[IdentityReport]:
    reports = [
        verify_tensor_lr(Birank(m, n), k)
        for m in range(1, m_max + 1)
        for n in range(1, n_max + 1)
        for k in range(kmax + 1)
    ]
    reports.extend(dual_dims_grid(m_max, n_max, kmax, rng))
    for n in range(1, n_max + 1):
        for k in range(1, kmax + 1):
            reports.append(verify_hook_identity(k, n, [random_positive_rational(rng) for _ in range(n)]))
    return reports


def eq9_suite(m_max: int, n_max: int, rng: random.Random, order: int = 12, samples: int = 3) -> List[IdentityReport]:
    reports = []
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            for _ in range(samples):
                a = elementary_from_roots(reciprocal_roots(m, rng))
                b = elementary_from_roots(reciprocal_roots(n, rng))
                reports.append(verify_eq9(a, b, order))
                # a_m = 2 ≠ a_0 and b_n = 2 ≠ b_0 break reciprocity
                reports.append(negative_control(verify_eq9(a[:-1] + [a[-1] + 1], b, order)))
                reports.append(negative_control(verify_eq9(a, b[:-1] + [b[-1] + 1], order)))
    return reports


def thm1_suite(fixtures: Optional[Sequence[str]] = None) -> List[IdentityReport]:
    reports = []
    for name in fixtures or DEFAULT_FIXTURES:
        sym = parse_fixture(name)
        logger.info("checking fixture %s", name)
        reports.append(verify_theorem1(sym))
        reports.append(verify_duality(sym))
        reports.append(verify_gamma_criterion(sym))
        reports.append(verify_splitting_dims(sym))
    return reports


def run_suite(
    name: str,
    m: int = 3,
    n: int = 3,
    kmax: int = 4,
    seed: Optional[int] = None,
) -> List[IdentityReport]:
    """Run one named grid; ``all`` runs eq4, eq9 and thm1 in that order."""
    if name not in SUITES:
        raise InvalidInputError(f"unknown suite {name!r}, expected one of {', '.join(SUITES)}")
    if m < 1 or n < 1 or kmax < 0:
        raise InvalidInputError(f"grid bounds must satisfy m, n ≥ 1 and kmax ≥ 0, got {m}, {n}, {kmax}")
    rng = random.Random(config.VERIFY_SEED if seed is None else seed)
    reports: List[IdentityReport] = []
    if name in ("eq4", "all"):
        reports.extend(eq4_suite(m, n, kmax, rng))
    if name in ("eq9", "all"):
        reports.extend(eq9_suite(m, n, rng))
    if name in ("thm1", "all"):
        reports.extend(thm1_suite())
    logger.info("suite %s: %d/%d passed", name, sum(r.passed for r in reports), len(reports))
    return reports


__all__ = [
    "SUITES",
    "IdentityReport",
    "negative_control",
    "expected_tensor_terms",
    "verify_tensor_lr",
    "poincare_of_roots",
    "verify_dual_dims",
    "verify_eq9",
    "verify_hook_identity",
    "theorem1_verdicts",
    "verify_theorem1",
    "verify_duality",
    "verify_gamma_criterion",
    "splitting_roots",
    "verify_splitting_dims",
    "ClassifiedSeries",
    "enumerate_low_birank",
    "expected_classification_count",
    "classify_low_birank",
    "random_positive_rational",
    "reciprocal_roots",
    "nonreciprocal_roots",
    "dual_dims_grid",
    "eq4_suite",
    "eq9_suite",
    "thm1_suite",
    "run_suite",
]
