"""Exact power series, polynomials and rational functions in one variable t.

Poincaré series enter as truncated series of integer dimensions and leave as
P(t)/Q(t) pairs reconstructed by an exact Padé search. Root-sign questions
are decided with Sturm sequences over QQ, never in floating point.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import sympy as sp

from heckeseries import linalg
from heckeseries.errors import InvalidInputError, ReconstructionError
from heckeseries.partitions import Birank

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]

_T = sp.Symbol("t")


def format_rational(value: Rational) -> str:
    """Lowest-terms ``p/q`` string, written ``p`` when q = 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: Union[str, int]) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"malformed rational {text!r}") from exc


def _strip(coefficients: Iterable[Rational]) -> Tuple[Fraction, ...]:
    out = [Fraction(c) for c in coefficients]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """Exact polynomial, coefficients ascending in degree, no trailing zeros."""

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _strip(self.coefficients))

    @classmethod
    def of(cls, *coefficients: Rational) -> "Polynomial":
        return cls(tuple(coefficients))

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def from_roots(cls, roots: Sequence[Rational], sign: int = 1) -> "Polynomial":
        """∏(1 + sign·r·t) over the given r."""
        out = cls.one()
        for r in roots:
            out = out * cls((1, sign * Fraction(r)))
        return out

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int) -> Fraction:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else Fraction(0)

    def __call__(self, t: Rational) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", Rational]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(tuple(c * other for c in self.coefficients))
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        out = Polynomial.one()
        for _ in range(exponent):
            out = out * self
        return out

    def substitute_neg(self) -> "Polynomial":
        """p(−t)."""
        return Polynomial(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coefficients)))

    def reverse(self) -> "Polynomial":
        """t^deg · p(1/t)."""
        return Polynomial(tuple(reversed(self.coefficients)))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def to_sympy(self) -> sp.Poly:
        return sp.Poly(
            [sp.Rational(c.numerator, c.denominator) for c in reversed(self.coefficients)] or [0],
            _T,
            domain=sp.QQ,
        )

    @classmethod
    def from_sympy(cls, poly: sp.Poly) -> "Polynomial":
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
        return cls(tuple(coeffs))

    def to_json(self) -> List[str]:
        return [format_rational(c) for c in self.coefficients]

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                power = "t" if i == 1 else f"t^{i}"
                body = power if mag == 1 else f"{format_rational(mag)}{power}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0 … c_N of a power series known modulo t^{N+1}."""

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))
        if not self.coefficients:
            raise InvalidInputError("a truncated series needs at least c_0")

    @classmethod
    def of(cls, *coefficients: Rational) -> "TruncatedSeries":
        return cls(tuple(coefficients))

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> "TruncatedSeries":
        return cls(tuple(p.coefficient(i) for i in range(order + 1)))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i]

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coefficients[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def substitute_neg(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coefficients)))

    def is_one(self) -> bool:
        return self.coefficients[0] == 1 and all(c == 0 for c in self.coefficients[1:])

    def to_json(self) -> List[str]:
        return [format_rational(c) for c in self.coefficients]


def series_add(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    order = min(s.order, t.order)
    return TruncatedSeries(tuple(s[i] + t[i] for i in range(order + 1)))


def series_mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    order = min(s.order, t.order)
    out = []
    for k in range(order + 1):
        out.append(sum((s[i] * t[k - i] for i in range(k + 1)), Fraction(0)))
    return TruncatedSeries(tuple(out))


def series_invert(s: TruncatedSeries) -> TruncatedSeries:
    if s[0] == 0:
        raise InvalidInputError("cannot invert a series with zero constant term")
    out = [1 / s[0]]
    for k in range(1, s.order + 1):
        acc = sum((s[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
        out.append(-acc / s[0])
    return TruncatedSeries(tuple(out))


@dataclass(frozen=True)
class RationalFunction:
    """P(t)/Q(t) in lowest terms with P(0) = Q(0) = 1."""

    numerator: Polynomial
    denominator: Polynomial = Polynomial((1,))

    def __post_init__(self) -> None:
        p, q = self.numerator, self.denominator
        if q.coefficient(0) == 0:
            raise InvalidInputError("denominator must have a nonzero constant term")
        if p.degree > 0 and q.degree > 0:
            g = p.to_sympy().gcd(q.to_sympy())
            if g.degree() > 0:
                p = Polynomial.from_sympy(sp.div(p.to_sympy(), g)[0])
                q = Polynomial.from_sympy(sp.div(q.to_sympy(), g)[0])
        scale = q.coefficient(0)
        p, q = p * (1 / scale), q * (1 / scale)
        if p.coefficient(0) != 1:
            raise InvalidInputError(f"numerator constant term must be 1, got {format_rational(p.coefficient(0))}")
        object.__setattr__(self, "numerator", p)
        object.__setattr__(self, "denominator", q)

    @classmethod
    def of(cls, numerator: Sequence[Rational], denominator: Sequence[Rational] = (1,)) -> "RationalFunction":
        return cls(Polynomial(tuple(numerator)), Polynomial(tuple(denominator)))

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"

    def to_json(self) -> dict:
        return {"numerator": self.numerator.to_json(), "denominator": self.denominator.to_json()}


def expand(r: RationalFunction, order: int) -> TruncatedSeries:
    num = TruncatedSeries.from_polynomial(r.numerator, order)
    den = TruncatedSeries.from_polynomial(r.denominator, order)
    return series_mul(num, series_invert(den))


def dual_series(r: RationalFunction) -> RationalFunction:
    """The series P_S determined by P_Λ(t)·P_S(−t) = 1."""
    return RationalFunction(r.denominator.substitute_neg(), r.numerator.substitute_neg())


def _fit(s: TruncatedSeries, m: int, n: int) -> Optional[RationalFunction]:
    def c(i: int) -> Fraction:
        return s[i] if 0 <= i <= s.order else Fraction(0)

    # Q = 1 + q_1 t + ... + q_n t^n kills the coefficients m+1 … m+n of Q·s
    rows = [[c(k - j) for j in range(1, n + 1)] for k in range(m + 1, m + n + 1)]
    rhs = [-c(k) for k in range(m + 1, m + n + 1)]
    if n:
        solution = linalg.solve(rows, rhs)
        if solution is None:
            return None
    else:
        solution = []
    q = Polynomial((Fraction(1), *solution))
    qs = series_mul(TruncatedSeries.from_polynomial(q, s.order), s)
    p = Polynomial(qs.coefficients[: m + 1])
    if any(qs[i] != 0 for i in range(m + 1, s.order + 1)):
        return None
    if q.degree != n or p.degree != m:
        return None
    return RationalFunction(p, q)


def pade_reconstruct(s: TruncatedSeries, m_max: int, n_max: int) -> RationalFunction:
    """Smallest (m, n) rational function that reproduces every coefficient of ``s``.

    Candidates are searched by increasing m+n, then increasing n. A fit is
    accepted only if it matches the whole supplied window.
    """
    if s.order < m_max + n_max + 2:
        raise InvalidInputError(
            f"series of order {s.order} is too short for Padé bounds ({m_max},{n_max})"
        )
    return _search(s, m_max, n_max, m_max + n_max)


def pade_search(s: TruncatedSeries, m_max: int, n_max: int) -> RationalFunction:
    """Like ``pade_reconstruct`` but only tries (m, n) with m + n + 2 ≤ order.

    A short window narrows the search instead of being rejected, so
    (m_max, 0) stays reachable when the data cannot afford m_max + n_max.
    """
    if s.order < 2:
        raise InvalidInputError(f"series of order {s.order} is too short for any Padé fit")
    return _search(s, m_max, n_max, min(m_max + n_max, s.order - 2))


def _search(s: TruncatedSeries, m_max: int, n_max: int, max_total: int) -> RationalFunction:
    if s[0] != 1:
        raise InvalidInputError("Poincaré data must start with c_0 = 1")
    for total in range(max_total + 1):
        for n in range(0, min(total, n_max) + 1):
            m = total - n
            if m > m_max:
                continue
            fit = _fit(s, m, n)
            if fit is not None:
                logger.debug("Padé fit at (%d,%d): %s", m, n, fit)
                return fit
    raise ReconstructionError(
        f"no rational function within degree bounds ({m_max},{n_max}) and m+n ≤ {max_total}"
    )


def birank(r: RationalFunction) -> Birank:
    return Birank(max(r.numerator.degree, 0), max(r.denominator.degree, 0))


def is_reciprocal(p: Polynomial) -> bool:
    a = p.coefficients
    return all(a[i] == a[len(a) - 1 - i] for i in range(len(a)))


def skew_coefficients(q: Polynomial) -> Tuple[Fraction, ...]:
    """The b_i of Q(t) = 1 − b_1 t + … + b_n (−t)^n."""
    return q.substitute_neg().coefficients


def is_skew_reciprocal(q: Polynomial) -> bool:
    return is_reciprocal(Polynomial(skew_coefficients(q)))


def sturm_sequence(p: Polynomial) -> List[sp.Poly]:
    return sp.sturm(p.to_sympy())


def _sign_changes(values: Iterable[Rational]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _signs_at_infinity(sequence: Sequence[sp.Poly], positive: bool) -> List[int]:
    out = []
    for f in sequence:
        lc = f.LC()
        sign = 1 if lc > 0 else -1
        if not positive and f.degree() % 2 == 1:
            sign = -sign
        out.append(sign)
    return out


def _changes_at(sequence: Sequence[sp.Poly], point: Optional[Rational], positive: bool) -> int:
    if point is None:
        return _sign_changes(_signs_at_infinity(sequence, positive))
    value = sp.Rational(Fraction(point).numerator, Fraction(point).denominator)
    return _sign_changes(f.eval(value) for f in sequence)


def real_roots_in(p: Polynomial, lo: Optional[Rational] = None, hi: Optional[Rational] = None) -> int:
    """Distinct real roots of ``p`` in the half-open interval (lo, hi].

    ``None`` stands for −∞ at the lower end and +∞ at the upper end.
    """
    if p.degree <= 0:
        return 0
    sequence = sturm_sequence(p)
    return _changes_at(sequence, lo, positive=False) - _changes_at(sequence, hi, positive=True)


def count_real_roots(p: Polynomial, negative: bool) -> int:
    """Distinct real roots in (−∞, 0) or in (0, ∞); p(0) must be nonzero."""
    if negative:
        return real_roots_in(p, None, 0)
    return real_roots_in(p, 0, None)


def _roots_all_on_side(p: Polynomial, negative: bool) -> bool:
    if p.is_zero():
        raise InvalidInputError("root signs of the zero polynomial are undefined")
    if p.degree == 0:
        return True
    if p.coefficient(0) == 0:
        return False
    squarefree = Polynomial.from_sympy(p.to_sympy().sqf_part())
    return count_real_roots(squarefree, negative) == squarefree.degree


def roots_all_negative(p: Polynomial) -> bool:
    return _roots_all_on_side(p, negative=True)


def roots_all_positive(q: Polynomial) -> bool:
    return _roots_all_on_side(q, negative=False)


def rational_roots(p: Polynomial) -> Optional[List[Fraction]]:
    """All roots with multiplicity when every root is rational, else ``None``."""
    if p.degree <= 0:
        return []
    found = sp.roots(p.to_sympy(), filter="Q")
    if sum(found.values()) != p.degree:
        return None
    out: List[Fraction] = []
    for root, mult in sorted(found.items(), key=lambda item: item[0]):
        out.extend([Fraction(int(root.p), int(root.q))] * mult)
    return out


def elementary_from_roots(roots: Sequence[Rational]) -> List[Fraction]:
    """e_0 … e_r of the given values, i.e. the coefficients of ∏(1 + r_i t)."""
    p = Polynomial.from_roots(roots)
    return [p.coefficient(i) for i in range(len(roots) + 1)]


def duality_check(p_lambda: RationalFunction, p_s: RationalFunction, order: int) -> bool:
    """P_Λ(t)·P_S(−t) = 1 modulo t^{order+1}."""
    product = series_mul(expand(p_lambda, order), expand(p_s, order).substitute_neg())
    return product.is_one()


__all__ = [
    "format_rational",
    "parse_rational",
    "Polynomial",
    "TruncatedSeries",
    "RationalFunction",
    "series_add",
    "series_mul",
    "series_invert",
    "expand",
    "dual_series",
    "pade_reconstruct",
    "pade_search",
    "birank",
    "is_reciprocal",
    "skew_coefficients",
    "is_skew_reciprocal",
    "sturm_sequence",
    "real_roots_in",
    "count_real_roots",
    "roots_all_negative",
    "roots_all_positive",
    "rational_roots",
    "elementary_from_roots",
    "duality_check",
]
