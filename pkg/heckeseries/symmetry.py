"""Hecke symmetries: the R-matrix, its axioms, fixtures and Poincaré series.

Entry convention: R[(k,l),(i,j)] = R^{kl}_{ij}, row index k·d+l and column
index i·d+j (0-based), so R(x_i⊗x_j) = Σ_{k,l} R^{kl}_{ij} x_k⊗x_l.
"""

from __future__ import annotations

import json
import logging
from dataclasses import InitVar, dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field, ValidationError, model_validator

from heckeseries import config, linalg
from heckeseries.errors import AxiomCheckError, CapacityError, InvalidInputError
from heckeseries.hecke import apply_generator, sparse_columns
from heckeseries.series import (
    RationalFunction,
    TruncatedSeries,
    format_rational,
    pade_search,
    parse_rational,
)

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]

AXIOMS = ("braid", "hecke", "half_adjoint")


# ---------------------------------------------------------------------------
# Axiom checks
# ---------------------------------------------------------------------------


def _as_matrix(R: Union[np.ndarray, Sequence[Sequence[Rational]]]) -> np.ndarray:
    return R if isinstance(R, np.ndarray) else linalg.to_matrix(R)


def check_braid(R: np.ndarray, d: int) -> bool:
    """R_1 R_2 R_1 = R_2 R_1 R_2 on V^⊗3."""
    R = _as_matrix(R)
    eye = linalg.identity(d)
    r1 = np.kron(R, eye)
    r2 = np.kron(eye, R)
    return linalg.matrices_equal(r1 @ r2 @ r1, r2 @ r1 @ r2)


def check_hecke(R: np.ndarray, q: Rational, d: int) -> bool:
    """(R + 1)(R − q) = 0 on V⊗V."""
    R = _as_matrix(R)
    eye = linalg.identity(d * d)
    return linalg.is_zero((R + eye) @ (R - Fraction(q) * eye))


def half_adjoint(R: np.ndarray, d: int) -> np.ndarray:
    """R^♯ with R^♯[(l,j),(k,i)] = R[(k,l),(i,j)].

    Exchanges the first upper index with the second lower one, which makes
    the flip a permutation matrix and the all-ones matrix rank one.
    """
    R = _as_matrix(R)
    out = linalg.zeros(d * d)
    for k in range(d):
        for l in range(d):
            for i in range(d):
                for j in range(d):
                    out[l * d + j, k * d + i] = R[k * d + l, i * d + j]
    return out


def check_half_adjoint(R: np.ndarray, d: int) -> bool:
    return linalg.determinant(half_adjoint(R, d)) != 0


class AxiomReport(BaseModel):
    braid: bool = Field(..., description="R_1R_2R_1 = R_2R_1R_2")
    hecke: bool = Field(..., description="(R+1)(R-q) = 0")
    half_adjoint: bool = Field(..., description="the half-adjoint of R is invertible")

    @property
    def failed(self) -> List[str]:
        return [name for name in AXIOMS if not getattr(self, name)]

    @property
    def ok(self) -> bool:
        return not self.failed


def axiom_report(R: np.ndarray, q: Rational, d: int) -> AxiomReport:
    R = _as_matrix(R)
    _check_shape(R, d)
    return AxiomReport(
        braid=check_braid(R, d),
        hecke=check_hecke(R, q, d),
        half_adjoint=check_half_adjoint(R, d),
    )


def _check_shape(R: np.ndarray, d: int) -> None:
    if d < 1:
        raise InvalidInputError(f"dimension d must be positive, got {d}")
    if R.shape != (d * d, d * d):
        raise InvalidInputError(f"R must be {d * d}x{d * d} for d={d}, got {R.shape[0]}x{R.shape[1]}")


# ---------------------------------------------------------------------------
# The symmetry
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HeckeSymmetry:
    """A d²×d² matrix R with its Hecke parameter q.

    The three axioms are checked on construction; pass ``check=False`` for
    deliberately broken matrices in negative tests.
    """

    d: int
    q: Fraction
    R: np.ndarray
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        q = Fraction(self.q)
        if q in (0, -1):
            raise InvalidInputError(f"Hecke parameter q={q} is excluded (q must avoid 0 and -1)")
        R = linalg.to_matrix(self.R.tolist() if isinstance(self.R, np.ndarray) else self.R)
        _check_shape(R, self.d)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "R", R)
        if check:
            report = axiom_report(R, q, self.d)
            if not report.ok:
                raise AxiomCheckError(report.failed)

    def __repr__(self) -> str:
        return f"HeckeSymmetry(d={self.d}, q={format_rational(self.q)})"


def _flip_index(d: int, i: int, j: int) -> Tuple[int, int]:
    """(row, col) of the entry sending x_i⊗x_j to x_j⊗x_i."""
    return j * d + i, i * d + j


def fixture_standard(d: int, q0: Rational) -> HeckeSymmetry:
    """The classical flip at q0 = 1, else the q0-scaled standard deformation with q = q0²."""
    q0 = Fraction(q0)
    if q0 <= 0:
        raise InvalidInputError(f"q0 must be a positive rational, got {format_rational(q0)}")
    if d < 1:
        raise InvalidInputError(f"dimension d must be positive, got {d}")
    R = linalg.zeros(d * d)
    for i in range(d):
        for j in range(d):
            if i == j:
                R[i * d + i, i * d + i] = q0 * q0
                continue
            row, col = _flip_index(d, i, j)
            R[row, col] = q0
            if i > j:
                R[i * d + j, i * d + j] = q0 * q0 - 1
    return HeckeSymmetry(d, q0 * q0, R)


def fixture_super(m: int, n: int) -> HeckeSymmetry:
    """Supersymmetry of V with super dimension (m, n); q = 1."""
    if m < 0 or n < 0 or m + n < 1:
        raise InvalidInputError(f"super dimension ({m},{n}) needs m, n ≥ 0 and m + n ≥ 1")
    d = m + n
    R = linalg.zeros(d * d)
    for i in range(d):
        for j in range(d):
            sign = -1 if i >= m and j >= m else 1
            row, col = _flip_index(d, i, j)
            R[row, col] = Fraction(sign)
    return HeckeSymmetry(d, Fraction(1), R)


def parse_fixture(spec: str) -> HeckeSymmetry:
    """Build a fixture from ``standard:d:q0`` or ``super:m:n``."""
    kind, _, rest = spec.partition(":")
    args = rest.split(":") if rest else []
    try:
        if kind == "standard" and len(args) == 2:
            return fixture_standard(int(args[0]), parse_rational(args[1]))
        if kind == "super" and len(args) == 2:
            return fixture_super(int(args[0]), int(args[1]))
    except ValueError as exc:
        raise InvalidInputError(f"malformed fixture {spec!r}: {exc}") from exc
    raise InvalidInputError(f"unknown fixture {spec!r}, expected standard:d:q0 or super:m:n")


DEFAULT_FIXTURES = (
    "standard:2:1",
    "standard:2:2",
    "standard:3:1",
    "standard:3:2",
    "super:1:1",
    "super:2:1",
    "super:1:2",
    "super:0:1",
)


def default_fixtures() -> Dict[str, HeckeSymmetry]:
    return {name: parse_fixture(name) for name in DEFAULT_FIXTURES}


def perturbed(sym: HeckeSymmetry, row: int, col: int, delta: Rational = 1) -> HeckeSymmetry:
    """Unchecked copy of ``sym`` with one entry shifted by ``delta``."""
    R = sym.R.copy()
    R[row, col] = R[row, col] + Fraction(delta)
    return HeckeSymmetry(sym.d, sym.q, R, check=False)


# ---------------------------------------------------------------------------
# Dimensions of Λ_n and S_n
# ---------------------------------------------------------------------------


def _check_strands(sym: HeckeSymmetry, N: int) -> None:
    if N < 0:
        raise InvalidInputError(f"N must be nonnegative, got {N}")
    if N > config.STRAND_CAP:
        raise CapacityError(f"N={N} exceeds the strand cap {config.STRAND_CAP}")
    if sym.d ** N > config.TENSOR_DIM_CAP:
        raise CapacityError(f"d^N = {sym.d ** N} exceeds the tensor cap {config.TENSOR_DIM_CAP}")


def _eigenspace_dims(sym: HeckeSymmetry, N: int, eigenvalue: Fraction) -> List[int]:
    """dim of {v ∈ V^⊗n : R_i v = eigenvalue·v for all i}, for n = 0 … N.

    The space for n strands sits inside (space for n−1) ⊗ V, so each step
    only solves for the kernel of R_{n−1} − eigenvalue on that subspace.
    """
    _check_strands(sym, N)
    dims = [1]
    if N == 0:
        return dims
    d = sym.d
    columns = sparse_columns(sym.R)
    basis: List[Dict[int, int]] = [{a: 1} for a in range(d)]
    dims.append(d)
    for n in range(2, N + 1):
        candidates = [{idx * d + a: c for idx, c in vec.items()} for vec in basis for a in range(d)]
        images = []
        for vec in candidates:
            image = apply_generator(n - 1, vec, columns, d, n)
            for idx, c in vec.items():
                image[idx] = image.get(idx, 0) - eigenvalue * c
            images.append({k: v for k, v in image.items() if v != 0})
        basis = []
        for relation in linalg.kernel_relations(images):
            combined: Dict[int, Fraction] = {}
            for pos, coeff in relation.items():
                for idx, c in candidates[pos].items():
                    combined[idx] = combined.get(idx, 0) + coeff * c
            basis.append(linalg.primitive(combined))
        dims.append(len(basis))
        logger.debug("eigenvalue %s: dim on %d strands = %d", eigenvalue, n, len(basis))
        if not basis:
            dims.extend([0] * (N - n))
            break
    return dims


def dims_lambda(sym: HeckeSymmetry, N: int) -> List[int]:
    """dim Λ_n = rank of y_n on V^⊗n, for n = 0 … N."""
    return _eigenspace_dims(sym, N, Fraction(-1))


def dims_s(sym: HeckeSymmetry, N: int) -> List[int]:
    """dim S_n = rank of x_n on V^⊗n, for n = 0 … N."""
    return _eigenspace_dims(sym, N, sym.q)


def usable_strands(sym: HeckeSymmetry, order: int) -> int:
    """Largest N ≤ order allowed by both the strand and tensor caps."""
    N = min(order, config.STRAND_CAP)
    while N > 0 and sym.d ** N > config.TENSOR_DIM_CAP:
        N -= 1
    return N


def padded_dims(dims: Sequence[int], order: int) -> List[int]:
    """Extend ``dims`` with zeros up to ``order`` once an entry has vanished.

    The eigenspace on n+1 strands lies inside (eigenspace on n strands) ⊗ V,
    so a zero dimension stays zero on every later strand.
    """
    dims = list(dims)
    if len(dims) <= order and 0 in dims:
        dims.extend([0] * (order + 1 - len(dims)))
    return dims


def series_dims(sym: HeckeSymmetry, order: int, kind: str = "lambda") -> List[int]:
    """dims of Λ (``kind="lambda"``) or S (``"s"``) to as many strands as the caps allow, zero-padded to ``order``."""
    if kind not in ("lambda", "s"):
        raise InvalidInputError(f"kind must be 'lambda' or 's', got {kind!r}")
    N = usable_strands(sym, order)
    dims = dims_lambda(sym, N) if kind == "lambda" else dims_s(sym, N)
    return padded_dims(dims, order)


def poincare_from_dims(dims: Sequence[int], bounds: Optional[Tuple[int, int]] = None) -> RationalFunction:
    """Smallest rational function within ``bounds`` that the dims can pin down."""
    m_max, n_max = bounds or (config.PADE_M_MAX, config.PADE_N_MAX)
    return pade_search(TruncatedSeries(tuple(dims)), m_max, n_max)


def poincare_lambda(
    sym: HeckeSymmetry,
    order: Optional[int] = None,
    bounds: Optional[Tuple[int, int]] = None,
) -> RationalFunction:
    """P_Λ reconstructed from as many strands as the caps allow."""
    order = order if order is not None else config.SERIES_ORDER
    return poincare_from_dims(series_dims(sym, order, "lambda"), bounds)


def poincare_s(
    sym: HeckeSymmetry,
    order: Optional[int] = None,
    bounds: Optional[Tuple[int, int]] = None,
) -> RationalFunction:
    order = order if order is not None else config.SERIES_ORDER
    return poincare_from_dims(series_dims(sym, order, "s"), bounds)


# ---------------------------------------------------------------------------
# R-matrix files
# ---------------------------------------------------------------------------


class RMatrixFile(BaseModel):
    d: int = Field(..., ge=1, description="dimension of V")
    q: str = Field(..., description="Hecke parameter as a lowest-terms rational string")
    entries: List[List[Union[str, int]]] = Field(..., description="d²×d² row-major entries R^{kl}_{ij}")

    @model_validator(mode="after")
    def _shape(self) -> "RMatrixFile":
        size = self.d * self.d
        if len(self.entries) != size or any(len(row) != size for row in self.entries):
            raise ValueError(f"entries must be a {size}x{size} array for d={self.d}")
        return self

    def to_symmetry(self, check: bool = True) -> HeckeSymmetry:
        rows = [[parse_rational(v) for v in row] for row in self.entries]
        return HeckeSymmetry(self.d, parse_rational(self.q), linalg.to_matrix(rows), check=check)

    @classmethod
    def from_symmetry(cls, sym: HeckeSymmetry) -> "RMatrixFile":
        return cls(
            d=sym.d,
            q=format_rational(sym.q),
            entries=[[format_rational(v) for v in row] for row in sym.R.tolist()],
        )


def read_rmatrix_file(path: Union[str, Path]) -> RMatrixFile:
    try:
        raw = json.loads(Path(path).read_text())
        return RMatrixFile.model_validate(raw)
    except OSError as exc:
        raise InvalidInputError(f"cannot read R-matrix file {path}: {exc}") from exc
    except (json.JSONDecodeError, ValidationError) as exc:
        raise InvalidInputError(f"malformed R-matrix file {path}: {exc}") from exc


def load_rmatrix(path: Union[str, Path], check: bool = True) -> HeckeSymmetry:
    return read_rmatrix_file(path).to_symmetry(check=check)


def dump_rmatrix(sym: HeckeSymmetry, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(RMatrixFile.from_symmetry(sym).model_dump(), indent=2) + "\n")


__all__ = [
    "AXIOMS",
    "check_braid",
    "check_hecke",
    "half_adjoint",
    "check_half_adjoint",
    "AxiomReport",
    "axiom_report",
    "HeckeSymmetry",
    "fixture_standard",
    "fixture_super",
    "parse_fixture",
    "DEFAULT_FIXTURES",
    "default_fixtures",
    "perturbed",
    "dims_lambda",
    "dims_s",
    "usable_strands",
    "padded_dims",
    "series_dims",
    "poincare_from_dims",
    "poincare_lambda",
    "poincare_s",
    "RMatrixFile",
    "read_rmatrix_file",
    "load_rmatrix",
    "dump_rmatrix",
]
