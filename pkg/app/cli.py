"""Command line for Poincaré series of Hecke symmetries.

Exit codes: 0 success, 2 input error, 3 a mathematical check failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, ValidationError, model_validator

from heckeseries import config
from heckeseries.errors import AxiomCheckError, InvalidInputError, ReconstructionError
from heckeseries.partitions import Birank, Partition
from heckeseries.series import birank
from heckeseries.symfunc import tensor_decompose
from heckeseries.symmetry import (
    HeckeSymmetry,
    axiom_report,
    load_rmatrix,
    parse_fixture,
    poincare_from_dims,
    read_rmatrix_file,
    series_dims,
)
from heckeseries.verify import (
    SUITES,
    classify_low_birank,
    expected_classification_count,
    run_suite,
    theorem1_verdicts,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CHECK = 3


class CliConfig(BaseModel):
    output: Literal["text", "json"] = Field("text", description="Output mode")
    order: int = Field(config.SERIES_ORDER, ge=2, description="Truncation order N of the Poincaré series")
    strand_cap: int = Field(config.STRAND_CAP, ge=1, description="Largest tensor power used for ranks")
    bounds: Tuple[int, int] = Field(
        (config.PADE_M_MAX, config.PADE_N_MAX), description="Padé degree bounds (m_max, n_max)"
    )

    @model_validator(mode="after")
    def _order_covers_bounds(self) -> "CliConfig":
        m_max, n_max = self.bounds
        if m_max < 0 or n_max < 0:
            raise ValueError(f"Padé bounds must be nonnegative, got {m_max},{n_max}")
        if self.order < m_max + n_max + 2:
            raise ValueError(f"order {self.order} must be at least m+n+2 = {m_max + n_max + 2}")
        return self


def _emit(cfg: CliConfig, payload: Any, text: str) -> None:
    if cfg.output == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def _mark(ok: bool) -> str:
    return "✓" if ok else "✗"


def _load_symmetry(args: argparse.Namespace) -> Tuple[str, HeckeSymmetry]:
    if args.fixture:
        return args.fixture, parse_fixture(args.fixture)
    if args.rfile:
        return args.rfile, load_rmatrix(args.rfile)
    raise InvalidInputError("give either --fixture or --rfile")


def cmd_lr(cfg: CliConfig, args: argparse.Namespace) -> int:
    lam, mu = Partition.parse(args.lam), Partition.parse(args.mu)
    b = Birank.parse(args.birank) if args.birank else None
    expansion = tensor_decompose(lam, mu, b)
    payload = {
        "lambda": lam.to_json(),
        "mu": mu.to_json(),
        "birank": [b.m, b.n] if b else None,
        "terms": expansion.to_json(),
    }
    _emit(cfg, payload, str(expansion))
    return EXIT_OK


def cmd_poincare(cfg: CliConfig, args: argparse.Namespace) -> int:
    name, sym = _load_symmetry(args)
    dims = series_dims(sym, cfg.order)
    r = poincare_from_dims(dims, cfg.bounds)
    b = birank(r)
    verdicts = theorem1_verdicts(r)
    payload = {
        "symmetry": name,
        "d": sym.d,
        "q": str(sym.q),
        "dims": dims,
        "numerator": r.numerator.to_json(),
        "denominator": r.denominator.to_json(),
        "birank": [b.m, b.n],
        "checks": verdicts,
    }
    lines = [
        f"symmetry: {name} (d={sym.d}, q={sym.q})",
        f"dims: {','.join(str(v) for v in dims)}",
        f"P: [{','.join(r.numerator.to_json())}]",
        f"Q: [{','.join(r.denominator.to_json())}]",
        f"birank: {b}",
    ]
    lines.extend(f"{_mark(ok)} {check}" for check, ok in verdicts.items())
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK if all(verdicts.values()) else EXIT_CHECK


def cmd_check(cfg: CliConfig, args: argparse.Namespace) -> int:
    record = read_rmatrix_file(args.rfile)
    sym = record.to_symmetry(check=False)
    report = axiom_report(sym.R, sym.q, sym.d)
    payload = {"rfile": args.rfile, **report.model_dump(), "failed": report.failed}
    lines = [f"{_mark(getattr(report, axiom))} {axiom}" for axiom in ("braid", "hecke", "half_adjoint")]
    if report.failed:
        lines.append(f"failed: {', '.join(report.failed)}")
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_CHECK


def cmd_verify(cfg: CliConfig, args: argparse.Namespace) -> int:
    seed = config.VERIFY_SEED if args.seed is None else args.seed
    reports = run_suite(args.suite, m=args.m, n=args.n, kmax=args.kmax, seed=seed)
    passed = sum(r.passed for r in reports)
    payload = {
        "suite": args.suite,
        "seed": seed,
        "passed": passed,
        "total": len(reports),
        "reports": [r.to_json() for r in reports],
    }
    lines = [f"suite {args.suite} (seed {seed})"]
    lines.extend(str(r) for r in reports)
    lines.append(f"{passed}/{len(reports)} passed")
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK if passed == len(reports) else EXIT_CHECK


def cmd_classify(cfg: CliConfig, args: argparse.Namespace) -> int:
    found = classify_low_birank(args.max_a, args.max_b)
    expected = expected_classification_count(args.max_a, args.max_b)
    payload = {
        "max_a": args.max_a,
        "max_b": args.max_b,
        "count": len(found),
        "expected_count": expected,
        "series": [c.to_json() for c in found],
    }
    lines = []
    for c in found:
        verdicts = " ".join(f"{_mark(ok)}{name}" for name, ok in c.checks)
        lines.append(f"{c.label}  {verdicts}")
    lines.append(f"{len(found)} series (expected {expected})")
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK if len(found) == expected else EXIT_CHECK


def _bounds(text: str) -> Tuple[int, int]:
    try:
        m, n = (int(token) for token in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bounds must look like 'm,n', got {text!r}") from exc
    return m, n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--order", type=int, default=config.SERIES_ORDER, help="series truncation order N")
    common.add_argument("--strand-cap", type=int, default=config.STRAND_CAP, help="largest tensor power")
    common.add_argument("--bounds", type=_bounds, default=(config.PADE_M_MAX, config.PADE_N_MAX), help="Padé bounds m,n")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(prog="heckeseries", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    lr = sub.add_parser("lr", parents=[common], help="decompose I_λ ⊗ I_μ")
    lr.add_argument("lam", help="partition λ, e.g. 3,2,2 or - for empty")
    lr.add_argument("mu", help="partition μ")
    lr.add_argument("--birank", help="drop terms outside Γ_{m,n}, given as m,n")
    lr.set_defaults(handler=cmd_lr)

    poincare = sub.add_parser("poincare", parents=[common], help="Poincaré series of Λ")
    source = poincare.add_mutually_exclusive_group(required=True)
    source.add_argument("--fixture", help="standard:d:q0 or super:m:n")
    source.add_argument("--rfile", help="R-matrix JSON file")
    poincare.set_defaults(handler=cmd_poincare)

    check = sub.add_parser("check", parents=[common], help="axiom checks for an R-matrix file")
    check.add_argument("--rfile", required=True, help="R-matrix JSON file")
    check.set_defaults(handler=cmd_check)

    verify = sub.add_parser("verify", parents=[common], help="run an identity suite")
    verify.add_argument("--suite", choices=SUITES, default="all")
    verify.add_argument("--m", type=int, default=3, help="largest m in the grid")
    verify.add_argument("--n", type=int, default=3, help="largest n in the grid")
    verify.add_argument("--kmax", type=int, default=4, help="largest k in the grid")
    verify.add_argument("--seed", type=int, default=None, help=f"random seed (default {config.VERIFY_SEED})")
    verify.set_defaults(handler=cmd_verify)

    classify = sub.add_parser("classify", parents=[common], help="low-birank candidate series")
    classify.add_argument("--max-a", type=int, default=6)
    classify.add_argument("--max-b", type=int, default=6)
    classify.set_defaults(handler=cmd_classify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else config.LOG_LEVEL,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        cfg = CliConfig(
            output="json" if args.json else "text",
            order=args.order,
            strand_cap=args.strand_cap,
            bounds=args.bounds,
        )
    except ValidationError as exc:
        print(f"error: {exc.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_INPUT
    default_cap, config.STRAND_CAP = config.STRAND_CAP, cfg.strand_cap
    try:
        return args.handler(cfg, args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (AxiomCheckError, ReconstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK
    finally:
        config.STRAND_CAP = default_cap


__all__ = ["CliConfig", "build_parser", "main"]


if __name__ == "__main__":
    sys.exit(main())
