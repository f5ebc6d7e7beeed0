"""Script to write the R-matrix JSON files under data/.

Valid symmetries come from the built-in fixtures; the broken ones are
unchecked copies used by the ``check`` command and the negative tests.
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Dict

# Add parent directory to path to import heckeseries
BASE_DIR = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(BASE_DIR))

from heckeseries import linalg
from heckeseries.symmetry import (
    HeckeSymmetry,
    axiom_report,
    dump_rmatrix,
    fixture_standard,
    perturbed,
)

DATA = BASE_DIR / "data"


def build_rmatrices() -> Dict[str, HeckeSymmetry]:
    flip = fixture_standard(2, 1)
    ones = linalg.to_matrix([[1] * 4 for _ in range(4)])
    return {
        "flip2.json": flip,
        "flip2_perturbed.json": perturbed(flip, 0, 1),
        "ones2.json": HeckeSymmetry(2, 1, ones, check=False),
        "standard2_q4.json": fixture_standard(2, 2),
    }


def main():
    """Write every R-matrix file and print its axiom verdicts."""
    print("=" * 60)
    print("Writing R-matrix files")
    print("=" * 60)
    DATA.mkdir(exist_ok=True)

    for name, sym in build_rmatrices().items():
        dump_rmatrix(sym, DATA / name)
        report = axiom_report(sym.R, sym.q, sym.d)
        status = "✓ all axioms hold" if report.ok else f"✗ fails {', '.join(report.failed)}"
        print(f"  {name:<24} d={sym.d} q={sym.q}  {status}")

    print("\n" + "=" * 60)
    print(f"R-matrix files written to {DATA}")
    print("=" * 60)


if __name__ == "__main__":
    main()
