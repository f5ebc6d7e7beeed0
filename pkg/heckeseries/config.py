"""Environment-driven defaults shared by the library, the CLI and the harness."""

from __future__ import annotations

import os

from dotenv import load_dotenv

load_dotenv()

# Series truncation and Padé search
SERIES_ORDER = int(os.getenv("HECKE_SERIES_ORDER", "12"))
PADE_M_MAX = int(os.getenv("HECKE_PADE_M_MAX", "4"))
PADE_N_MAX = int(os.getenv("HECKE_PADE_N_MAX", "4"))

# Tensor-power guards
STRAND_CAP = int(os.getenv("HECKE_STRAND_CAP", "8"))
TENSOR_DIM_CAP = int(os.getenv("HECKE_TENSOR_DIM_CAP", "20000"))

VERIFY_SEED = int(os.getenv("HECKE_VERIFY_SEED", "20240611"))
LOG_LEVEL = os.getenv("HECKE_LOG_LEVEL", "WARNING")


__all__ = [
    "SERIES_ORDER",
    "PADE_M_MAX",
    "PADE_N_MAX",
    "STRAND_CAP",
    "TENSOR_DIM_CAP",
    "VERIFY_SEED",
    "LOG_LEVEL",
]
