"""Exception types raised by the library; the CLI maps them to exit codes."""

from __future__ import annotations

from typing import Sequence


class HeckeSeriesError(Exception):
    """Base class for every library error."""


class InvalidInputError(HeckeSeriesError, ValueError):
    """Malformed input or a violated precondition."""


class CapacityError(InvalidInputError):
    """A strand count or tensor dimension exceeds the configured cap."""


class AxiomCheckError(HeckeSeriesError):
    """An R-matrix fails one or more of the Hecke symmetry axioms."""

    def __init__(self, failed: Sequence[str]):
        self.failed = tuple(failed)
        super().__init__(f"R-matrix fails axiom(s): {', '.join(self.failed)}")


class ReconstructionError(HeckeSeriesError):
    """No rational function within the degree bounds fits the series."""


__all__ = [
    "HeckeSeriesError",
    "InvalidInputError",
    "CapacityError",
    "AxiomCheckError",
    "ReconstructionError",
]
