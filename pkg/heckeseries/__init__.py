"""Exact computations on the quadratic algebras of a Hecke symmetry."""
