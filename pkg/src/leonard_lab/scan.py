"""Backend selection for the exhaustive ordering scan.

The compiled Cython kernel is preferred when it was built; otherwise the
pure-Python reference takes over.  Both expose the same function with the
same output, and the test suite cross-checks them entry for entry.
"""

from __future__ import annotations

from .matrices import RationalMatrix

try:
    from ._scan_cy import scan_tridiagonal_orderings as _scan_impl

    SCAN_BACKEND = "cython"
except ImportError:
    from ._scan_py import scan_tridiagonal_orderings as _scan_impl

    SCAN_BACKEND = "python"


def zero_pattern(matrix: RationalMatrix) -> bytes:
    """Row-major nonzero mask of a square matrix."""
    if not matrix.is_square:
        raise ValueError("ordering scan needs a square matrix")
    return bytes(1 if e != 0 else 0 for e in matrix.entries)


def scan_tridiagonal_orderings(matrix: RationalMatrix) -> list[tuple[int, ...]]:
    """Every ordering of the basis under which `matrix` becomes irreducible
    tridiagonal, in lexicographic order.  Factorial in the size; intended for
    desk-scale matrices only."""
    return [tuple(p) for p in _scan_impl(zero_pattern(matrix), matrix.rows)]
