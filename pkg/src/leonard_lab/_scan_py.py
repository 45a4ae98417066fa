"""Pure-Python exhaustive scan over basis orderings.

Reference implementation: literally enumerates every permutation and tests
the reordered zero/nonzero pattern against the definition of an irreducible
tridiagonal matrix.  The Cython backend must return the identical list.
"""

from __future__ import annotations

from itertools import permutations


def scan_tridiagonal_orderings(pattern: bytes, n: int) -> list[tuple[int, ...]]:
    """All orderings p of 0..n-1 making pattern[p[i]][p[j]] irreducible
    tridiagonal, in lexicographic order.

    `pattern` is the row-major zero/nonzero mask (length n*n, nonzero byte
    means nonzero entry).
    """
    if len(pattern) != n * n:
        raise ValueError(f"pattern length {len(pattern)} != {n}*{n}")
    hits = []
    for perm in permutations(range(n)):
        if _accepts(pattern, n, perm):
            hits.append(perm)
    return hits


def _accepts(pattern: bytes, n: int, perm: tuple[int, ...]) -> bool:
    for i in range(n - 1):
        u, v = perm[i], perm[i + 1]
        if not pattern[u * n + v] or not pattern[v * n + u]:
            return False
    for i in range(n):
        u = perm[i]
        for j in range(i + 2, n):
            v = perm[j]
            if pattern[u * n + v] or pattern[v * n + u]:
                return False
    return True
