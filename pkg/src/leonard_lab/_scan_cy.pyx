# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled exhaustive scan over basis orderings.

Same contract as leonard_lab._scan_py.scan_tridiagonal_orderings: return, in
lexicographic order, every permutation whose reordered pattern is irreducible
tridiagonal.  Implemented as a prefix-checked depth-first walk over all
permutations; a prefix that already violates the tridiagonal pattern prunes
the whole subtree, which is what makes the factorial scan cheap in practice.
"""

DEF MAX_N = 16


def scan_tridiagonal_orderings(pattern, Py_ssize_t n):
    if n < 0 or n > MAX_N:
        raise ValueError(f"matrix size {n} outside supported range 0..{MAX_N}")
    cdef const unsigned char[::1] pat = pattern
    if pat.shape[0] != n * n:
        raise ValueError(f"pattern length {pat.shape[0]} != {n}*{n}")
    hits = []
    if n == 0:
        hits.append(())
        return hits
    cdef int perm[MAX_N]
    cdef unsigned char used[MAX_N]
    cdef Py_ssize_t i
    for i in range(n):
        used[i] = 0
    _extend(&pat[0], n, perm, used, 0, hits)
    return hits


cdef void _extend(
    const unsigned char* pat,
    Py_ssize_t n,
    int* perm,
    unsigned char* used,
    Py_ssize_t k,
    list hits,
):
    cdef Py_ssize_t v, m
    cdef int prev
    cdef bint ok
    for v in range(n):
        if used[v]:
            continue
        ok = True
        if k >= 1:
            prev = perm[k - 1]
            if not pat[prev * n + v] or not pat[v * n + prev]:
                ok = False
        if ok:
            for m in range(k - 1):
                if pat[perm[m] * n + v] or pat[v * n + perm[m]]:
                    ok = False
                    break
        if not ok:
            continue
        perm[k] = v
        used[v] = 1
        if k == n - 1:
            hits.append(tuple([perm[m] for m in range(n)]))
        else:
            _extend(pat, n, perm, used, k + 1, hits)
        used[v] = 0
