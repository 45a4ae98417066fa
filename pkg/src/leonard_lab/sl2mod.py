"""Even-subalgebra modules realized as explicit rational matrices.

The generators are the squared raising/lowering operators, the Cartan
element, and the Casimir element, acting on the two families of modules
(kind 0 on a basis of size floor(n/2)+1, kind 1 on a basis of size
floor((n+1)/2)).  The Casimir acts as the scalar n(n+2)/2 by construction;
the commutation identities [H, E^2] = 4 E^2 and [H, F^2] = -4 F^2 are checked
as exact matrix identities.  For odd n, fixed rational combinations of the
generators reproduce the dual Hahn Leonard-pair matrices at
(r, s, d) = (-1/2, 1/2, (n-1)/2) for kind 0 and (1/2, -1/2, (n-1)/2) for
kind 1; the halved-cube catalog lists which modules occur for diameter D and
the adjacency/dual-adjacency actions on each.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrices import RationalMatrix
from .params import build_params
from .representations import matrix_L_u_basis, matrix_Lstar_u_basis


@dataclass(frozen=True)
class EvenModule:
    kind: int  # 0 or 1
    n: int
    dim: int
    e_sq: RationalMatrix
    f_sq: RationalMatrix
    h: RationalMatrix
    casimir: RationalMatrix


def build_even_module(kind: int, n: int) -> EvenModule:
    """Generator matrices on the kind-(0|1) module of degree n.

    kind 0 (n >= 0), basis v_0..v_{floor(n/2)}:
        E^2 v_i = 2i(2i-1) v_{i-1},  F^2 v_i = (n-2i)(n-2i-1) v_{i+1},
        H v_i = (n-4i) v_i.
    kind 1 (n >= 1), basis v_0..v_{floor((n-1)/2)}:
        E^2 v_i = 2i(2i+1) v_{i-1},  F^2 v_i = (n-2i-1)(n-2i-2) v_{i+1},
        H v_i = (n-4i-2) v_i.
    """
    if kind not in (0, 1):
        raise ValueError(f"kind must be 0 or 1, got {kind!r}")
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a natural number, got {n!r}")
    if kind == 1 and n < 1:
        raise ValueError("kind 1 modules need n >= 1")

    if kind == 0:
        dim = n // 2 + 1
        raising = [Fraction(2 * i) * (2 * i - 1) for i in range(1, dim)]
        lowering = [Fraction(n - 2 * i) * (n - 2 * i - 1) for i in range(dim - 1)]
        cartan = [Fraction(n - 4 * i) for i in range(dim)]
    else:
        dim = (n + 1) // 2
        raising = [Fraction(2 * i) * (2 * i + 1) for i in range(1, dim)]
        lowering = [Fraction(n - 2 * i - 1) * (n - 2 * i - 2) for i in range(dim - 1)]
        cartan = [Fraction(n - 4 * i - 2) for i in range(dim)]

    e_rows = [[Fraction(0)] * dim for _ in range(dim)]
    f_rows = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(1, dim):
        e_rows[i - 1][i] = raising[i - 1]
    for i in range(dim - 1):
        f_rows[i + 1][i] = lowering[i]

    casimir_scalar = Fraction(n) * (n + 2) / 2
    return EvenModule(
        kind=kind,
        n=n,
        dim=dim,
        e_sq=RationalMatrix.from_rows(e_rows),
        f_sq=RationalMatrix.from_rows(f_rows),
        h=RationalMatrix.diagonal(cartan),
        casimir=RationalMatrix.identity(dim).scaled(casimir_scalar),
    )


def check_module_relations(m: EvenModule) -> bool:
    """[H, E^2] = 4 E^2, [H, F^2] = -4 F^2, Casimir scalar and central."""
    comm_e = m.h @ m.e_sq - m.e_sq @ m.h
    if comm_e != m.e_sq.scaled(4):
        return False
    comm_f = m.h @ m.f_sq - m.f_sq @ m.h
    if comm_f != m.f_sq.scaled(-4):
        return False
    expected = RationalMatrix.identity(m.dim).scaled(Fraction(m.n) * (m.n + 2) / 2)
    if m.casimir != expected:
        return False
    for gen in (m.e_sq, m.f_sq, m.h):
        if m.casimir @ gen != gen @ m.casimir:
            return False
    return True


def example_pair(kind: int, n: int) -> tuple[RationalMatrix, RationalMatrix]:
    """The rational generator combinations that reproduce the dual Hahn
    Leonard pair on the odd-degree modules:
    (E^2 + F^2 + Casimir - 1)/4 - H^2/8, paired with (n - H)/4 for kind 0 and
    (n - H)/4 - 1/2 for kind 1."""
    if n % 2 == 0:
        raise ValueError(f"example pair needs odd n, got {n}")
    m = build_even_module(kind, n)
    ident = RationalMatrix.identity(m.dim)
    first = (
        (m.e_sq + m.f_sq + m.casimir - ident).scaled(Fraction(1, 4))
        - (m.h @ m.h).scaled(Fraction(1, 8))
    )
    second = (ident.scaled(n) - m.h).scaled(Fraction(1, 4))
    if kind == 1:
        second = second - ident.scaled(Fraction(1, 2))
    return first, second


def example_parameters(kind: int, n: int) -> tuple[Fraction, Fraction, int]:
    """(r, s, d) matched by the odd-n example of the given kind."""
    if n % 2 == 0:
        raise ValueError(f"example parameters need odd n, got {n}")
    d = (n - 1) // 2
    if kind == 0:
        return Fraction(-1, 2), Fraction(1, 2), d
    if kind == 1:
        return Fraction(1, 2), Fraction(-1, 2), d
    raise ValueError(f"kind must be 0 or 1, got {kind!r}")


def verify_example_match(kind: int, n: int) -> bool:
    """Entrywise equality of the example pair with the u-basis matrices of
    (L, L*) at the matched (r, s, d)."""
    first, second = example_pair(kind, n)
    r, s, d = example_parameters(kind, n)
    p = build_params(d, r, s)
    return first == matrix_L_u_basis(p) and second == matrix_Lstar_u_basis(p)


@dataclass(frozen=True)
class CatalogEntry:
    kind: int
    n: int
    adjacency_action: RationalMatrix
    dual_adjacency_action: RationalMatrix


def terwilliger_catalog(D: int) -> list[CatalogEntry]:
    """Isomorphism classes of irreducible modules for the halved D-cube:
    kind 0 of degree D-2k for even k up to floor(D/2), kind 1 of degree D-2k
    for odd k up to floor((D-1)/2).  Each entry carries the adjacency action
    (E^2 + F^2 + Casimir - D)/2 - H^2/4 and the dual adjacency action H."""
    if D < 1:
        raise ValueError(f"catalog needs D >= 1, got {D}")
    entries = []
    for k in range(D // 2 + 1):
        kind = 0 if k % 2 == 0 else 1
        if kind == 1 and k > (D - 1) // 2:
            continue
        n = D - 2 * k
        m = build_even_module(kind, n)
        ident = RationalMatrix.identity(m.dim)
        adjacency = (
            (m.e_sq + m.f_sq + m.casimir - ident.scaled(D)).scaled(Fraction(1, 2))
            - (m.h @ m.h).scaled(Fraction(1, 4))
        )
        entries.append(
            CatalogEntry(
                kind=kind, n=n, adjacency_action=adjacency, dual_adjacency_action=m.h
            )
        )
    return entries


def module_to_json_dict(m: EvenModule) -> dict:
    return {
        "kind": m.kind,
        "n": m.n,
        "dim": m.dim,
        "ESquared": m.e_sq.to_json(),
        "FSquared": m.f_sq.to_json(),
        "H": m.h.to_json(),
        "Casimir": m.casimir.to_json(),
    }


def catalog_to_json_list(entries: list[CatalogEntry]) -> list[dict]:
    return [
        {
            "kind": e.kind,
            "n": e.n,
            "A": e.adjacency_action.to_json(),
            "AStar": e.dual_adjacency_action.to_json(),
        }
        for e in entries
    ]
