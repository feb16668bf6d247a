"""Named algebras: Lei4(3, F), Lei5(3, F) and a few reference algebras."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional

from .algebra import LeibnizAlgebra
from .errors import LambdaZero
from .fields import FieldSpec, Scalar
from .linalg import Matrix

KINDS = ("lei4", "lei5", "cyclic2", "abelian", "heisenberg")

LEI_NAMES = ("a1", "a2", "a3")


@dataclass(frozen=True)
class CatalogEntry:
    algebra: LeibnizAlgebra
    kind: str
    lam: Optional[Scalar] = None
    # Lei4 only: True iff X^2 + lambda has no root in the field.
    parameter_admissible: Optional[bool] = None


def _nonzero_lambda(F: FieldSpec, lam) -> Scalar:
    lam = F(lam)
    if not lam:
        raise LambdaZero("lambda must be a nonzero scalar")
    return lam


def lei4_param_admissible(F: FieldSpec, lam) -> bool:
    lam = _nonzero_lambda(F, lam)
    return not F.is_square(-lam)[0]


def lei4(F: FieldSpec, lam) -> CatalogEntry:
    """``[a1, a1] = a3``, ``[a2, a2] = lam * a3``; all other products vanish.

    Inadmissible ``lam`` still yields a valid Leibniz algebra; only the
    ``parameter_admissible`` flag records it.
    """
    lam = _nonzero_lambda(F, lam)
    L = LeibnizAlgebra.from_brackets(F, LEI_NAMES, {(0, 0): {2: 1}, (1, 1): {2: lam}})
    return CatalogEntry(L, "lei4", lam, lei4_param_admissible(F, lam))


def lei5(F: FieldSpec, lam) -> CatalogEntry:
    """``[a1, a1] = [a1, a2] = a3``, ``[a2, a2] = lam * a3``; ``[a2, a1] = 0``."""
    lam = _nonzero_lambda(F, lam)
    L = LeibnizAlgebra.from_brackets(F, LEI_NAMES, {(0, 0): {2: 1}, (0, 1): {2: 1}, (1, 1): {2: lam}})
    return CatalogEntry(L, "lei5", lam)


def cyclic_nilpotent_dim2(F: FieldSpec) -> CatalogEntry:
    return CatalogEntry(LeibnizAlgebra.from_brackets(F, ("b", "c"), {(0, 0): {1: 1}}), "cyclic2")


def abelian(F: FieldSpec, n: int) -> CatalogEntry:
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    return CatalogEntry(LeibnizAlgebra.from_brackets(F, [f"e{i + 1}" for i in range(n)], {}), "abelian")


def heisenberg(F: FieldSpec) -> CatalogEntry:
    L = LeibnizAlgebra.from_brackets(F, ("e1", "e2", "e3"), {(0, 1): {2: 1}, (1, 0): {2: -1}})
    return CatalogEntry(L, "heisenberg")


def build(kind: str, F: FieldSpec, lam=None, n: int = 3) -> CatalogEntry:
    """Construct a catalog entry by its CLI name."""
    if kind in ("lei4", "lei5"):
        if lam is None:
            lam = 1
        return lei4(F, lam) if kind == "lei4" else lei5(F, lam)
    if kind == "cyclic2":
        return cyclic_nilpotent_dim2(F)
    if kind == "abelian":
        return abelian(F, n)
    if kind == "heisenberg":
        return heisenberg(F)
    raise ValueError(f"unknown catalog algebra {kind!r}; choose from {', '.join(KINDS)}")


def _map_matrix(F: FieldSpec, images: Dict[int, Dict[int, int]]) -> Matrix:
    # images[j] = {r: coeff} gives f(a_{j+1}); columns hold images.
    M = [[F.zero] * 3 for _ in range(3)]
    for j, img in images.items():
        for r, v in img.items():
            M[r][j] = F(v)
    return Matrix(F, M, 3)


def named_derivations(kind: str, F: FieldSpec) -> Dict[str, Matrix]:
    """The maps z, w (and u, v in characteristic 2) describing Der(Lei4/Lei5).

    z: a1 -> a3; w: a2 -> a3; u: a1 -> a1 (Lei4) or a1 -> a1, a2 -> a2
    (Lei5); v: a2 -> a2 (Lei4 only).  Every unlisted basis vector maps to 0.
    """
    if kind not in ("lei4", "lei5"):
        raise ValueError("named derivations exist only for lei4 and lei5")
    out = {
        "z": _map_matrix(F, {0: {2: 1}}),
        "w": _map_matrix(F, {1: {2: 1}}),
    }
    if F.characteristic == 2:
        if kind == "lei4":
            out["u"] = _map_matrix(F, {0: {0: 1}})
            out["v"] = _map_matrix(F, {1: {1: 1}})
        else:
            out["u"] = _map_matrix(F, {0: {0: 1}, 1: {1: 1}})
    return out


def expected_der_basis(kind: str, F: FieldSpec) -> List[Matrix]:
    return list(named_derivations(kind, F).values())


def recognize(L: LeibnizAlgebra) -> Optional[CatalogEntry]:
    """Return the Lei4/Lei5 entry whose structure constants equal ``L``'s, if any."""
    if L.dim != 3:
        return None
    lam = L.c[1][1][2]
    if not lam:
        return None
    for ctor in (lei4, lei5):
        entry = ctor(L.field, lam)
        if entry.algebra.c == L.c:
            return entry
    return None
