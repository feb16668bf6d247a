"""Exact computations with finite-dimensional left Leibniz algebras and their derivations."""

from .algebra import LeibnizAlgebra, check_left_leibniz
from .catalog import abelian, cyclic_nilpotent_dim2, heisenberg, lei4, lei4_param_admissible, lei5
from .derivations import DerivationAlgebra, analyze, der_bracket, derivation_algebra, is_derivation
from .fields import GF, QQ, FieldSpec, Residue
from .linalg import Matrix, Subspace, nullspace, rref, solve, span

__all__ = [
    "DerivationAlgebra",
    "FieldSpec",
    "GF",
    "LeibnizAlgebra",
    "Matrix",
    "QQ",
    "Residue",
    "Subspace",
    "abelian",
    "analyze",
    "check_left_leibniz",
    "cyclic_nilpotent_dim2",
    "der_bracket",
    "derivation_algebra",
    "heisenberg",
    "is_derivation",
    "lei4",
    "lei4_param_admissible",
    "lei5",
    "nullspace",
    "rref",
    "solve",
    "span",
]
