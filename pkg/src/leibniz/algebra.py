"""Left Leibniz algebras given by structure constants, and their invariants.

``c[i][j][k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]``.  All
subspaces are :class:`~leibniz.linalg.Subspace` values in coordinates
with respect to the basis ``e_0 .. e_{n-1}``.
"""

from __future__ import annotations

import functools
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import DimensionMismatch, IdentityViolation, LeibnizError
from .fields import FieldSpec, Scalar
from .linalg import Matrix, Subspace, Vector, nullspace, span

MODES = ("left", "right", "two_sided")


def _sum(field: FieldSpec, terms) -> Scalar:
    return sum(terms, field.zero)


def check_left_leibniz(field: FieldSpec, c) -> Optional[Tuple[int, int, int]]:
    """First basis triple (i, j, k) breaking ``[[a,b],c] = [a,[b,c]] - [b,[a,c]]``.

    Returns ``None`` when the identity holds.  Checking basis triples is
    enough because both sides are trilinear.
    """
    n = len(c)
    rng = range(n)
    for i in rng:
        for j in rng:
            for k in rng:
                for out in rng:
                    lhs = _sum(field, (c[i][j][m] * c[m][k][out] for m in rng))
                    rhs = _sum(field, (c[j][k][m] * c[i][m][out] for m in rng)) - _sum(
                        field, (c[i][k][m] * c[j][m][out] for m in rng)
                    )
                    if lhs != rhs:
                        return (i, j, k)
    return None


def _requires_checked(method):
    @functools.wraps(method)
    def wrapper(self, *args, **kwargs):
        if not self.checked:
            raise LeibnizError(f"{method.__name__} requires an algebra built with the identity check")
        return method(self, *args, **kwargs)

    return wrapper


class LeibnizAlgebra:
    """A finite-dimensional left Leibniz algebra.

    The left Leibniz identity is verified at construction; pass
    ``check=False`` only to build deliberately broken tables for tests.
    Such unchecked algebras support :meth:`bracket` but none of the analysis
    methods.
    """

    def __init__(self, field: FieldSpec, structure, names: Optional[Sequence[str]] = None, *, check: bool = True):
        n = len(structure)
        c = tuple(
            tuple(tuple(field(x) for x in structure[i][j]) for j in range(n)) for i in range(n)
        )
        if any(len(c[i]) != n or any(len(v) != n for v in c[i]) for i in range(n)):
            raise DimensionMismatch("structure constants must form an n x n x n table")
        if names is None:
            names = [f"e{i + 1}" for i in range(n)]
        names = tuple(names)
        if len(names) != n or len(set(names)) != n:
            raise ValueError("need exactly n distinct basis names")
        self.field = field
        self.dim = n
        self.names = names
        self.c = c
        self.checked = False
        if check:
            bad = check_left_leibniz(field, c)
            if bad is not None:
                raise IdentityViolation(bad, names)
            self.checked = True

    @classmethod
    def from_brackets(
        cls,
        field: FieldSpec,
        names: Sequence[str],
        brackets: Mapping[Tuple[int, int], Mapping[int, object]],
        *,
        check: bool = True,
    ) -> "LeibnizAlgebra":
        """Build from the nonzero products ``{(i, j): {k: coeff}}``; the rest are zero."""
        n = len(names)
        table = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
        for (i, j), terms in brackets.items():
            for k, coef in terms.items():
                table[i][j][k] = field(coef)
        return cls(field, table, names, check=check)

    @classmethod
    def unchecked(cls, field: FieldSpec, structure, names=None) -> "LeibnizAlgebra":
        return cls(field, structure, names, check=False)

    def __eq__(self, other):
        if not isinstance(other, LeibnizAlgebra):
            return NotImplemented
        return (self.field, self.names, self.c) == (other.field, other.names, other.c)

    def __hash__(self):
        return hash((self.field, self.names, self.c))

    def __repr__(self):
        return f"LeibnizAlgebra({self.field}, dim={self.dim}, names={list(self.names)})"

    # -- elements -----------------------------------------------------------

    def basis_vector(self, i: int) -> Vector:
        F = self.field
        return tuple(F.one if k == i else F.zero for k in range(self.dim))

    def vector(self, coords: Sequence) -> Vector:
        if len(coords) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(coords)}")
        return tuple(self.field(x) for x in coords)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def span(self, vectors) -> Subspace:
        return span(self.field, self.dim, vectors)

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        """Bilinear extension of the structure constants to coordinate vectors."""
        x, y = self.vector(x), self.vector(y)
        F, n, c = self.field, self.dim, self.c
        out = [F.zero] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                s = x[i] * y[j]
                for k in range(n):
                    if c[i][j][k]:
                        out[k] += s * c[i][j][k]
        return tuple(out)

    def left_multiplication(self, a: Sequence) -> Matrix:
        """Matrix of ``x -> [a, x]`` (columns are images of basis vectors)."""
        return Matrix.from_columns(self.field, [self.bracket(a, self.basis_vector(i)) for i in range(self.dim)], self.dim)

    def right_multiplication(self, a: Sequence) -> Matrix:
        """Matrix of ``x -> [x, a]``."""
        return Matrix.from_columns(self.field, [self.bracket(self.basis_vector(i), a) for i in range(self.dim)], self.dim)

    # -- invariants ---------------------------------------------------------

    @_requires_checked
    def is_lie(self) -> bool:
        # x -> [x, x] vanishes iff every [e_i, e_i] and every [e_i, e_j] + [e_j, e_i] does.
        n, c = self.dim, self.c
        for i in range(n):
            if any(c[i][i]):
                return False
            for j in range(i + 1, n):
                if any(a + b for a, b in zip(c[i][j], c[j][i])):
                    return False
        return True

    @_requires_checked
    def leibniz_kernel(self) -> Subspace:
        """Span of all squares ``[x, x]``."""
        n, c = self.dim, self.c
        gens = [c[i][i] for i in range(n)]
        gens += [tuple(a + b for a, b in zip(c[i][j], c[j][i])) for i in range(n) for j in range(i + 1, n)]
        return self.span(gens)

    def _stacked_kernel(self, matrices: List[Matrix]) -> Subspace:
        rows = [r for M in matrices for r in M.entries]
        return nullspace(Matrix(self.field, rows, self.dim))

    @_requires_checked
    def center(self, mode: str = "two_sided") -> Subspace:
        """Left center ``{x : [x, L] = 0}``, right center ``{x : [L, x] = 0}``, or both."""
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        mats = []
        basis = [self.basis_vector(j) for j in range(self.dim)]
        if mode in ("left", "two_sided"):
            mats += [self.right_multiplication(e) for e in basis]
        if mode in ("right", "two_sided"):
            mats += [self.left_multiplication(e) for e in basis]
        return self._stacked_kernel(mats)

    @_requires_checked
    def annihilator(self, a: Sequence, mode: str = "left") -> Subspace:
        """Left: ``{x : [x, a] = 0}``; right: ``{x : [a, x] = 0}``; two_sided: both."""
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        a = self.vector(a)
        mats = []
        if mode in ("left", "two_sided"):
            mats.append(self.right_multiplication(a))
        if mode in ("right", "two_sided"):
            mats.append(self.left_multiplication(a))
        return self._stacked_kernel(mats)

    def _check_ambient(self, *spaces: Subspace):
        for S in spaces:
            if S.ambient_dim != self.dim:
                raise DimensionMismatch(f"subspace of ambient dimension {S.ambient_dim} in a {self.dim}-dimensional algebra")

    @_requires_checked
    def product(self, S: Subspace, T: Subspace) -> Subspace:
        """``[S, T]``: the span of brackets of basis vectors of S and T."""
        self._check_ambient(S, T)
        return self.span([self.bracket(s, t) for s in S.basis for t in T.basis])

    @_requires_checked
    def lower_central_series(self) -> List[Subspace]:
        """``[gamma_1 = L, gamma_2, ...]`` up to and including the first repeated term."""
        L = self.full_space()
        series = [L]
        for _ in range(self.dim + 1):
            nxt = self.product(L, series[-1])
            if nxt == series[-1]:
                return series
            series.append(nxt)
        raise AssertionError("lower central series failed to stabilise")

    @_requires_checked
    def nilpotency_class(self) -> Optional[int]:
        """Smallest ``c`` with ``gamma_{c+1} = 0``, or ``None`` if the series stalls above zero."""
        series = self.lower_central_series()
        if not series[-1].is_zero():
            return None
        return len(series) - 1

    @_requires_checked
    def upper_central_series(self) -> List[Subspace]:
        """``[zeta_0 = 0, zeta_1, ...]`` up to the hypercenter.

        ``zeta_{k+1}`` is computed as ``{x : [x, L] + [L, x] lies in zeta_k}``,
        which avoids building quotient algebras.
        """
        series = [self.zero_space()]
        basis = [self.basis_vector(j) for j in range(self.dim)]
        for _ in range(self.dim + 1):
            cur = series[-1]
            # Rows of ``functionals`` cut out ``cur``: q . s = 0 for all s in cur.
            functionals = nullspace(Matrix(self.field, cur.basis, self.dim)).matrix
            mats = []
            for e in basis:
                mats.append(functionals @ self.right_multiplication(e))
                mats.append(functionals @ self.left_multiplication(e))
            nxt = self._stacked_kernel(mats)
            if nxt == cur:
                return series
            series.append(nxt)
        raise AssertionError("upper central series failed to stabilise")

    @_requires_checked
    def is_ideal(self, S: Subspace) -> bool:
        L = self.full_space()
        return self.product(L, S).issubspace(S) and self.product(S, L).issubspace(S)

    @_requires_checked
    def is_subalgebra(self, S: Subspace) -> bool:
        return self.product(S, S).issubspace(S)

    @_requires_checked
    def is_abelian_subspace(self, S: Subspace) -> bool:
        return self.product(S, S).is_zero()

    @_requires_checked
    def is_extraspecial(self) -> bool:
        L = self.full_space()
        derived = self.product(L, L)
        return derived.dim == 1 and derived == self.center("two_sided")

    def brackets(self) -> Dict[Tuple[int, int], Vector]:
        """The nonzero products, keyed by basis index pair."""
        return {
            (i, j): self.c[i][j]
            for i in range(self.dim)
            for j in range(self.dim)
            if any(self.c[i][j])
        }
