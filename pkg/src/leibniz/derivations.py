"""The Lie algebra of derivations of a Leibniz algebra.

A linear map ``f`` is stored as an ``n x n`` matrix whose column ``j`` holds
the coordinates of ``f(e_j)``; composition ``f o g`` is then the matrix
product ``M_f @ M_g``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import LeibnizAlgebra
from .errors import DimensionMismatch, MixedFieldsError, NotInSpan
from .linalg import Matrix, Subspace, Vector, inverse, nullspace, rref, span


def derivation_system(L: LeibnizAlgebra) -> Matrix:
    """Linear constraints whose solutions are exactly the derivations of ``L``.

    Row ``(i*n + j)*n + k`` is coordinate ``k`` of
    ``[f(e_i), e_j] + [e_i, f(e_j)] - f([e_i, e_j])``; the unknown ``D[r][c]``
    sits in column ``r*n + c``.
    """
    F, n, c = L.field, L.dim, L.c
    rows = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = [F.zero] * (n * n)
                for r in range(n):
                    # [f(e_i), e_j]_k picks up D[r][i] * c[r][j][k]
                    row[r * n + i] += c[r][j][k]
                    # [e_i, f(e_j)]_k picks up D[r][j] * c[i][r][k]
                    row[r * n + j] += c[i][r][k]
                for m in range(n):
                    # f([e_i, e_j])_k = sum_m c[i][j][m] * D[k][m]
                    row[k * n + m] -= c[i][j][m]
                rows.append(row)
    return Matrix(F, rows, n * n)


def _check_square(L: LeibnizAlgebra, D: Matrix):
    if D.field != L.field:
        raise MixedFieldsError(f"matrix over {D.field} for an algebra over {L.field}")
    if D.shape != (L.dim, L.dim):
        raise DimensionMismatch(f"expected a {L.dim}x{L.dim} matrix, got {D.rows}x{D.cols}")


def is_derivation(L: LeibnizAlgebra, D: Matrix) -> Optional[Tuple[int, int]]:
    """First basis pair ``(i, j)`` where the derivation rule fails, else ``None``."""
    _check_square(L, D)
    images = [D.column(j) for j in range(L.dim)]
    for i in range(L.dim):
        for j in range(L.dim):
            lhs = D.apply(L.c[i][j])
            a = L.bracket(images[i], L.basis_vector(j))
            b = L.bracket(L.basis_vector(i), images[j])
            if lhs != tuple(x + y for x, y in zip(a, b)):
                return (i, j)
    return None


def der_bracket(D1: Matrix, D2: Matrix) -> Matrix:
    """Commutator ``f o g - g o f``."""
    if D1.shape != D2.shape or D1.rows != D1.cols:
        raise DimensionMismatch(f"cannot bracket {D1.shape} with {D2.shape}")
    return D1 @ D2 - D2 @ D1


def maps_into(D: Matrix, S: Subspace) -> bool:
    """Whether the linear map ``D`` sends ``S`` into itself."""
    return all(S.contains(D.apply(v)) for v in S.basis)


@dataclass
class SubspaceReport:
    dim: int
    is_ideal: bool
    is_subalgebra: bool
    is_abelian: bool


@dataclass
class DerivationReport:
    dim: int
    is_abelian: bool
    center: Subspace
    derived: Subspace
    subspaces: Dict[str, SubspaceReport] = dc_field(default_factory=dict)
    # Only meaningful when named subspaces were supplied.
    pairwise_trivial: Optional[bool] = None
    direct_sum: Optional[bool] = None


class DerivationAlgebra:
    """``Der(L)`` with a fixed basis and its Lie structure constants.

    ``lie_sc[a][b]`` holds the coordinates of ``[d_a, d_b]`` in ``basis``.
    ``lie_algebra`` is the same data as a (checked) LeibnizAlgebra so the
    invariants in :mod:`leibniz.algebra` apply directly.
    """

    def __init__(self, algebra: LeibnizAlgebra, basis: Sequence[Matrix]):
        self.algebra = algebra
        self.basis = list(basis)
        n = algebra.dim
        m = len(self.basis)
        # Coordinates are read off at pivot positions of the basis: if P are
        # pivot columns of the stacked rows B, then x = (B[:, P]^T)^-1 D[P].
        rows = Matrix(algebra.field, [d.flatten() for d in self.basis], n * n)
        _, r, self._pivots = rref(rows)
        if r != m:
            raise ValueError("derivation basis is linearly dependent")
        self._solver = inverse(Matrix(algebra.field, [[row[c] for row in rows.entries] for c in self._pivots], m))
        self.lie_sc = [[self.coords(der_bracket(self.basis[a], self.basis[b])) for b in range(m)] for a in range(m)]
        self.lie_algebra = LeibnizAlgebra(
            algebra.field, self.lie_sc, [f"d{a + 1}" for a in range(m)]
        )
        self._report: Optional[DerivationReport] = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def field(self):
        return self.algebra.field

    def coords(self, D: Matrix) -> Vector:
        """Coefficients of ``D`` in ``basis``; raises NotInSpan if it is not a combination."""
        _check_square(self.algebra, D)
        flat = D.flatten()
        x = self._solver.apply([flat[c] for c in self._pivots])
        if self.element(x) != D:
            raise NotInSpan("matrix is not in the span of the derivation basis")
        return x

    def element(self, coords: Sequence) -> Matrix:
        """The derivation ``sum coords[a] * basis[a]``."""
        n = self.algebra.dim
        out = Matrix.zeros(self.field, n, n)
        for x, d in zip(coords, self.basis):
            out = out + d.scale(x)
        return out

    def subspace(self, matrices: Sequence[Matrix]) -> Subspace:
        """Span of the given derivations, in coordinates of ``basis``."""
        return span(self.field, self.dim, [self.coords(M) for M in matrices])

    def as_matrix_subspace(self) -> Subspace:
        """``Der(L)`` as a subspace of flattened ``n x n`` matrices."""
        n = self.algebra.dim
        return span(self.field, n * n, [d.flatten() for d in self.basis])

    @property
    def report(self) -> DerivationReport:
        if self._report is None:
            self._report = analyze(self)
        return self._report


def matrix_span(matrices: Sequence[Matrix], n: int, field) -> Subspace:
    """Span of ``n x n`` matrices as flattened vectors."""
    return span(field, n * n, [M.flatten() for M in matrices])


def derivation_algebra(L: LeibnizAlgebra) -> DerivationAlgebra:
    if not L.checked:
        raise ValueError("derivation_algebra requires a checked algebra")
    n = L.dim
    kernel = nullspace(derivation_system(L))
    basis = [Matrix.from_flat(L.field, v, n, n) for v in kernel.basis]
    return DerivationAlgebra(L, basis)


def coords_in_basis(DA: DerivationAlgebra, D: Matrix) -> Vector:
    return DA.coords(D)


def analyze(DA: DerivationAlgebra, named: Optional[Mapping[str, Subspace]] = None) -> DerivationReport:
    """Structural report on ``Der(L)``; ``named`` subspaces are in basis coordinates."""
    A = DA.lie_algebra
    full = A.full_space()
    report = DerivationReport(
        dim=DA.dim,
        is_abelian=A.is_abelian_subspace(full),
        center=A.center("two_sided"),
        derived=A.product(full, full),
    )
    if not named:
        return report
    spaces = list(named.values())
    for name, S in named.items():
        if S.ambient_dim != DA.dim:
            raise DimensionMismatch(f"subspace {name!r} lives in dimension {S.ambient_dim}, not {DA.dim}")
        report.subspaces[name] = SubspaceReport(
            dim=S.dim,
            is_ideal=A.is_ideal(S),
            is_subalgebra=A.is_subalgebra(S),
            is_abelian=A.is_abelian_subspace(S),
        )
    report.pairwise_trivial = all(
        (spaces[a] & spaces[b]).is_zero() for a in range(len(spaces)) for b in range(a + 1, len(spaces))
    )
    total = spaces[0]
    for S in spaces[1:]:
        total = total + S
    report.direct_sum = sum(S.dim for S in spaces) == DA.dim and total.is_full()
    return report
