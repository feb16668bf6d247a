"""Dense exact linear algebra over a :class:`~leibniz.fields.FieldSpec`.

Vectors are plain tuples of scalars.  :class:`Matrix` is an immutable
row-major grid; :class:`Subspace` stores its basis in reduced row echelon
form, so two subspaces are equal exactly when their bases are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DimensionMismatch, MixedFieldsError
from .fields import FieldSpec, Scalar

Vector = Tuple[Scalar, ...]


class Matrix:
    """An immutable ``rows x cols`` matrix with entries in ``field``."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: FieldSpec, entries: Sequence[Sequence], cols: Optional[int] = None):
        grid = tuple(tuple(field(x) for x in row) for row in entries)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if any(len(row) != cols for row in grid):
            raise DimensionMismatch("ragged matrix rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence], rows: int) -> "Matrix":
        return cls(field, [[col[i] for col in columns] for i in range(rows)], len(columns))

    @classmethod
    def from_flat(cls, field: FieldSpec, flat: Sequence, rows: int, cols: int) -> "Matrix":
        if len(flat) != rows * cols:
            raise DimensionMismatch(f"{len(flat)} entries cannot fill a {rows}x{cols} matrix")
        return cls(field, [flat[r * cols:(r + 1) * cols] for r in range(rows)], cols)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def flatten(self) -> Vector:
        return tuple(x for row in self.entries for x in row)

    def tolist(self) -> List[List[Scalar]]:
        return [list(row) for row in self.entries]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [self.column(j) for j in range(self.cols)], self.rows)

    def apply(self, v: Sequence[Scalar]) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} against {self.cols} columns")
        z = self.field.zero
        return tuple(sum((a * b for a, b in zip(row, v)), z) for row in self.entries)

    def _check_same(self, other: "Matrix"):
        if self.field != other.field:
            raise MixedFieldsError(f"matrices over {self.field} and {other.field}")
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix(self.field, [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, [[-a for a in r] for r in self.entries], self.cols)

    def scale(self, s) -> "Matrix":
        s = self.field(s)
        return Matrix(self.field, [[s * a for a in r] for r in self.entries], self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise MixedFieldsError(f"matrices over {self.field} and {other.field}")
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        z = self.field.zero
        cols = [other.column(j) for j in range(other.cols)]
        return Matrix(
            self.field,
            [[sum((a * b for a, b in zip(row, col)), z) for col in cols] for row in self.entries],
            other.cols,
        )

    def is_zero(self) -> bool:
        return not any(x for row in self.entries for x in row)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.shape, self.entries))

    def __repr__(self):
        return f"Matrix({self.field}, {[[str(x) for x in r] for r in self.entries]})"

    def __str__(self):
        return format_matrix(self)


def format_matrix(M, indent: str = "") -> str:
    """Render a Matrix (or a grid of strings) with right-aligned columns."""
    grid = M.entries if isinstance(M, Matrix) else M
    if not grid:
        return indent + "[]"
    cells = [[str(x) for x in row] for row in grid]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(indent + "[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def _rref_rows(field: FieldSpec, rows: List[List[Scalar]], ncols: int) -> Tuple[List[List[Scalar]], List[int]]:
    # Gauss-Jordan in place; pivot = first row with a nonzero entry in the leftmost open column.
    pivots: List[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [inv * x for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(M: Matrix) -> Tuple[Matrix, int, List[int]]:
    """Reduced row echelon form of ``M``.

    Returns ``(R, rank, pivot_columns)``; ``R`` keeps the shape of ``M`` with
    any zero rows at the bottom.
    """
    rows, pivots = _rref_rows(M.field, [list(r) for r in M.entries], M.cols)
    return Matrix(M.field, rows, M.cols), len(pivots), pivots


def rank(M: Matrix) -> int:
    return rref(M)[1]


def inverse(M: Matrix) -> Matrix:
    """Inverse of a square matrix; raises ValueError if ``M`` is singular."""
    n = M.rows
    if M.cols != n:
        raise DimensionMismatch(f"cannot invert a {M.rows}x{M.cols} matrix")
    F = M.field
    aug = [list(row) + list(e) for row, e in zip(M.entries, Matrix.identity(F, n).entries)]
    rows, pivots = _rref_rows(F, aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return Matrix(F, [row[n:] for row in rows], n)


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field**ambient_dim`` with a canonical RREF basis."""

    field: FieldSpec
    ambient_dim: int
    basis: Tuple[Vector, ...]

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(field, n, ())

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(field, n, Matrix.identity(field, n).entries)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def matrix(self) -> Matrix:
        return Matrix(self.field, self.basis, self.ambient_dim)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _check(self, other: "Subspace"):
        if self.field != other.field:
            raise MixedFieldsError(f"subspaces over {self.field} and {other.field}")
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim}")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return span(self.field, self.ambient_dim, self.basis + other.basis)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.field, self.ambient_dim)
        # Solve sum x_i s_i = sum y_j t_j; the x-part of each solution gives an intersection vector.
        a = self.dim
        cols = list(self.basis) + [tuple(-x for x in t) for t in other.basis]
        rel = nullspace(Matrix.from_columns(self.field, cols, self.ambient_dim))
        z = self.field.zero
        vecs = [
            tuple(sum((sol[i] * self.basis[i][k] for i in range(a)), z) for k in range(self.ambient_dim))
            for sol in rel.basis
        ]
        return span(self.field, self.ambient_dim, vecs)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        v = tuple(self.field(x) for x in v)
        return span(self.field, self.ambient_dim, self.basis + (v,)).dim == self.dim

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def issubspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubspace(other)

    def __str__(self):
        if not self.basis:
            return "0"
        return "span{" + ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.basis) + "}"


def span(field: FieldSpec, n: int, vectors: Iterable[Sequence]) -> Subspace:
    rows = []
    for v in vectors:
        if len(v) != n:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {n}")
        rows.append([field(x) for x in v])
    rows, pivots = _rref_rows(field, rows, n)
    return Subspace(field, n, tuple(tuple(r) for r in rows[: len(pivots)]))


def subspace_sum(S: Subspace, T: Subspace) -> Subspace:
    return S + T


def subspace_intersect(S: Subspace, T: Subspace) -> Subspace:
    return S & T


def contains(S: Subspace, v: Sequence) -> bool:
    return S.contains(v)


def equals(S: Subspace, T: Subspace) -> bool:
    S._check(T)
    return S == T


def nullspace(M: Matrix) -> Subspace:
    """``{v : M v = 0}`` as a canonical subspace of ``field**cols``."""
    F = M.field
    rows, pivots = _rref_rows(F, [list(r) for r in M.entries], M.cols)
    pivot_set = set(pivots)
    vecs = []
    for free in (c for c in range(M.cols) if c not in pivot_set):
        v = [F.zero] * M.cols
        v[free] = F.one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][free]
        vecs.append(v)
    return span(F, M.cols, vecs)


def solve(A: Matrix, b: Sequence) -> Optional[Vector]:
    """Some ``x`` with ``A x = b`` (free variables set to zero), or ``None``."""
    if len(b) != A.rows:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {A.rows} rows")
    F = A.field
    aug = [list(row) + [F(x)] for row, x in zip(A.entries, b)]
    rows, pivots = _rref_rows(F, aug, A.cols + 1)
    if pivots and pivots[-1] == A.cols:
        return None
    x = [F.zero] * A.cols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][A.cols]
    return tuple(x)
