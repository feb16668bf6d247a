"""Brute-force ground truth over small prime fields.

Everything here works on raw integer residues with numpy and checks the
defining identities directly on every candidate, so it shares no code with
the constraint-matrix solver it is used to certify.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from .algebra import LeibnizAlgebra
from .derivations import derivation_algebra
from .errors import SearchSpaceTooLarge
from .linalg import Matrix, Subspace, span

DEFAULT_LIMIT = 2_000_000
VECTOR_LIMIT = 4096
_CHUNK = 1 << 15


def _require_finite(L: LeibnizAlgebra) -> int:
    if not L.field.is_finite:
        raise ValueError(f"brute force needs a finite field, not {L.field}")
    return L.field.p


def _tensor(L: LeibnizAlgebra) -> np.ndarray:
    return np.array([[[int(x) for x in v] for v in row] for row in L.c], dtype=np.int64).reshape(L.dim, L.dim, L.dim)


def _digits(start: int, stop: int, p: int, width: int) -> np.ndarray:
    """Base-p digits (most significant first) of the integers in [start, stop)."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, width), dtype=np.int64)
    for pos in range(width - 1, -1, -1):
        out[:, pos] = idx % p
        idx //= p
    return out


def _all_vectors(p: int, n: int) -> np.ndarray:
    return _digits(0, p ** n, p, n)


def _derivation_array(L: LeibnizAlgebra, limit: int) -> np.ndarray:
    # rows are the row-major entries of every derivation, in lexicographic order
    p = _require_finite(L)
    n = L.dim
    total = p ** (n * n)
    if total > limit:
        raise SearchSpaceTooLarge(f"{total} candidate matrices exceed the budget of {limit}")
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    c = _tensor(L)
    found = []
    for start in range(0, total, _CHUNK):
        stop = min(total, start + _CHUNK)
        D = _digits(start, stop, p, n * n).reshape(-1, n, n)
        # D[b, r, col]: r-th coordinate of f(e_col)
        lhs = np.einsum("ijm,bkm->bijk", c, D)
        left = np.einsum("bri,rjk->bijk", D, c)
        right = np.einsum("brj,irk->bijk", D, c)
        ok = ((lhs - left - right) % p == 0).reshape(len(D), -1).all(axis=1)
        found.append(D[ok].reshape(-1, n * n))
    return np.concatenate(found)


def enumerate_derivations(L: LeibnizAlgebra, limit: int = DEFAULT_LIMIT) -> List[Matrix]:
    """Every n x n matrix over GF(p) satisfying the derivation rule on all basis pairs.

    Candidates are visited in lexicographic order of their row-major entries.
    """
    n = L.dim
    return [Matrix.from_flat(L.field, row.tolist(), n, n) for row in _derivation_array(L, limit)]


def _independent_rows(rows: np.ndarray, p: int) -> List[List[int]]:
    """A maximal independent subset of ``rows`` mod p, chosen greedily in order."""
    reduced: List[Tuple[int, List[int]]] = []  # (pivot column, row scaled to pivot 1)
    chosen = []
    for row in rows.tolist():
        v = [x % p for x in row]
        for c, r in reduced:
            if v[c]:
                f = v[c]
                v = [(a - f * b) % p for a, b in zip(v, r)]
        pivot = next((i for i, x in enumerate(v) if x), None)
        if pivot is None:
            continue
        inv = pow(v[pivot], p - 2, p)
        reduced.append((pivot, [x * inv % p for x in v]))
        chosen.append(row)
    return chosen


def _require_vectors(p: int, n: int):
    if p ** n > VECTOR_LIMIT:
        raise SearchSpaceTooLarge(f"{p ** n} vectors exceed the budget of {VECTOR_LIMIT}")


def _brackets_with_all(c: np.ndarray, X: np.ndarray, Y: np.ndarray, p: int, x_on_left: bool) -> np.ndarray:
    """For each x in X: whether [x, y] (or [y, x]) is zero for every y in Y."""
    ok = np.ones(len(X), dtype=bool)
    for start in range(0, len(X), 256):
        xs = X[start:start + 256]
        if x_on_left:
            prod = np.einsum("ai,bj,ijk->abk", xs, Y, c) % p
        else:
            prod = np.einsum("bi,aj,ijk->abk", Y, xs, c) % p
        ok[start:start + 256] = ~prod.any(axis=(1, 2))
    return ok


def _to_set(rows: np.ndarray) -> FrozenSet[Tuple[int, ...]]:
    return frozenset(tuple(int(v) for v in r) for r in rows)


def leib_kernel_bruteforce(L: LeibnizAlgebra) -> Subspace:
    """Span of ``[x, x]`` over every vector x of GF(p)^n."""
    p = _require_finite(L)
    _require_vectors(p, L.dim)
    X = _all_vectors(p, L.dim)
    squares = np.einsum("ai,aj,ijk->ak", X, X, _tensor(L)) % p
    gens = sorted(_to_set(squares))
    return span(L.field, L.dim, gens)


def center_elements_bruteforce(L: LeibnizAlgebra, mode: str = "two_sided") -> FrozenSet[Tuple[int, ...]]:
    """All x with [x, y] = 0 (left), [y, x] = 0 (right) or both, for every y."""
    p = _require_finite(L)
    _require_vectors(p, L.dim)
    X = _all_vectors(p, L.dim)
    c = _tensor(L)
    ok = np.ones(len(X), dtype=bool)
    if mode in ("left", "two_sided"):
        ok &= _brackets_with_all(c, X, X, p, x_on_left=True)
    if mode in ("right", "two_sided"):
        ok &= _brackets_with_all(c, X, X, p, x_on_left=False)
    return _to_set(X[ok])


def annihilator_elements_bruteforce(L: LeibnizAlgebra, a, mode: str = "left") -> FrozenSet[Tuple[int, ...]]:
    """All x with [x, a] = 0 (left), [a, x] = 0 (right) or both."""
    p = _require_finite(L)
    _require_vectors(p, L.dim)
    X = _all_vectors(p, L.dim)
    c = _tensor(L)
    A = np.array([[int(v) for v in a]], dtype=np.int64)
    ok = np.ones(len(X), dtype=bool)
    if mode in ("left", "two_sided"):
        ok &= _brackets_with_all(c, X, A, p, x_on_left=True)
    if mode in ("right", "two_sided"):
        ok &= _brackets_with_all(c, X, A, p, x_on_left=False)
    return _to_set(X[ok])


def center_bruteforce(L: LeibnizAlgebra, mode: str = "two_sided") -> Subspace:
    return span(L.field, L.dim, sorted(center_elements_bruteforce(L, mode)))


def annihilator_bruteforce(L: LeibnizAlgebra, a, mode: str = "left") -> Subspace:
    return span(L.field, L.dim, sorted(annihilator_elements_bruteforce(L, a, mode)))


def subspace_elements(S: Subspace) -> FrozenSet[Tuple[int, ...]]:
    """Every vector of a subspace over GF(p), by running through all coefficient tuples."""
    p = S.field.p
    out = set()
    for coeffs in itertools.product(range(p), repeat=S.dim):
        v = [0] * S.ambient_dim
        for a, b in zip(coeffs, S.basis):
            for k, x in enumerate(b):
                v[k] = (v[k] + a * int(x)) % p
        out.add(tuple(v))
    return frozenset(out)


def _log(count: int, p: int) -> Optional[int]:
    k = 0
    while count > 1 and count % p == 0:
        count //= p
        k += 1
    return k if count == 1 else None


@dataclass
class OracleReport:
    algebra_id: str
    derivation_count: int
    derivation_dim: Optional[int]
    solver_dim: int
    match: bool
    checks: Dict[str, bool] = dc_field(default_factory=dict)

    @property
    def all_match(self) -> bool:
        return self.match and all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "algebra_id": self.algebra_id,
            "derivation_count": self.derivation_count,
            "derivation_dim": self.derivation_dim,
            "solver_dim": self.solver_dim,
            "match": self.match,
            "checks": dict(self.checks),
            "all_match": self.all_match,
        }


def compare(L: LeibnizAlgebra, limit: int = DEFAULT_LIMIT, algebra_id: Optional[str] = None) -> OracleReport:
    """Run solver and brute force side by side and report every comparison."""
    p = _require_finite(L)
    n = L.dim
    found = _derivation_array(L, limit)
    DA = derivation_algebra(L)
    oracle_span = span(L.field, n * n, _independent_rows(found, p))
    dim = _log(len(found), p)
    match = dim == DA.dim and oracle_span == DA.as_matrix_subspace()

    checks: Dict[str, bool] = {}
    if p ** n <= VECTOR_LIMIT:
        checks["leib_kernel"] = leib_kernel_bruteforce(L) == L.leibniz_kernel()
        for mode in ("left", "right", "two_sided"):
            checks[f"center_{mode}"] = center_elements_bruteforce(L, mode) == subspace_elements(L.center(mode))
        for i, name in enumerate(L.names):
            e = L.basis_vector(i)
            checks[f"ann_left_{name}"] = annihilator_elements_bruteforce(L, e, "left") == subspace_elements(
                L.annihilator(e, "left")
            )
    if algebra_id is None:
        algebra_id = f"{L.field}:{','.join(L.names)}"
    return OracleReport(algebra_id, len(found), dim, DA.dim, match, checks)
