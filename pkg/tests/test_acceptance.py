"""Acceptance checks, grouped by criterion number.

Every check compares exact values.  The terminal summary prints one
PASS/FAIL line per criterion (see conftest.py).
"""

import time

import pytest

from leibniz import GF, QQ, Matrix
from leibniz.catalog import KINDS, abelian, build, heisenberg, lei4, lei4_param_admissible, lei5, named_derivations
from leibniz.derivations import analyze, der_bracket, derivation_algebra, maps_into
from leibniz.linalg import span
from leibniz.oracle import compare, enumerate_derivations


def unit(F, r, c):
    """Elementary 3x3 matrix with a 1 at 1-indexed position (r, c)."""
    M = [[F.zero] * 3 for _ in range(3)]
    M[r - 1][c - 1] = F.one
    return Matrix(F, M)


def matrix_span(F, matrices):
    return span(F, 9, [M.flatten() for M in matrices])


def relation_holds(DA, lhs, rhs):
    # both sides expressed in the computed basis
    return DA.coords(lhs) == DA.coords(rhs)


def named_spaces(DA, kind):
    F = DA.field
    m = named_derivations(kind, F)
    spaces = {"W+Z": DA.subspace([m["w"], m["z"]])}
    rest = [k for k in ("u", "v") if k in m]
    if rest:
        spaces["+".join(k.upper() for k in rest)] = DA.subspace([m[k] for k in rest])
    return m, spaces


def direct_sum_is_everything(DA, spaces):
    rep = analyze(DA, spaces)
    return rep.direct_sum


# -- 1: Lei4 over GF(2) -------------------------------------------------------

F2 = GF(2)


@pytest.fixture(scope="module")
def der_lei4_gf2():
    return derivation_algebra(lei4(F2, 1).algebra)


@pytest.mark.criterion(1)
def test_lei4_gf2_dimension(der_lei4_gf2):
    assert der_lei4_gf2.dim == 4


@pytest.mark.criterion(1)
def test_lei4_gf2_matrix_form(der_lei4_gf2):
    form = matrix_span(F2, [unit(F2, 1, 1), unit(F2, 2, 2), unit(F2, 3, 1), unit(F2, 3, 2)])
    assert der_lei4_gf2.as_matrix_subspace() == form


@pytest.mark.criterion(1)
@pytest.mark.parametrize("a, b, expected", [("u", "z", "-z"), ("u", "w", "-w"), ("v", "z", "0"), ("v", "w", "-w")])
def test_lei4_gf2_relation(der_lei4_gf2, a, b, expected):
    m = named_derivations("lei4", F2)
    rhs = Matrix.zeros(F2, 3, 3) if expected == "0" else -m[expected[1]]
    assert relation_holds(der_lei4_gf2, der_bracket(m[a], m[b]), rhs)


@pytest.mark.criterion(1)
def test_lei4_gf2_wz_abelian_ideal(der_lei4_gf2):
    _, spaces = named_spaces(der_lei4_gf2, "lei4")
    rep = analyze(der_lei4_gf2, spaces).subspaces["W+Z"]
    assert rep.is_ideal and rep.is_abelian


@pytest.mark.criterion(1)
def test_lei4_gf2_uv_abelian_subalgebra(der_lei4_gf2):
    _, spaces = named_spaces(der_lei4_gf2, "lei4")
    rep = analyze(der_lei4_gf2, spaces).subspaces["U+V"]
    assert rep.is_subalgebra and rep.is_abelian


@pytest.mark.criterion(1)
def test_lei4_gf2_direct_sum(der_lei4_gf2):
    _, spaces = named_spaces(der_lei4_gf2, "lei4")
    assert direct_sum_is_everything(der_lei4_gf2, spaces)


# -- 2: Lei4 in characteristic other than 2 -----------------------------------

ODD_LEI4 = [(QQ, 1), (QQ, 2), (QQ, -1), (GF(3), 1)]
ODD_IDS = ["Q-1", "Q-2", "Q-minus1", "GF3-1"]


@pytest.fixture(scope="module", params=ODD_LEI4, ids=ODD_IDS)
def der_lei4_odd(request):
    F, lam = request.param
    return derivation_algebra(lei4(F, lam).algebra)


@pytest.mark.criterion(2)
def test_lei4_odd_dimension(der_lei4_odd):
    assert der_lei4_odd.dim == 2


@pytest.mark.criterion(2)
def test_lei4_odd_matrix_form(der_lei4_odd):
    F = der_lei4_odd.field
    assert der_lei4_odd.as_matrix_subspace() == matrix_span(F, [unit(F, 3, 1), unit(F, 3, 2)])


@pytest.mark.criterion(2)
def test_lei4_odd_abelian(der_lei4_odd):
    assert der_lei4_odd.report.is_abelian


@pytest.mark.criterion(2)
def test_lei4_odd_is_w_plus_z(der_lei4_odd):
    _, spaces = named_spaces(der_lei4_odd, "lei4")
    assert spaces["W+Z"].is_full()


# -- 3: Lei5 over GF(2) -------------------------------------------------------


@pytest.fixture(scope="module")
def der_lei5_gf2():
    return derivation_algebra(lei5(F2, 1).algebra)


@pytest.mark.criterion(3)
def test_lei5_gf2_dimension(der_lei5_gf2):
    assert der_lei5_gf2.dim == 3


@pytest.mark.criterion(3)
def test_lei5_gf2_matrix_form(der_lei5_gf2):
    form = matrix_span(F2, [unit(F2, 1, 1) + unit(F2, 2, 2), unit(F2, 3, 1), unit(F2, 3, 2)])
    assert der_lei5_gf2.as_matrix_subspace() == form


@pytest.mark.criterion(3)
@pytest.mark.parametrize("a, b, expected", [("u", "z", "z"), ("u", "w", "w")])
def test_lei5_gf2_relation(der_lei5_gf2, a, b, expected):
    m = named_derivations("lei5", F2)
    assert relation_holds(der_lei5_gf2, der_bracket(m[a], m[b]), -m[expected])


@pytest.mark.criterion(3)
def test_lei5_gf2_wz_abelian_ideal(der_lei5_gf2):
    _, spaces = named_spaces(der_lei5_gf2, "lei5")
    rep = analyze(der_lei5_gf2, spaces).subspaces["W+Z"]
    assert rep.is_ideal and rep.is_abelian


@pytest.mark.criterion(3)
def test_lei5_gf2_u_abelian(der_lei5_gf2):
    _, spaces = named_spaces(der_lei5_gf2, "lei5")
    rep = analyze(der_lei5_gf2, spaces).subspaces["U"]
    assert rep.is_subalgebra and rep.is_abelian


@pytest.mark.criterion(3)
def test_lei5_gf2_direct_sum(der_lei5_gf2):
    _, spaces = named_spaces(der_lei5_gf2, "lei5")
    assert direct_sum_is_everything(der_lei5_gf2, spaces)


# -- 4: Lei5 in characteristic other than 2 -----------------------------------


@pytest.fixture(scope="module", params=[(QQ, 2), (GF(5), 1)], ids=["Q-2", "GF5-1"])
def der_lei5_odd(request):
    F, lam = request.param
    return derivation_algebra(lei5(F, lam).algebra)


@pytest.mark.criterion(4)
def test_lei5_odd_dimension(der_lei5_odd):
    assert der_lei5_odd.dim == 2


@pytest.mark.criterion(4)
def test_lei5_odd_abelian(der_lei5_odd):
    assert der_lei5_odd.report.is_abelian


@pytest.mark.criterion(4)
def test_lei5_odd_is_w_plus_z(der_lei5_odd):
    _, spaces = named_spaces(der_lei5_odd, "lei5")
    assert spaces["W+Z"].is_full()


# -- 5: solver against brute force --------------------------------------------


@pytest.fixture(scope="module")
def oracle_reports():
    start = time.perf_counter()
    reports = {(kind, p): compare(build(kind, GF(p)).algebra) for p in (2, 3) for kind in KINDS}
    return reports, time.perf_counter() - start


@pytest.mark.criterion(5)
def test_oracle_matches_everywhere(oracle_reports):
    reports, _ = oracle_reports
    assert {key: rep.all_match for key, rep in reports.items()} == {key: True for key in reports}


@pytest.mark.criterion(5)
def test_oracle_count_lei4_gf2():
    assert len(enumerate_derivations(lei4(F2, 1).algebra)) == 16


@pytest.mark.criterion(5)
def test_oracle_count_lei5_gf2():
    assert len(enumerate_derivations(lei5(F2, 1).algebra)) == 8


@pytest.mark.criterion(5)
def test_oracle_runtime(oracle_reports):
    _, elapsed = oracle_reports
    assert elapsed < 5.0


# -- 6: structural facts ------------------------------------------------------


@pytest.mark.criterion(6)
@pytest.mark.parametrize("F", [QQ, GF(2), GF(3)], ids=str)
@pytest.mark.parametrize("ctor", [lei4, lei5])
def test_structural_facts(ctor, F):
    L = ctor(F, 1).algebra
    a3 = L.span([(0, 0, 1)])
    full = L.full_space()
    assert L.leibniz_kernel() == a3
    assert L.product(full, full) == a3
    assert L.center("left") == L.center("right") == L.center("two_sided") == a3
    assert L.nilpotency_class() == 2
    assert L.upper_central_series() == [L.zero_space(), a3, full]
    assert L.is_extraspecial()
    ann = L.annihilator(L.basis_vector(0), "left")
    assert ann.dim == 2
    assert L.is_subalgebra(ann) and not L.is_abelian_subspace(ann)


# -- 7: derivations preserve centers and upper central terms ------------------

CATALOG = [(kind, F) for F in (QQ, GF(2), GF(3), GF(5)) for kind in KINDS]


@pytest.mark.criterion(7)
@pytest.mark.parametrize("kind, F", CATALOG, ids=[f"{k}-{F}" for k, F in CATALOG])
def test_invariant_subspaces(kind, F):
    L = build(kind, F).algebra
    spaces = [L.center(mode) for mode in ("left", "right", "two_sided")] + L.upper_central_series()
    for D in derivation_algebra(L).basis:
        assert all(maps_into(D, S) for S in spaces)


# -- 8: Der is a Lie algebra --------------------------------------------------


@pytest.mark.criterion(8)
@pytest.mark.parametrize("kind, F", CATALOG, ids=[f"{k}-{F}" for k, F in CATALOG])
def test_lie_soundness(kind, F):
    DA = derivation_algebra(build(kind, F).algebra)
    m, sc = DA.dim, DA.lie_sc
    zero = tuple([F.zero] * m)
    for a in range(m):
        for b in range(m):
            assert sc[a][b] == tuple(-x for x in sc[b][a])
            assert DA.element(sc[a][b]) == der_bracket(DA.basis[a], DA.basis[b])  # closure
    for a in range(m):
        for b in range(m):
            for c in range(m):
                # [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
                total = list(zero)
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    for d, coef in enumerate(sc[x][y]):
                        if coef:
                            total = [t + coef * s for t, s in zip(total, sc[d][z])]
                assert tuple(total) == zero


# -- 9: admissibility of lambda -----------------------------------------------


@pytest.mark.criterion(9)
def test_admissibility():
    assert not any(lei4_param_admissible(F2, lam) for lam in F2.elements() if lam)
    assert lei4_param_admissible(GF(3), 1) is True
    assert lei4_param_admissible(GF(5), 1) is False
    assert lei4_param_admissible(QQ, 1) is True


# -- 10: sanity anchors -------------------------------------------------------


@pytest.mark.criterion(10)
@pytest.mark.parametrize("F", [QQ, GF(2), GF(3)], ids=str)
@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_abelian_der_dimension(F, n):
    assert derivation_algebra(abelian(F, n).algebra).dim == n * n


@pytest.mark.criterion(10)
def test_heisenberg_gf3_solver_equals_oracle():
    L = heisenberg(GF(3)).algebra
    found = enumerate_derivations(L)
    assert matrix_span(L.field, found) == derivation_algebra(L).as_matrix_subspace()
    assert len(found) == 3 ** derivation_algebra(L).dim
