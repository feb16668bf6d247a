from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from leibniz.errors import DivisionByZero, MixedFieldsError
from leibniz.fields import GF, QQ, FieldSpec, Residue, arith, characteristic, field_from_label, is_2_closed, is_square


def test_rational_add():
    assert arith(QQ, "add", Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_gf3_mul():
    F = GF(3)
    assert arith(F, "mul", F(2), F(2)) == F(1)


def test_gf5_div_matches_search():
    F = GF(5)
    # exhaustive: the x with 2x = 1
    (expected,) = [x for x in F.elements() if F(2) * x == F(1)]
    assert arith(F, "div", F(1), F(2)) == expected == F(3)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        arith(GF(7), "div", GF(7)(3), GF(7)(0))
    with pytest.raises(DivisionByZero):
        arith(QQ, "div", Fraction(1), Fraction(0))


def test_mixed_fields():
    with pytest.raises(MixedFieldsError):
        arith(GF(3), "add", GF(3)(1), GF(5)(1))
    with pytest.raises(MixedFieldsError):
        GF(3)(1) + Fraction(1, 2)
    with pytest.raises(MixedFieldsError):
        Fraction(1, 2) * GF(3)(1)
    with pytest.raises(MixedFieldsError):
        arith(QQ, "add", Fraction(1), GF(2)(1))


@pytest.mark.parametrize("F, expected", [(QQ, 0), (GF(2), 2), (GF(7), 7)])
def test_characteristic(F, expected):
    assert characteristic(F) == expected


@pytest.mark.parametrize("p", [0, 1, 4, 9, 15])
def test_non_prime_rejected(p):
    with pytest.raises(ValueError):
        GF(p)


def test_is_square_examples():
    assert is_square(GF(5), 4) == (True, GF(5)(2))
    assert is_square(GF(3), 2) == (False, None)
    assert is_square(QQ, Fraction(9, 4)) == (True, Fraction(3, 2))
    assert is_square(QQ, 2) == (False, None)
    assert is_square(QQ, -4) == (False, None)
    assert is_square(QQ, 0) == (True, Fraction(0))
    assert is_square(GF(7), 0) == (True, GF(7)(0))


def test_gf5_square_matches_enumeration():
    F = GF(5)
    squares = {x * x for x in F.elements()}
    for a in F.elements():
        assert is_square(F, a)[0] == (a in squares)


def test_is_2_closed():
    assert is_2_closed(GF(2))
    assert not is_2_closed(GF(3))
    assert not is_2_closed(QQ)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_half_the_residues_are_squares(p):
    F = GF(p)
    assert sum(is_square(F, a)[0] for a in F.elements()) == (p + 1) // 2


def test_parse_literals():
    assert QQ.parse("-6/4") == Fraction(-3, 2)
    assert QQ.parse("+7") == Fraction(7)
    assert GF(5).parse("-1") == GF(5)(4)
    assert GF(5).parse("12") == GF(5)(2)
    for bad in ("1.5", "1e3", "", "1/0", "a"):
        with pytest.raises((ValueError, ZeroDivisionError)):
            QQ.parse(bad)


def test_field_labels():
    assert field_from_label("Q") == QQ
    assert field_from_label("GF:7") == GF(7)
    assert field_from_label("GF(3)") == GF(3)
    assert GF(7).label == "GF:7"
    with pytest.raises(ValueError):
        field_from_label("R")


def test_residue_is_immutable():
    x = GF(3)(1)
    with pytest.raises(AttributeError):
        x.value = 2


def test_fieldspec_rejects_unknown_kind():
    with pytest.raises(ValueError):
        FieldSpec("R")


rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
primes = st.sampled_from([2, 3, 5, 7, 11, 13, 101])


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    a, b, c = QQ(a), QQ(b), QQ(c)
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    if a:
        assert arith(QQ, "mul", a, arith(QQ, "div", QQ(1), a)) == 1


@given(primes, st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(p, x, y, z):
    F = GF(p)
    a, b, c = F(x), F(y), F(z)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero
    if a:
        assert a * (F.one / a) == F.one


@given(primes, st.integers())
def test_canonical_residues(p, x):
    r = GF(p)(x)
    assert 0 <= r.value < p
    assert GF(p)(r) == r and Residue(r.value, p) == r


@given(rationals)
def test_canonical_rationals(q):
    x = QQ(q)
    assert x.denominator > 0
    assert QQ(str(x)) == x


@given(primes, st.integers())
def test_square_witness(p, x):
    F = GF(p)
    ok, r = is_square(F, F(x))
    if ok:
        assert arith(F, "mul", r, r) == F(x)


@given(rationals)
def test_rational_square_witness(q):
    ok, r = is_square(QQ, q)
    if ok:
        assert r * r == q
    ok2, r2 = is_square(QQ, q * q)
    assert ok2 and r2 * r2 == q * q
