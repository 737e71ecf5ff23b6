from platcalc.laurent import DELTA, LaurentPoly


def test_arithmetic_and_normalization():
    p = LaurentPoly({2: 1, 0: 3, -1: 0})
    q = LaurentPoly({2: -1})
    assert (p + q) == LaurentPoly({0: 3})
    assert p - p == LaurentPoly.zero()
    assert not LaurentPoly({5: 0})
    assert (p * LaurentPoly.one()) == p


def test_delta_square():
    assert DELTA**2 == LaurentPoly({4: 1, 0: 2, -4: 1})


def test_exact_division():
    assert (DELTA**3).divide_exact(DELTA) == DELTA**2
    assert (DELTA * LaurentPoly.monomial(7, -3)).divide_exact(DELTA) == LaurentPoly.monomial(7, -3)


def test_unit_multiple():
    assert (DELTA**2).shift(6).is_unit_multiple_of(DELTA**2)
    assert (-1 * DELTA**2).shift(-3).is_unit_multiple_of(DELTA**2)
    assert not (DELTA**2 + 1).is_unit_multiple_of(DELTA**2)
    k = (DELTA.shift(3) * -1).unit_shift_from(DELTA)
    assert k == (3, -1)


def test_str_contract():
    assert str(LaurentPoly.zero()) == "0"
    assert str(DELTA**2) == "A^4 + 2 + A^-4"
    assert str(LaurentPoly({3: -1, 0: 5, -2: 2})) == "-A^3 + 5 + 2*A^-2"


def test_mirror_substitution():
    p = LaurentPoly({3: 4, -1: -2})
    assert p.substitute_inverse() == LaurentPoly({-3: 4, 1: -2})
