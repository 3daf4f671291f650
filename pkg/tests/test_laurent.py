from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from posknot.laurent import (
    LaurentError,
    LaurentPoly,
    Var,
    VariableMismatch,
    ZeroPolynomialError,
    bracket_to_jones,
    format_poly,
    lp_add,
    lp_degrees,
    lp_invert_var,
    lp_mul,
    parse_poly,
    t_degrees,
)
from pds import V_12N148_MIRROR, V_LEFT_TREFOIL, V_POS_HOPF, V_POS_TREFOIL

T = parse_poly


def A(text):
    return parse_poly(text, Var.A)


def test_add_examples():
    assert lp_add(T("t"), T("-t")).is_zero()
    assert lp_add(T("1 + t^4"), T("t^4")) == T("1 + 2t^4")
    assert lp_add(T(V_POS_TREFOIL), T("t^4")) == T("t + t^3")


def test_mul_examples():
    p = T("t + t^3 - t^4")
    assert lp_mul(p, T("1")) == p
    assert lp_mul(A("A + A^-1"), A("A - A^-1")) == A("A^2 - A^-2")
    loop = A("-A^2 - A^-2")
    assert lp_mul(loop, loop) == A("A^4 + 2 + A^-4")


def test_variable_mismatch():
    with pytest.raises(VariableMismatch):
        lp_add(T("t"), A("A"))
    with pytest.raises(VariableMismatch):
        lp_mul(T("t"), A("A"))


def test_degrees():
    assert lp_degrees(T("1")) == (0, 0)
    assert lp_degrees(T(V_POS_TREFOIL)) == (4, 16)
    assert lp_degrees(T(V_12N148_MIRROR)) == (12, 52)
    assert t_degrees(T(V_POS_HOPF)) == (Fraction(1, 2), Fraction(5, 2))
    with pytest.raises(ZeroPolynomialError):
        lp_degrees(LaurentPoly())


def test_invert():
    assert lp_invert_var(T("1")) == T("1")
    assert lp_invert_var(T(V_LEFT_TREFOIL)) == T("-t^4 + t^3 + t")


def test_bracket_to_jones_examples():
    assert bracket_to_jones(A("1"), 0, 1) == T("1")
    # positive Hopf: <D> = -A^4 - A^-4
    assert bracket_to_jones(A("-A^4 - A^-4"), 2, 2) == T(V_POS_HOPF)
    # positive trefoil: <D> = A^-7 - A^-3 - A^5
    assert bracket_to_jones(A("A^-7 - A^-3 - A^5"), 3, 1) == T(V_POS_TREFOIL)


def test_bracket_to_jones_congruence_guard():
    with pytest.raises(AssertionError):
        bracket_to_jones(A("A^2"), 0, 1)


def test_format_and_parse():
    assert format_poly(T(V_LEFT_TREFOIL)) == "-t^-4 + t^-3 + t^-1"
    assert format_poly(T(V_POS_HOPF)) == "-t^(1/2) - t^(5/2)"
    assert format_poly(LaurentPoly()) == "0"
    assert T("2*t^{7}") == T("2t^7")
    with pytest.raises(LaurentError):
        T("t^^2")
    with pytest.raises(LaurentError):
        T("t^(1/3)")


def test_negative_power_of_binomial_rejected():
    with pytest.raises(LaurentError):
        T("1 + t") ** -1


polys = st.dictionaries(st.integers(-40, 40), st.integers(-5, 5), max_size=6).map(LaurentPoly)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p - p).is_zero()


@given(polys, polys)
def test_invert_is_ring_involution(p, q):
    assert lp_invert_var(lp_invert_var(p)) == p
    assert lp_invert_var(p * q) == lp_invert_var(p) * lp_invert_var(q)


@given(polys)
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p)) == p
