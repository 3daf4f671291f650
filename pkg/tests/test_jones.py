import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import oracle_jones
from posknot.census import load_census
from posknot.diagram import from_text, mirror
from posknot.generators import random_balanced, random_burdened
from posknot.jones import (
    CapacityError,
    circle_counts,
    jones,
    jones_polynomial,
    kauffman_bracket,
    stoimenow_v1,
    v_coefficient,
)
from posknot.laurent import LaurentPoly, Var, ZeroPolynomialError, lp_invert_var, parse_poly
from posknot.states import NotPositiveError, state_circles
from pds import KINKS, LEFT_TREFOIL, POS_5_2, POS_HOPF, POS_TREFOIL, V_12N148_MIRROR, V_LEFT_TREFOIL, V_POS_TREFOIL


def test_bracket_examples():
    assert kauffman_bracket(from_text("")) == LaurentPoly.constant(1, Var.A)
    brackets = {kauffman_bracket(from_text(k)) for k in KINKS}
    assert brackets == {LaurentPoly({3: -1}, Var.A), LaurentPoly({-3: -1}, Var.A)}


def test_jones_examples():
    for t in ("", *KINKS):
        assert jones(from_text(t)) == parse_poly("1")
    assert jones(from_text(LEFT_TREFOIL)) == parse_poly(V_LEFT_TREFOIL)
    assert jones(from_text(POS_TREFOIL)) == parse_poly(V_POS_TREFOIL)


def test_census_knot_mirror():
    rec = next(r for r in load_census("data/census12.jsonl") if r.name == "12n148")
    assert lp_invert_var(jones(from_text(rec.pd_text))) == parse_poly(V_12N148_MIRROR)


def test_extra_unknots_multiply_by_loop_value():
    V = jones(from_text("U1;" + POS_TREFOIL))
    assert V == parse_poly(V_POS_TREFOIL) * parse_poly("-t^(1/2) - t^(-1/2)")


def test_capacity():
    D = from_text(POS_TREFOIL)
    with pytest.raises(CapacityError, match="--cap"):
        kauffman_bracket(D, cap=2)


def test_v_coefficient():
    V = parse_poly(V_POS_TREFOIL)
    assert v_coefficient(V, 0) == 1 and v_coefficient(V, 1) == 0
    assert v_coefficient(parse_poly(V_12N148_MIRROR), 3) == 1
    with pytest.raises(ZeroPolynomialError):
        v_coefficient(LaurentPoly(), 1)


def test_v1_prediction_examples():
    assert stoimenow_v1(from_text(POS_TREFOIL)) == 0
    assert stoimenow_v1(from_text(POS_HOPF)) == 0
    D = from_text(POS_5_2)
    assert stoimenow_v1(D) == v_coefficient(jones(D), 1) == -1
    with pytest.raises(NotPositiveError):
        stoimenow_v1(from_text(LEFT_TREFOIL))


@pytest.mark.parametrize("text", [LEFT_TREFOIL, POS_TREFOIL, POS_HOPF, POS_5_2, *KINKS])
def test_engine_matches_skein_oracle(text):
    t = sp.Symbol("t")
    V = jones(from_text(text))
    ours = sum(c * t ** sp.Rational(e, 4) for e, c in V.items())
    assert sp.expand(ours - oracle_jones(text)) == 0


def test_vectorized_circles_match_union_find():
    D = random_burdened(11)
    masks = np.arange(1 << D.c)
    fast = circle_counts(D, masks)
    for m in range(0, 1 << D.c, 37):
        sigma = "".join("B" if m >> x & 1 else "A" for x in range(D.c))
        assert fast[m] == state_circles(D, sigma).count


def test_threads_do_not_change_result():
    D = from_text(open("data/census12.jsonl").readline().split('"pd": "')[1].split('"')[0])
    assert jones_polynomial(D, threads=4) == jones_polynomial(D, threads=1)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 6), st.integers(0, 2**32))
def test_mirror_inverts_variable(k, seed):
    D = random_balanced(k, seed)
    assert jones(mirror(D)) == lp_invert_var(jones(D))
