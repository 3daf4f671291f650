import pytest

from posknot.laurent import LaurentPoly, ZeroPolynomialError, lp_invert_var, parse_poly
from posknot.obstructions import (
    Verdict,
    check_fibered_bound,
    check_lemma4,
    check_positive_mindeg,
    classify_positivity,
)
from pds import V_12N148_MIRROR, V_LEFT_TREFOIL, V_POS_HOPF, V_POS_TREFOIL

M148 = parse_poly(V_12N148_MIRROR)


def test_positive_mindeg():
    assert check_positive_mindeg(parse_poly(V_LEFT_TREFOIL)).violated
    assert not check_positive_mindeg(parse_poly(V_POS_TREFOIL)).violated
    assert check_positive_mindeg(parse_poly("1")).violated
    with pytest.raises(ZeroPolynomialError):
        check_positive_mindeg(LaurentPoly())


def test_fibered_bound():
    r = check_fibered_bound(M148, 1, True)
    assert r.violated and r.details["max_deg"] == 13 and r.details["bound"] == 12
    r = check_fibered_bound(parse_poly(V_POS_TREFOIL), 1, True)
    assert not r.violated and r.details["max_deg"] == r.details["bound"] == 4
    r = check_fibered_bound(M148, 1, False)
    assert not r.applicable and not r.violated


def test_crossing_bound():
    assert not check_lemma4(parse_poly(V_POS_TREFOIL), 3).violated
    assert not check_lemma4(parse_poly(V_POS_HOPF), 2).violated
    assert check_lemma4(M148, 13).violated


def test_classify_positivity():
    v = classify_positivity(lp_invert_var(M148), True, "12n148")
    assert v.verdict is Verdict.NOT_POSITIVE
    as_given, mirrored = v.forms
    assert as_given.obstructions[0].violated
    assert [o.violated for o in mirrored.obstructions] == [False, True]
    assert classify_positivity(parse_poly(V_POS_TREFOIL), True).verdict is Verdict.INCONCLUSIVE
    assert classify_positivity(parse_poly("1"), True).verdict is Verdict.NOT_POSITIVE
    # without the fibered flag the mirror escapes
    assert classify_positivity(M148, False).verdict is Verdict.INCONCLUSIVE


def test_verdict_json():
    j = classify_positivity(M148, True, "x").to_json()
    assert j["verdict"] == "NotPositive" and len(j["forms"]) == 2
    assert j["forms"][0]["obstructions"][1]["details"]["bound"] == 12
