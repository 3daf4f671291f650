import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posknot.diagram import from_text, mirror
from posknot.generators import LinearRng, random_burdened
from posknot.suites import SUITES, check_prop6, random_sequences, run_suite
from pds import LEFT_TREFOIL, POS_5_2


@pytest.mark.parametrize("name", SUITES)
def test_small_suites_pass(name):
    res = run_suite(name, 8, 3)
    assert res.cases >= 8 and res.ok, res.failures[:3]


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope", 1, 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32))
def test_prefix_bounds_on_arbitrary_sequences(seed):
    rng = LinearRng(seed)
    for D in (random_burdened(seed, 10), mirror(from_text(POS_5_2)), from_text(LEFT_TREFOIL)):
        for seq in random_sequences(D, rng, 2):
            assert check_prop6(D, seq) == []
