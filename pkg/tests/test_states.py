import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posknot.diagram import from_text, is_positive, is_split, mirror
from posknot.generators import graft_leaf, graft_options, inflate_pair, random_balanced, unknot
from posknot.jones import jones
from posknot.laurent import parse_poly
from posknot.states import (
    Classification,
    ClassificationError,
    MatchingPair,
    NotPositiveError,
    SelfLoopError,
    StateError,
    a_state_graph,
    all_a_circles,
    all_b_circles,
    balancing_sequence,
    classify_diagram,
    diagram_is_synchronized,
    matching_pairs,
    pair_is_synchronized,
    reduce_graph,
    seifert_circles,
    smooth_crossing,
    smooth_sequence,
    state_circles,
    verify_balance_theorem,
)
from pds import LEFT_TREFOIL, POS_HOPF, POS_TREFOIL, V_POS_HOPF, V_POS_TREFOIL

P = from_text(POS_TREFOIL)
H = from_text(POS_HOPF)
U = from_text("")


def chain3():
    D = graft_leaf(unknot(), graft_options(unknot(), 0)[0])
    return graft_leaf(D, graft_options(D, 1)[0])


def test_state_circles_examples():
    L = from_text(LEFT_TREFOIL)
    assert state_circles(L, "AAA").count in (2, 3)
    assert state_circles(P, "AAA").count == 2
    assert state_circles(P, "BBB").count == 3
    assert state_circles(U, "").count == 1
    with pytest.raises(StateError):
        state_circles(P, "AA")
    with pytest.raises(StateError):
        state_circles(P, "AAC")


def test_state_circles_match_oracle_enumeration():
    from oracles import _loops, pd_quads

    quads = pd_quads(POS_TREFOIL)
    for bits in range(8):
        sigma = "".join("B" if bits >> x & 1 else "A" for x in range(3))
        assert state_circles(P, sigma).count == _loops(quads, sigma)


def test_circle_counts():
    assert seifert_circles(P).count == 2 and seifert_circles(H).count == 2 and seifert_circles(U).count == 1
    assert all_b_circles(H).count == 2 and all_b_circles(P).count == 3 and all_b_circles(U).count == 1


def test_state_graphs():
    g = a_state_graph(P)
    assert g.n_vertices == 2 and len(g.edges) == 3
    assert a_state_graph(H).n_vertices == 2 and len(a_state_graph(H).edges) == 2
    assert a_state_graph(U).n_vertices == 1 and not a_state_graph(U).edges
    r = reduce_graph(g)
    assert dict(r.multiplicity) == {(0, 1): 3} and r.is_tree
    assert dict(reduce_graph(a_state_graph(H)).multiplicity) == {(0, 1): 2}
    ru = reduce_graph(a_state_graph(U))
    assert not ru.multiplicity and ru.is_tree


def test_self_loop_detected():
    with pytest.raises(SelfLoopError):
        a_state_graph(from_text("X[1,2,2,1]"))
    # the opposite kink splits into two A-circles joined once
    assert len(a_state_graph(from_text("X[1,1,2,2]")).edges) == 1


def test_classify():
    assert classify_diagram(H) is Classification.BALANCED
    assert classify_diagram(P) is Classification.BURDENED
    assert classify_diagram(U) is Classification.BALANCED
    assert classify_diagram(from_text(
        "X[1,5,2,4];X[3,9,4,8];X[5,1,6,10];X[7,3,8,2];X[9,7,10,6]")) is Classification.NEITHER
    with pytest.raises(NotPositiveError):
        classify_diagram(from_text(LEFT_TREFOIL))
    with pytest.raises(ClassificationError):
        classify_diagram(from_text("U1;"))


def test_matching_pairs():
    assert len(matching_pairs(H)) == 1
    assert matching_pairs(U) == []
    assert len(matching_pairs(chain3())) == 2
    with pytest.raises(ClassificationError):
        matching_pairs(P)


def test_synchronization_and_balance():
    (pair,) = matching_pairs(H)
    assert pair_is_synchronized(H, pair)
    assert diagram_is_synchronized(H) and diagram_is_synchronized(U)
    assert verify_balance_theorem(H) and verify_balance_theorem(U)
    C = chain3()
    assert C.n_components == 3 and all_b_circles(C).count == 3 and verify_balance_theorem(C)
    with pytest.raises(StateError):
        pair_is_synchronized(H, MatchingPair((0, 1), (0, 5)))
    with pytest.raises(ClassificationError):
        diagram_is_synchronized(P)


def test_smooth_crossing():
    for x in range(3):
        E = smooth_crossing(P, x)
        assert E.c == 2 and E.n_components == 2 and jones(E) == parse_poly(V_POS_HOPF)
    for x in range(2):
        E = smooth_crossing(H, x)
        assert E.c == 1 and E.n_components == 1 and jones(E) == parse_poly("1")
    last = smooth_sequence(P, [2, 0, 1])[-1]
    assert last.c == 0 and last.n_components == 2
    with pytest.raises(StateError):
        smooth_crossing(P, 3)
    with pytest.raises(StateError):
        smooth_sequence(P, [0, 0])


def test_smooth_all_gives_seifert_circles_on_mixed_diagram():
    L = from_text(LEFT_TREFOIL)
    assert smooth_sequence(L, [0, 1, 2])[-1].n_components == seifert_circles(L).count


def test_balancing_sequence():
    assert balancing_sequence(H) == []
    seq = balancing_sequence(P)
    assert len(seq) == 1
    E = smooth_sequence(P, seq)[-1]
    assert E.c == 2 and jones(E) == parse_poly(V_POS_HOPF)
    T25 = inflate_pair(H, matching_pairs(H)[0], 3)
    assert T25.c == 5 and T25.n_components == 1
    seq = balancing_sequence(T25)
    assert len(seq) == 3 and classify_diagram(smooth_sequence(T25, seq)[-1]) is Classification.BALANCED
    with pytest.raises(ClassificationError):
        balancing_sequence(from_text("X[1,5,2,4];X[3,9,4,8];X[5,1,6,10];X[7,3,8,2];X[9,7,10,6]"))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**32))
def test_generated_balanced_invariants(k, seed):
    D = random_balanced(k, seed)
    assert is_positive(D) and not is_split(D)
    assert classify_diagram(D) is Classification.BALANCED
    assert all_a_circles(D).count == k and D.c == 2 * (k - 1)
    assert verify_balance_theorem(D) and diagram_is_synchronized(D)
    for p in matching_pairs(D):
        assert pair_is_synchronized(D, p)
        assert is_split(smooth_sequence(D, list(p.crossings))[-1])
