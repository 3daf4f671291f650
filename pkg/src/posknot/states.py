"""Smoothing states, A-state graphs, Balanced/Burdened diagrams.

The A-smoothing of ``X[a,b,c,d]`` joins slots ``(a,b)`` and ``(c,d)``; the
B-smoothing joins ``(a,d)`` and ``(b,c)``. At a positive crossing the
A-smoothing is the oriented (Seifert) smoothing, at a negative one the
B-smoothing is.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from posknot._uf import UnionFind
from posknot.diagram import OrientedDiagram, assemble, is_positive, is_split

A_PAIRS = ((0, 1), (2, 3))
B_PAIRS = ((0, 3), (1, 2))


class StateError(ValueError):
    pass


class NotPositiveError(StateError):
    pass


class ClassificationError(StateError):
    pass


class SelfLoopError(StateError):
    """A crossing whose A-smoothed strands lie on one A-circle."""


class Classification(enum.Enum):
    BALANCED = "Balanced"
    BURDENED = "Burdened"
    NEITHER = "Neither"


@dataclass(frozen=True)
class CircleDecomposition:
    # circle index for every slot 4*x + pos; free loops take the last indices
    circle_of: tuple[int, ...]
    count: int

    def slots_on(self, circle: int) -> list[int]:
        return [s for s, k in enumerate(self.circle_of) if k == circle]


def _as_choices(D: OrientedDiagram, sigma) -> list[str]:
    choices = list(sigma)
    if len(choices) != D.c:
        raise StateError(f"state has {len(choices)} choices for {D.c} crossings")
    out = []
    for ch in choices:
        ch = ch.upper() if isinstance(ch, str) else ("A" if ch else "B")
        if ch not in ("A", "B"):
            raise StateError(f"smoothing choice {ch!r} is neither A nor B")
        out.append(ch)
    return out


def state_circles(D: OrientedDiagram, sigma: Sequence[str] | str) -> CircleDecomposition:
    """Circles of the state ``sigma`` (one ``'A'``/``'B'`` per crossing)."""
    choices = _as_choices(D, sigma)
    n = 4 * D.c
    uf = UnionFind(n)
    for lab, t in D.arc_tail.items():
        uf.union(t, D.arc_head[lab])
    for x, ch in enumerate(choices):
        for p, q in A_PAIRS if ch == "A" else B_PAIRS:
            uf.union(4 * x + p, 4 * x + q)
    index: dict[int, int] = {}
    circle_of = []
    for s in range(n):
        r = uf.find(s)
        if r not in index:
            index[r] = len(index)
        circle_of.append(index[r])
    return CircleDecomposition(tuple(circle_of), len(index) + D.free_loops)


def seifert_state(D: OrientedDiagram) -> str:
    return "".join("A" if s > 0 else "B" for s in D.signs)


def seifert_circles(D: OrientedDiagram) -> CircleDecomposition:
    dec = state_circles(D, seifert_state(D))
    if is_positive(D):
        assert dec == state_circles(D, "A" * D.c), "A-circles differ from Seifert circles"
    return dec


def all_a_circles(D: OrientedDiagram) -> CircleDecomposition:
    return state_circles(D, "A" * D.c)


def all_b_circles(D: OrientedDiagram) -> CircleDecomposition:
    return state_circles(D, "B" * D.c)


# -- A-state graphs ----------------------------------------------------------

@dataclass(frozen=True)
class StateGraph:
    n_vertices: int
    # edges[x] joins the two A-circles at crossing x
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ReducedStateGraph:
    n_vertices: int
    multiplicity: dict[tuple[int, int], int]
    crossings_on: dict[tuple[int, int], tuple[int, ...]]
    is_tree: bool

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.multiplicity)


def a_state_graph(D: OrientedDiagram) -> StateGraph:
    dec = all_a_circles(D)
    edges = []
    for x in range(D.c):
        u, v = dec.circle_of[4 * x], dec.circle_of[4 * x + 2]
        if u == v:
            raise SelfLoopError(f"crossing {x} touches a single A-circle twice")
        edges.append((min(u, v), max(u, v)))
    return StateGraph(dec.count, tuple(edges))


def reduce_graph(G: StateGraph) -> ReducedStateGraph:
    crossings_on: dict[tuple[int, int], list[int]] = {}
    for x, e in enumerate(G.edges):
        crossings_on.setdefault(e, []).append(x)
    uf = UnionFind(G.n_vertices)
    for u, v in crossings_on:
        uf.union(u, v)
    tree = uf.count == 1 and len(crossings_on) == G.n_vertices - 1
    return ReducedStateGraph(
        G.n_vertices,
        {e: len(xs) for e, xs in sorted(crossings_on.items())},
        {e: tuple(xs) for e, xs in sorted(crossings_on.items())},
        tree,
    )


def reduced_a_graph(D: OrientedDiagram) -> ReducedStateGraph:
    return reduce_graph(a_state_graph(D))


def classify_diagram(D: OrientedDiagram) -> Classification:
    if not is_positive(D):
        raise NotPositiveError("Balanced/Burdened are defined for positive diagrams only")
    if is_split(D):
        raise ClassificationError("Balanced/Burdened are defined for non-split diagrams only")
    R = reduced_a_graph(D)
    if not R.is_tree:
        return Classification.NEITHER
    mults = R.multiplicity.values()
    if all(k == 2 for k in mults):
        return Classification.BALANCED
    if all(k >= 2 for k in mults):
        return Classification.BURDENED
    return Classification.NEITHER


# -- matching pairs and synchronization ---------------------------------------

@dataclass(frozen=True)
class MatchingPair:
    circles: tuple[int, int]
    crossings: tuple[int, int]


def _require_balanced(D: OrientedDiagram) -> None:
    cls = classify_diagram(D)
    if cls is not Classification.BALANCED:
        raise ClassificationError(f"diagram is {cls.value}, not Balanced")


def matching_pairs(D: OrientedDiagram) -> list[MatchingPair]:
    _require_balanced(D)
    R = reduced_a_graph(D)
    return [MatchingPair(e, R.crossings_on[e]) for e in R.edges]


def _same_partition(slots: Iterable[int], left, right) -> bool:
    slots = list(slots)
    return all((left(s) == left(t)) == (right(s) == right(t)) for s, t in combinations(slots, 2))


def _sync_labels(D: OrientedDiagram):
    a = all_a_circles(D)
    b = all_b_circles(D)
    comp = D.component_of

    def b_of(s):
        return b.circle_of[s]

    def comp_of(s):
        return comp[D.label(s)]

    return a, b_of, comp_of


def pair_is_synchronized(D: OrientedDiagram, pair: MatchingPair) -> bool:
    if pair not in matching_pairs(D):
        raise StateError(f"{pair} is not a matching pair of this diagram")
    a, b_of, comp_of = _sync_labels(D)
    for circle in pair.circles:
        slots = [4 * x + p for x in pair.crossings for p in range(4) if a.circle_of[4 * x + p] == circle]
        if not _same_partition(slots, b_of, comp_of):
            return False
    return True


def diagram_is_synchronized(D: OrientedDiagram) -> bool:
    pairs = matching_pairs(D)
    a, b_of, comp_of = _sync_labels(D)
    result = all(_same_partition(a.slots_on(k), b_of, comp_of) for k in range(a.count))
    by_pairs = all(pair_is_synchronized(D, p) for p in pairs)
    if result != by_pairs:
        raise AssertionError("diagram synchronization disagrees with its matching pairs")
    return result


def verify_balance_theorem(D: OrientedDiagram) -> bool:
    _require_balanced(D)
    return D.n_components == all_b_circles(D).count


# -- smoothing ---------------------------------------------------------------

def _oriented_pairs(sign: int) -> tuple[tuple[int, int], tuple[int, int]]:
    # (entering slot, exiting slot) joined by the Seifert smoothing
    return ((0, 1), (3, 2)) if sign > 0 else ((0, 3), (1, 2))


def smooth_crossing(D: OrientedDiagram, x: int) -> OrientedDiagram:
    """Seifert-smooth crossing ``x``; the remaining crossings keep their order."""
    if not 0 <= x < D.c:
        raise StateError(f"no crossing {x} in a {D.c}-crossing diagram")
    quad = D.crossings[x]
    labels = sorted(set(D.arc_tail))
    pos = {lab: i for i, lab in enumerate(labels)}
    uf = UnionFind(len(labels))
    for e, o in _oriented_pairs(D.signs[x]):
        uf.union(pos[quad[e]], pos[quad[o]])
    rest = [q for i, q in enumerate(D.crossings) if i != x]
    signs = [s for i, s in enumerate(D.signs) if i != x]
    new = [tuple(labels[uf.find(pos[lab])] for lab in q) for q in rest]
    used = {uf.find(pos[lab]) for q in rest for lab in q}
    closed = {uf.find(pos[lab]) for lab in quad} - used
    result = assemble(new, signs, D.free_loops + len(closed))

    if abs(result.n_components - D.n_components) != 1:
        raise AssertionError("oriented smoothing must change the component count by one")
    db = abs(all_b_circles(result).count - all_b_circles(D).count)
    if db != (1 if D.signs[x] > 0 else 0):
        raise AssertionError("B-circle count changed unexpectedly under smoothing")
    return result


def smooth_sequence(D: OrientedDiagram, xs: Sequence[int]) -> list[OrientedDiagram]:
    """Diagrams ``D_0 .. D_m`` from smoothing ``xs`` (ids of ``D``) in order."""
    if len(set(xs)) != len(xs):
        raise StateError("crossings of a smoothing sequence must be distinct")
    out = [D]
    done: list[int] = []
    for x in xs:
        if not 0 <= x < D.c:
            raise StateError(f"no crossing {x} in a {D.c}-crossing diagram")
        cur = x - sum(1 for y in done if y < x)
        out.append(smooth_crossing(out[-1], cur))
        done.append(x)
    return out


def balancing_sequence(D: OrientedDiagram) -> list[int]:
    cls = classify_diagram(D)
    if cls is Classification.NEITHER:
        raise ClassificationError("only Burdened diagrams have a balancing sequence")
    R = reduced_a_graph(D)
    seq = sorted(x for e in R.edges for x in R.crossings_on[e][: R.multiplicity[e] - 2])
    s = R.n_vertices
    if len(seq) != D.c - 2 * (s - 1):
        raise AssertionError("balancing sequence length differs from c - 2(s - 1)")
    return seq


def induced_circle_map(D0: OrientedDiagram, D1: OrientedDiagram, kept: Sequence[int]) -> dict[int, int] | None:
    """Map A-circles of ``D0`` to those of ``D1`` through surviving crossings.

    ``kept[i]`` is the id in ``D0`` of crossing ``i`` of ``D1``. Returns
    ``None`` when the map is not a well-defined bijection.
    """
    a0, a1 = all_a_circles(D0), all_a_circles(D1)
    mapping: dict[int, int] = {}
    for new_x, old_x in enumerate(kept):
        for p in range(4):
            u, v = a0.circle_of[4 * old_x + p], a1.circle_of[4 * new_x + p]
            if mapping.setdefault(u, v) != v:
                return None
    if len(set(mapping.values())) != len(mapping):
        return None
    return mapping
