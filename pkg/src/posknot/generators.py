"""Constructive Balanced and Burdened positive diagrams.

A leaf is grafted onto an A-circle ``C`` by laying a new small circle
``C'`` alongside ``C`` on one side, from a point on arc ``arc_x`` to a point
on arc ``arc_y``, and joining the two parallel lanes by a positive crossing
at each end. The stretch of ``C`` between the two points may only pass
crossings whose other circle lies on the far side of ``C``.

Every new crossing is written from the picture of two upward strands: the
strand entering bottom-right passes under to the top-left, the one entering
bottom-left passes over to the top-right, which in counterclockwise PD order
is ``[SE, NE, NW, SW]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from posknot.diagram import OrientedDiagram, assemble, from_text, is_planar, is_positive, is_split
from posknot.states import (
    Classification,
    MatchingPair,
    all_a_circles,
    all_b_circles,
    classify_diagram,
    induced_circle_map,
    matching_pairs,
    reduced_a_graph,
)

RIGHT = "right"
LEFT = "left"
MAX_CROSSINGS = 16


class GraftError(ValueError):
    pass


class LinearRng:
    """64-bit linear congruential generator.

    ``state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64)``;
    each draw returns the top 31 bits of the new state, and ``below(n)``
    reduces a draw modulo ``n``.
    """

    MULT = 6364136223846793005
    INC = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.state * self.MULT + self.INC) & self.MASK
        return self.state >> 33

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next() % n


@dataclass(frozen=True)
class GraftSpec:
    target_circle: int
    arc_x: int
    arc_y: int
    side: str | None = None


def unknot() -> OrientedDiagram:
    return from_text("")


def circle_arcs(D: OrientedDiagram, circle: int) -> list[tuple[int, str]]:
    """Arcs of an A-circle in travel order, with the turn taken at each arc's head.

    At a positive crossing the A-smoothing sends the entering slot ``a`` to
    the next slot counterclockwise (a right turn) and ``d`` to the previous
    one (a left turn).
    """
    dec = all_a_circles(D)
    arcs = [lab for lab in D.arcs() if dec.circle_of[D.arc_head[lab]] == circle]
    if not arcs:
        return []
    out = []
    lab = min(arcs)
    while True:
        h = D.arc_head[lab]
        pos = h % 4
        if pos == 0:
            turn, exit_slot = RIGHT, h + 1
        elif pos == 3:
            turn, exit_slot = LEFT, h - 1
        else:
            raise GraftError("circle_arcs needs a positive diagram")
        out.append((lab, turn))
        lab = D.label(exit_slot)
        if lab == out[0][0]:
            return out


def graft_options(D: OrientedDiagram, circle: int) -> list[GraftSpec]:
    """Every valid (arc_x, arc_y, side) on ``circle``, in a fixed order."""
    ring = circle_arcs(D, circle)
    if not ring:
        return [GraftSpec(circle, 0, 0, RIGHT), GraftSpec(circle, 0, 0, LEFT)]
    out = []
    L = len(ring)
    for i in range(L):
        x = ring[i][0]
        out.append(GraftSpec(circle, x, x, RIGHT))
        out.append(GraftSpec(circle, x, x, LEFT))
        # the far-side circle sits left of a right turn and right of a left turn
        for side, needed in ((RIGHT, RIGHT), (LEFT, LEFT)):
            for step in range(1, L):
                if ring[(i + step - 1) % L][1] != needed:
                    break
                out.append(GraftSpec(circle, x, ring[(i + step) % L][0], side))
    return out


def _check_spec(D: OrientedDiagram, spec: GraftSpec) -> str:
    options = graft_options(D, spec.target_circle) if spec.target_circle < all_a_circles(D).count else []
    sides = [o.side for o in options if (o.arc_x, o.arc_y) == (spec.arc_x, spec.arc_y)]
    if not sides:
        raise GraftError(f"no graft along arcs {spec.arc_x}->{spec.arc_y} of circle {spec.target_circle}")
    if spec.side is None:
        return RIGHT if RIGHT in sides else sides[0]
    if spec.side not in sides:
        raise GraftError(f"a leaf cannot sit on the {spec.side} of that stretch")
    return spec.side


def graft_leaf(D: OrientedDiagram, spec: GraftSpec) -> OrientedDiagram:
    if classify_diagram(D) is not Classification.BALANCED:
        raise GraftError("leaves are grafted onto Balanced diagrams")
    side = _check_spec(D, spec)
    crossings = [list(q) for q in D.crossings]
    fresh = iter(range(max(D.arcs(), default=0) + 1, 10**9))

    q, u = next(fresh), next(fresh)
    if D.c == 0:
        x1 = y2 = next(fresh)
        x2 = y1 = next(fresh)
    else:
        hx, hy = D.arc_head[spec.arc_x], D.arc_head[spec.arc_y]
        x1 = spec.arc_x
        if spec.arc_x == spec.arc_y:
            x2 = y1 = next(fresh)
            y2 = next(fresh)
            crossings[hx // 4][hx % 4] = y2
        else:
            x2, y1, y2 = next(fresh), spec.arc_y, next(fresh)
            crossings[hx // 4][hx % 4] = x2
            crossings[hy // 4][hy % 4] = y2
    if side == RIGHT:
        new = [(u, q, x2, x1), (q, u, y2, y1)]
    else:
        new = [(x1, x2, q, u), (y1, y2, u, q)]
    result = assemble([tuple(c) for c in crossings] + new, [1] * (D.c + 2))
    _check_graft(D, result, spec.target_circle)
    return result


def _check_graft(D: OrientedDiagram, G: OrientedDiagram, target: int) -> None:
    if not (is_positive(G) and is_planar(G) and not is_split(G)):
        raise AssertionError("grafted diagram is not a positive planar connected diagram")
    if classify_diagram(G) is not Classification.BALANCED:
        raise AssertionError("grafted diagram is not Balanced")
    old_a, new_a = all_a_circles(D), all_a_circles(G)
    if new_a.count != old_a.count + 1:
        raise AssertionError("graft must add exactly one A-circle")
    if D.c:
        cmap = induced_circle_map(D, G, list(range(D.c)))
        if cmap is None:
            raise AssertionError("graft disturbed the existing A-circles")
        anchor = cmap[target]
    else:
        anchor = None
    ends = {frozenset((new_a.circle_of[4 * x], new_a.circle_of[4 * x + 2])) for x in (D.c, D.c + 1)}
    if len(ends) != 1:
        raise AssertionError("the two new crossings must join the same pair of circles")
    (pair,) = ends
    if anchor is not None and anchor not in pair:
        raise AssertionError("the leaf is attached to the wrong circle")
    dn = G.n_components - D.n_components
    db = all_b_circles(G).count - all_b_circles(D).count
    if abs(dn) != 1 or abs(db) != 1:
        raise AssertionError("a leaf changes n and |B| by one each")


def random_balanced(k: int, seed: int) -> OrientedDiagram:
    """Balanced diagram with ``k`` A-circles from ``k - 1`` seeded grafts."""
    if k < 1:
        raise ValueError("a Balanced diagram has at least one A-circle")
    rng = LinearRng(seed)
    D = unknot()
    for _ in range(k - 1):
        target = rng.below(all_a_circles(D).count)
        options = graft_options(D, target)
        D = graft_leaf(D, options[rng.below(len(options))])
    return D


def inflate_pair(D: OrientedDiagram, pair: MatchingPair, extra: int) -> OrientedDiagram:
    """Widen a matching pair's band by ``extra`` positive crossings."""
    if extra < 0:
        raise ValueError("extra must be nonnegative")
    pairs = matching_pairs(D)
    if pair not in pairs:
        raise GraftError(f"{pair} is not a matching pair of this diagram")
    return _twist(D, min(pair.crossings), extra)


def _twist(D: OrientedDiagram, x: int, extra: int) -> OrientedDiagram:
    if extra == 0:
        return D
    crossings = [list(q) for q in D.crossings]
    fresh = iter(range(max(D.arcs()) + 1, 10**9))
    for _ in range(extra):
        a, b, c, d = crossings[x]
        b2, c2 = next(fresh), next(fresh)
        crossings[x] = [a, b2, c2, d]
        crossings.append([b2, b, c, c2])
    G = assemble([tuple(q) for q in crossings], [1] * len(crossings), 0)
    if not (is_positive(G) and is_planar(G)):
        raise AssertionError("twisting produced an invalid diagram")
    cmap = induced_circle_map(D, G, list(range(D.c)))
    if cmap is None or all_a_circles(G).count != all_a_circles(D).count:
        raise AssertionError("twisting changed the A-circles")
    return G


def random_burdened(seed: int, max_crossings: int = MAX_CROSSINGS) -> OrientedDiagram:
    """Random Balanced diagram with some matching pairs widened, ``c <= max_crossings``."""
    rng = LinearRng(seed)
    k = 2 + rng.below(max(1, max_crossings // 2 - 1))
    D = random_balanced(k, rng.next())
    budget = max_crossings - D.c
    pairs = matching_pairs(D)
    widen = {}
    for _ in range(1 + rng.below(len(pairs))):
        if budget <= 0:
            break
        p = pairs[rng.below(len(pairs))]
        e = 1 + rng.below(min(budget, 3))
        widen[min(p.crossings)] = widen.get(min(p.crossings), 0) + e
        budget -= e
    # append crossings from the highest id down so earlier ids stay put
    for x in sorted(widen, reverse=True):
        D = _twist(D, x, widen[x])
    if classify_diagram(D) not in (Classification.BALANCED, Classification.BURDENED):
        raise AssertionError("widened diagram is not Burdened")
    return D


def generated_reduced_graph_edges(D: OrientedDiagram) -> int:
    return len(reduced_a_graph(D).multiplicity)
