"""Kauffman bracket by exhaustive state sum, and the Jones polynomial.

States are enumerated as bit masks (bit ``x`` set means B at crossing ``x``)
and processed in numpy blocks. In each state the arc pairing and the
smoothing pairing are two fixed-point-free involutions on the ``4c`` slots;
their product has exactly two cycles per circle, and cycles are counted by
pointer doubling on minimum labels.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from posknot.diagram import OrientedDiagram, is_positive, is_split, writhe
from posknot.laurent import LaurentPoly, Var, ZeroPolynomialError, bracket_to_jones, lp_add, t_degrees
from posknot.states import NotPositiveError, all_a_circles, reduced_a_graph

DEFAULT_CAP = 20
BLOCK_BITS = 14

LOOP = LaurentPoly({2: -1, -2: -1}, Var.A)


class CapacityError(ValueError):
    pass


@dataclass(frozen=True)
class JonesResult:
    bracket: LaurentPoly
    jones: LaurentPoly
    writhe: int
    n_components: int
    min_deg_t: Fraction
    max_deg_t: Fraction


def _slot_mates(D: OrientedDiagram) -> np.ndarray:
    mates = np.empty(4 * D.c, dtype=np.int64)
    for lab, t in D.arc_tail.items():
        h = D.arc_head[lab]
        mates[t], mates[h] = h, t
    return mates


def circle_counts(D: OrientedDiagram, masks: np.ndarray) -> np.ndarray:
    """Number of circles (crossing pieces only) for every state in ``masks``."""
    c = D.c
    n = 4 * c
    masks = np.asarray(masks, dtype=np.int64)
    if c == 0:
        return np.zeros(len(masks), dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(c)) & 1).astype(bool)
    base = (4 * np.arange(c)).astype(np.int32)
    # A joins (0,1),(2,3); B joins (0,3),(1,2)
    partner = np.empty((len(masks), n), dtype=np.int32)
    partner[:, 0::4] = np.where(bits, base + 3, base + 1)
    partner[:, 1::4] = np.where(bits, base + 2, base)
    partner[:, 2::4] = np.where(bits, base + 1, base + 3)
    partner[:, 3::4] = np.where(bits, base, base + 2)
    # flatten all states into one index space so each gather is a single take
    offsets = (np.arange(len(masks), dtype=np.int32) * n)[:, None]
    step = (_slot_mates(D).astype(np.int32)[partner] + offsets).ravel()
    label = np.tile(np.arange(n, dtype=np.int32), len(masks))
    # every cycle has at most n/2 slots, so log2(n) doublings cover it
    for _ in range(max(1, math.ceil(math.log2(n)))):
        np.minimum(label, label[step], out=label)
        step = step[step]
    cycles = (label.reshape(len(masks), n) == np.arange(n, dtype=np.int32)).sum(axis=1)
    return cycles // 2


def _block_bracket(D: OrientedDiagram, lo: int, hi: int, loop_powers: dict[int, LaurentPoly]) -> LaurentPoly:
    masks = np.arange(lo, hi, dtype=np.int64)
    loops = circle_counts(D, masks) + D.free_loops
    nb = np.zeros(len(masks), dtype=np.int64)
    for x in range(D.c):
        nb += (masks >> x) & 1
    a_minus_b = D.c - 2 * nb
    keys, counts = np.unique(np.stack([a_minus_b, loops]), axis=1, return_counts=True)
    acc: dict[int, int] = {}
    for (e, k), m in zip(keys.T.tolist(), counts.tolist()):
        for pe, pc in loop_powers[k - 1].items():
            acc[e + pe] = acc.get(e + pe, 0) + m * pc
    return LaurentPoly(acc, Var.A)


def kauffman_bracket(D: OrientedDiagram, cap: int = DEFAULT_CAP, threads: int = 1) -> LaurentPoly:
    if D.c > cap:
        raise CapacityError(f"{D.c} crossings exceed the state-sum cap of {cap}; raise it with --cap")
    max_loops = D.c + D.free_loops + 1
    loop_powers = {0: LaurentPoly.constant(1, Var.A)}
    for k in range(1, max_loops):
        loop_powers[k] = loop_powers[k - 1] * LOOP
    total = 1 << D.c
    block = 1 << BLOCK_BITS
    ranges = [(lo, min(lo + block, total)) for lo in range(0, total, block)]
    if threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda r: _block_bracket(D, r[0], r[1], loop_powers), ranges))
    else:
        parts = [_block_bracket(D, lo, hi, loop_powers) for lo, hi in ranges]
    result = LaurentPoly((), Var.A)
    for p in parts:
        result = lp_add(result, p)
    return result


def jones_polynomial(D: OrientedDiagram, cap: int = DEFAULT_CAP, threads: int = 1) -> JonesResult:
    bracket = kauffman_bracket(D, cap=cap, threads=threads)
    w = writhe(D)
    V = bracket_to_jones(bracket, w, D.n_components)
    lo, hi = t_degrees(V)
    return JonesResult(bracket, V, w, D.n_components, lo, hi)


def jones(D: OrientedDiagram, **kw) -> LaurentPoly:
    return jones_polynomial(D, **kw).jones


def v_coefficient(V: LaurentPoly, i: int) -> int:
    """Coefficient of ``t^(d+i)`` where ``d`` is the lowest degree of ``V``."""
    if V.is_zero():
        raise ZeroPolynomialError("V_i is undefined for the zero polynomial")
    if i < 0:
        raise ValueError("coefficient index must be nonnegative")
    d = min(V.terms)
    return V.coeff(d + 4 * i)


def stoimenow_v1(D: OrientedDiagram) -> int:
    """Predicted ``V_1`` of a positive diagram from its Seifert circles."""
    if not is_positive(D):
        raise NotPositiveError("the V_1 formula needs a positive diagram")
    if is_split(D):
        raise ValueError("the V_1 formula needs a non-split diagram")
    s = all_a_circles(D).count
    pairs = len(reduced_a_graph(D).multiplicity)
    sign = 1 if D.n_components % 2 else -1
    return sign * (s - 1 - pairs)
