"""PD-coded oriented link diagrams.

A crossing ``X[a,b,c,d]`` lists its four arc labels counterclockwise,
starting at the incoming under-arc ``a``; the under-strand runs ``a -> c``.
The over-strand runs either ``d -> b`` (positive crossing) or ``b -> d``
(negative crossing). Slots are addressed globally as ``4 * crossing + pos``.

Orientation is recovered from the PD code alone. Components that pass under
at least once are oriented by their under-passages. A component that only
ever passes over is oriented by its labels: walking from its smallest label,
the next label must be the smaller of the two neighbours; for two-arc
components the smallest label's head slot decides. :func:`canonical_relabel`
writes labels so that this rule reproduces any given orientation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from posknot._uf import UnionFind

Quad = tuple[int, int, int, int]


class PDParseError(ValueError):
    def __init__(self, msg: str, position: int | None = None):
        super().__init__(msg if position is None else f"{msg} (at character {position})")
        self.position = position


class DiagramError(ValueError):
    """A PD code that does not describe a valid oriented diagram."""


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[Quad, ...]
    extra_unknots: int = 0

    def __len__(self) -> int:
        return len(self.crossings)


_U_PREFIX = re.compile(r"\s*U\s*(\d+)\s*(;|$)")
_X_ITEM = re.compile(r"\s*X\s*\[([^\]]*)\]\s*")


def parse_pd(text: str) -> PDCode:
    """Parse ``[U<k>;] X[a,b,c,d]; X[...]; ...`` without semantic checks."""
    pos = 0
    extra = 0
    m = _U_PREFIX.match(text, pos)
    if m:
        extra = int(m.group(1))
        pos = m.end()
    crossings: list[Quad] = []
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _X_ITEM.match(text, pos)
        if m is None:
            raise PDParseError(f"expected X[a,b,c,d] for crossing {len(crossings) + 1}", pos)
        fields = [f.strip() for f in m.group(1).split(",")]
        if len(fields) != 4:
            raise PDParseError(
                f"crossing {len(crossings) + 1} has {len(fields)} labels, expected 4", m.start()
            )
        quad = []
        for f in fields:
            if not re.fullmatch(r"[+-]?\d+", f):
                raise PDParseError(f"bad label {f!r} in crossing {len(crossings) + 1}", m.start())
            v = int(f)
            if v <= 0:
                raise PDParseError(f"label {v} in crossing {len(crossings) + 1} is not positive", m.start())
            quad.append(v)
        crossings.append(tuple(quad))
        pos = m.end()
        if pos < len(text):
            if text[pos] != ";":
                raise PDParseError("expected ';' between crossings", pos)
            pos += 1
    return PDCode(tuple(crossings), extra)


@dataclass(frozen=True, eq=False)
class OrientedDiagram:
    crossings: tuple[Quad, ...]
    signs: tuple[int, ...]
    # slot -> True when the strand enters the crossing there
    entering: tuple[bool, ...]
    arc_tail: dict[int, int] = field(repr=False)
    arc_head: dict[int, int] = field(repr=False)
    component_of: dict[int, int] = field(repr=False)
    n_components: int
    extra_unknots: int = 0

    @property
    def c(self) -> int:
        return len(self.crossings)

    @property
    def free_loops(self) -> int:
        """Crossingless circles; the empty diagram is one unknot."""
        return self.extra_unknots + (0 if self.crossings else 1)

    def label(self, slot: int) -> int:
        return self.crossings[slot // 4][slot % 4]

    def mate(self, slot: int) -> int:
        lab = self.label(slot)
        t, h = self.arc_tail[lab], self.arc_head[lab]
        return h if slot == t else t

    def arcs(self) -> list[int]:
        return sorted(self.arc_tail)

    def pd(self) -> PDCode:
        return PDCode(self.crossings, self.extra_unknots)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrientedDiagram):
            return NotImplemented
        return self.crossings == other.crossings and self.extra_unknots == other.extra_unknots

    def __hash__(self) -> int:
        return hash((self.crossings, self.extra_unknots))

    def __str__(self) -> str:
        return pd_text(self)


def pd_text(D: OrientedDiagram | PDCode) -> str:
    parts = []
    if D.extra_unknots:
        parts.append(f"U{D.extra_unknots}")
    parts.extend("X[" + ",".join(map(str, q)) + "]" for q in D.crossings)
    return ";".join(parts)


def _slot_mates(crossings: Sequence[Quad]) -> list[int]:
    where: dict[int, list[int]] = {}
    for i, q in enumerate(crossings):
        for p, lab in enumerate(q):
            where.setdefault(lab, []).append(4 * i + p)
    mates = [-1] * (4 * len(crossings))
    for lab, slots in sorted(where.items()):
        if len(slots) != 2:
            raise DiagramError(f"arc {lab} appears {len(slots)} times, expected exactly 2")
        s, t = slots
        mates[s], mates[t] = t, s
    return mates


def _strand_cycles(crossings: Sequence[Quad], mates: Sequence[int]) -> list[list[int]]:
    """Strands as cyclic lists of entering slots, in one traversal direction.

    Starting at slot ``s`` we enter the crossing, leave through the opposite
    slot and follow its arc to the next entering slot.
    """
    n = len(mates)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        s = start
        while not seen[s]:
            out = _opp(s)
            seen[s] = seen[out] = True
            cyc.append(s)
            s = mates[out]
        cycles.append(cyc)
    return cycles


def _opp(slot: int) -> int:
    return slot - slot % 4 + (slot % 4 + 2) % 4


def _reverse(cyc: list[int], mates: Sequence[int]) -> list[int]:
    # entering slots of the reversed strand are the exit slots of the forward one
    return [_opp(s) for s in reversed(cyc)]


def _label_rule_pick(cyc: list[int], crossings: Sequence[Quad], mates: Sequence[int]) -> list[int]:
    def lab(slot):
        return crossings[slot // 4][slot % 4]

    def key(c):
        # arcs in traversal order; arc i ends at entering slot c[i]
        labels = [lab(s) for s in c]
        k = labels.index(min(labels))
        seq = labels[k:] + labels[:k]
        return seq, c[k]

    rev = _reverse(cyc, mates)
    return cyc if key(cyc) <= key(rev) else rev


def orient_and_sign(pd: PDCode) -> OrientedDiagram:
    crossings = tuple(tuple(q) for q in pd.crossings)
    mates = _slot_mates(crossings)
    entering = [False] * len(mates)
    comp_cycles = []
    for cyc in _strand_cycles(crossings, mates):
        fwd = {s % 4 for s in cyc}
        exits = {_opp(s) % 4 for s in cyc}
        fwd_ok = 2 not in fwd and 0 not in exits
        rev_ok = 0 not in fwd and 2 not in exits
        if not fwd_ok and not rev_ok:
            bad = next(s for s in cyc if s % 4 in (0, 2))
            lab = crossings[bad // 4][bad % 4]
            raise DiagramError(f"no consistent orientation through arc {lab}")
        if fwd_ok and rev_ok:
            chosen = _label_rule_pick(cyc, crossings, mates)
        elif fwd_ok:
            chosen = cyc
        else:
            chosen = _reverse(cyc, mates)
        comp_cycles.append(chosen)
        for s in chosen:
            entering[s] = True
    return _build(crossings, tuple(entering), comp_cycles, mates, pd.extra_unknots)


def _build(crossings, entering, comp_cycles, mates, extra_unknots) -> OrientedDiagram:
    arc_tail, arc_head, component_of = {}, {}, {}
    order = sorted(range(len(comp_cycles)), key=lambda k: min(comp_cycles[k]))
    for idx, k in enumerate(order):
        for s in comp_cycles[k]:
            lab = crossings[s // 4][s % 4]
            arc_head[lab] = s
            arc_tail[lab] = mates[s]
            component_of[lab] = idx
    signs = tuple(1 if entering[4 * i + 3] else -1 for i in range(len(crossings)))
    n = len(comp_cycles) + extra_unknots + (0 if crossings else 1)
    return OrientedDiagram(
        crossings=crossings,
        signs=signs,
        entering=entering,
        arc_tail=arc_tail,
        arc_head=arc_head,
        component_of=component_of,
        n_components=n,
        extra_unknots=extra_unknots,
    )


def from_text(text: str) -> OrientedDiagram:
    return orient_and_sign(parse_pd(text))


def assemble(crossings: Sequence[Quad], signs: Sequence[int], free_loops: int = 0) -> OrientedDiagram:
    """Build a diagram whose orientation is fixed by ``signs``.

    Labels are rewritten by :func:`canonical_relabel` so that re-parsing the
    PD text reproduces the same orientation; this is checked.
    """
    crossings = [tuple(q) for q in crossings]
    if not crossings:
        return orient_and_sign(PDCode((), max(free_loops - 1, 0)))
    entering = []
    for sg in signs:
        entering.extend([True, sg < 0, False, sg > 0])
    relabeled = canonical_relabel(crossings, entering)
    D = orient_and_sign(PDCode(relabeled, free_loops))
    if D.signs != tuple(signs):
        raise AssertionError("orientation did not survive relabeling")
    return D


def canonical_relabel(crossings: Sequence[Quad], entering: Sequence[bool]) -> tuple[Quad, ...]:
    """Relabel arcs 1..2c consecutively along each oriented component."""
    mates = _slot_mates(crossings)
    for s, m in enumerate(mates):
        if entering[s] == entering[m]:
            raise DiagramError(f"arc {crossings[s // 4][s % 4]} has no consistent direction")
    seen = [False] * len(mates)
    comps = []
    for start in range(len(mates)):
        if not entering[start] or seen[start]:
            continue
        cyc = []
        s = start
        while not seen[s]:
            seen[s] = True
            cyc.append(s)
            s = mates[_opp(s)]
        comps.append(cyc)
    new = [[0] * 4 for _ in crossings]
    nxt = 1
    for cyc in comps:
        constrained = any(s % 4 in (0, 2) or _opp(s) % 4 in (0, 2) for s in cyc)
        k = 0
        if not constrained and len(cyc) == 2:
            # head slot of the first arc must beat its tail slot
            k = 0 if cyc[0] < mates[cyc[0]] else 1
        cyc = cyc[k:] + cyc[:k]
        for s in cyc:
            new[s // 4][s % 4] = nxt
            m = mates[s]
            new[m // 4][m % 4] = nxt
            nxt += 1
    return tuple(tuple(q) for q in new)


def writhe(D: OrientedDiagram) -> int:
    return sum(D.signs)


def is_positive(D: OrientedDiagram) -> bool:
    return all(s > 0 for s in D.signs)


def _graph_pieces(D: OrientedDiagram) -> int:
    uf = UnionFind(D.c)
    for lab in D.arc_tail:
        uf.union(D.arc_tail[lab] // 4, D.arc_head[lab] // 4)
    return uf.count


def is_split(D: OrientedDiagram) -> bool:
    pieces = (_graph_pieces(D) if D.c else 0) + D.free_loops
    return pieces > 1


def is_nugatory(D: OrientedDiagram, x: int) -> bool:
    """``x`` is a cut vertex: its four edge stubs fall apart once it is removed."""
    uf = UnionFind(4 * D.c)
    for lab in D.arc_tail:
        uf.union(D.arc_tail[lab], D.arc_head[lab])
    for i in range(D.c):
        if i != x:
            for p in range(1, 4):
                uf.union(4 * i, 4 * i + p)
    return len({uf.find(4 * x + p) for p in range(4)}) > 1


def is_reduced(D: OrientedDiagram) -> bool:
    return not any(is_nugatory(D, x) for x in range(D.c))


def face_count(D: OrientedDiagram) -> int:
    """Faces of the projection, traced by turning clockwise at every crossing."""
    n = 4 * D.c
    seen = [False] * n
    faces = 0
    for start in range(n):
        if seen[start]:
            continue
        faces += 1
        s = start
        while not seen[s]:
            seen[s] = True
            m = D.mate(s)
            s = m - m % 4 + (m % 4 - 1) % 4
    return faces


def is_planar(D: OrientedDiagram) -> bool:
    """Euler characteristic check, one sphere per connected piece."""
    if not D.c:
        return True
    return face_count(D) == D.c + 2 * _graph_pieces(D)


def mirror(D: OrientedDiagram) -> OrientedDiagram:
    """Swap over and under at every crossing, keeping strand directions."""
    new = []
    for (a, b, c, d), sg in zip(D.crossings, D.signs):
        # the old over-strand becomes the under-strand, entering at d or b
        new.append((d, a, b, c) if sg > 0 else (b, c, d, a))
    return assemble(new, [-s for s in D.signs], D.free_loops)


def seifert_genus(c: int, s: int, n: int) -> Fraction:
    return Fraction(c - s + 2 - n, 2)
