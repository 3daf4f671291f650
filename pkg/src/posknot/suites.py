"""Executable property suites over generated diagrams.

Each ``check_*`` function returns a list of failure messages (empty when
every invariant holds), so the same checks drive the CLI ``verify`` command
and the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable

from posknot.diagram import OrientedDiagram, from_text, is_positive, is_reduced, is_split, mirror, writhe
from posknot.generators import LinearRng, random_balanced, random_burdened
from posknot.jones import jones_polynomial, stoimenow_v1, v_coefficient
from posknot.laurent import lp_invert_var
from posknot.obstructions import check_fibered_bound, check_lemma4, check_positive_mindeg
from posknot.states import (
    Classification,
    all_a_circles,
    all_b_circles,
    balancing_sequence,
    classify_diagram,
    diagram_is_synchronized,
    induced_circle_map,
    matching_pairs,
    pair_is_synchronized,
    reduced_a_graph,
    smooth_sequence,
    verify_balance_theorem,
)

SUITES = ("balanced", "burdened", "prop6", "stoimenow", "mirror")
FIXTURE_FILE = Path(__file__).resolve().parents[2] / "data" / "positive_fixtures.jsonl"


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    # how often an inequality was attained with equality
    tight: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_balanced(D: OrientedDiagram) -> list[str]:
    out = []
    if classify_diagram(D) is not Classification.BALANCED:
        return [f"{D}: not Balanced"]
    s = all_a_circles(D).count
    pairs = matching_pairs(D)
    if D.c != 2 * (s - 1):
        out.append(f"{D}: c != 2(s-1)")
    if len(pairs) != s - 1:
        out.append(f"{D}: {len(pairs)} matching pairs for {s} circles")
    if not verify_balance_theorem(D):
        out.append(f"{D}: n = {D.n_components} but |B| = {all_b_circles(D).count}")
    if not diagram_is_synchronized(D):
        out.append(f"{D}: not synchronized")
    for p in pairs:
        if not pair_is_synchronized(D, p):
            out.append(f"{D}: matching pair {p} not synchronized")
        smoothed = smooth_sequence(D, list(p.crossings))[-1]
        if not is_split(smoothed):
            out.append(f"{D}: smoothing pair {p.crossings} leaves a connected diagram")
    return out


def check_prop6(D: OrientedDiagram, seq: list[int]) -> list[str]:
    out = []
    chain = smooth_sequence(D, seq)
    n0, b0 = D.n_components, all_b_circles(D).count
    for i, Di in enumerate(chain):
        if abs(Di.n_components - n0) > i:
            out.append(f"{D}: |n(D_{i}) - n(D_0)| > {i} along {seq}")
        if abs(all_b_circles(Di).count - b0) > i:
            out.append(f"{D}: ||B(D_{i})| - |B(D_0)|| > {i} along {seq}")
    return out


def check_burdened(D: OrientedDiagram, threads: int = 1, tight: dict | None = None) -> list[str]:
    out = []
    tight = tight if tight is not None else {}
    cls = classify_diagram(D)
    if cls not in (Classification.BALANCED, Classification.BURDENED):
        return [f"{D}: not Burdened"]
    r = jones_polynomial(D, threads=threads)
    V = r.jones
    c, n = D.c, D.n_components
    s = all_a_circles(D).count
    nb = all_b_circles(D).count
    lo, hi = r.min_deg_t, r.max_deg_t
    seq = balancing_sequence(D)
    m = len(seq)

    if v_coefficient(V, 1) != 0:
        out.append(f"{D}: V_1 = {v_coefficient(V, 1)} on a Burdened diagram")
    if lo != Fraction(c - s + 1, 2):
        out.append(f"{D}: min deg {lo} != (c-s+1)/2")
    if 4 * lo < c:
        out.append(f"{D}: 4 min deg {4 * lo} < c = {c}")
    if nb > 2 * m + n:
        out.append(f"{D}: |B| = {nb} > 2m + n = {2 * m + n}")
    if nb > 8 * lo - 2 * c + n:
        out.append(f"{D}: |B| = {nb} > 8 min deg - 2c + n")
    bound = Fraction(8 * lo + n - 1, 2)
    if hi > bound:
        out.append(f"{D}: max deg {hi} > (8 min deg + n - 1)/2 = {bound}")
    elif hi == bound:
        tight["max_deg_bound"] = tight.get("max_deg_bound", 0) + 1
    if hi > Fraction(2 * c + nb - 1, 2):
        out.append(f"{D}: max deg {hi} > (2c + |B| - 1)/2")
    if is_reduced(D) and check_lemma4(V, c).violated:
        out.append(f"{D}: crossing bound fired on a reduced Burdened diagram")
    if check_positive_mindeg(V).violated or check_fibered_bound(V, n, True).violated:
        out.append(f"{D}: a positivity obstruction fired on a positive fibered diagram")

    chain = smooth_sequence(D, seq)
    final = chain[-1]
    if classify_diagram(final) is not Classification.BALANCED:
        out.append(f"{D}: balancing sequence {seq} does not end Balanced")
    kept = [x for x in range(c) if x not in set(seq)]
    cmap = induced_circle_map(D, final, kept)
    if cmap is None or len(reduced_a_graph(final).multiplicity) != len(reduced_a_graph(D).multiplicity):
        out.append(f"{D}: balancing changed the reduced A-state graph")
    else:
        old = {frozenset(cmap[u] for u in e) for e in reduced_a_graph(D).multiplicity}
        new = {frozenset(e) for e in reduced_a_graph(final).multiplicity}
        if old != new:
            out.append(f"{D}: balancing changed the reduced A-state graph")
    if not all(is_positive(Di) for Di in chain):
        out.append(f"{D}: balancing produced a non-positive diagram")
    out += check_prop6(D, seq)
    return out


def check_stoimenow(D: OrientedDiagram, threads: int = 1) -> list[str]:
    predicted = stoimenow_v1(D)
    actual = v_coefficient(jones_polynomial(D, threads=threads).jones, 1)
    if predicted != actual:
        return [f"{D}: predicted V_1 = {predicted}, computed {actual}"]
    return []


def check_mirror(D: OrientedDiagram, threads: int = 1) -> list[str]:
    out = []
    V = jones_polynomial(D, threads=threads).jones
    M = mirror(D)
    VM = jones_polynomial(M, threads=threads).jones
    if VM != lp_invert_var(V):
        out.append(f"{D}: V(mirror) != V(t^-1)")
    if jones_polynomial(mirror(M), threads=threads).jones != V:
        out.append(f"{D}: mirror twice changed V")
    if writhe(M) != -writhe(D) or M.c != D.c or M.n_components != D.n_components:
        out.append(f"{D}: mirror changed c, n or the writhe magnitude")
    return out


def fixture_diagrams() -> list[tuple[str, OrientedDiagram]]:
    import json

    out = []
    if FIXTURE_FILE.exists():
        for line in FIXTURE_FILE.read_text().splitlines():
            if line.strip():
                obj = json.loads(line)
                out.append((obj["name"], from_text(obj["pd"])))
    return out


def balanced_corpus(count: int, seed: int, max_k: int = 10) -> list[OrientedDiagram]:
    rng = LinearRng(seed)
    return [random_balanced(1 + rng.below(max_k), rng.next()) for _ in range(count)]


def burdened_corpus(count: int, seed: int, max_crossings: int = 16) -> list[OrientedDiagram]:
    rng = LinearRng(seed)
    return [random_burdened(rng.next(), max_crossings) for _ in range(count)]


def random_sequences(D: OrientedDiagram, rng: LinearRng, how_many: int) -> list[list[int]]:
    seqs = []
    for _ in range(how_many):
        xs = list(range(D.c))
        for i in range(len(xs) - 1, 0, -1):
            j = rng.below(i + 1)
            xs[i], xs[j] = xs[j], xs[i]
        seqs.append(xs[: rng.below(D.c + 1)])
    return seqs


def run_suite(name: str, count: int, seed: int, threads: int = 1, progress: Callable | None = None) -> SuiteResult:
    res = SuiteResult(name)

    def record(D, failures):
        res.cases += 1
        res.failures.extend(failures)
        if progress:
            progress(res)

    if name == "balanced":
        for D in balanced_corpus(count, seed):
            record(D, check_balanced(D))
    elif name == "burdened":
        for D in burdened_corpus(count, seed):
            record(D, check_burdened(D, threads, res.tight))
    elif name == "prop6":
        rng = LinearRng(seed ^ 0x9E3779B9)
        corpus = burdened_corpus(count, seed)
        corpus += [mirror(D) for _, D in fixture_diagrams()]
        for D in corpus:
            fails = []
            if is_positive(D):
                fails += check_prop6(D, balancing_sequence(D))
            for seq in random_sequences(D, rng, 3):
                fails += check_prop6(D, seq)
            record(D, fails)
    elif name == "stoimenow":
        corpus = balanced_corpus(count, seed, max_k=9) + burdened_corpus(count, seed)
        corpus += [D for _, D in fixture_diagrams() if is_positive(D)]
        for D in corpus:
            record(D, check_stoimenow(D, threads))
    elif name == "mirror":
        corpus = [D for _, D in fixture_diagrams()]
        corpus += balanced_corpus(count, seed, max_k=9)
        for D in corpus:
            record(D, check_mirror(D, threads))
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return res
