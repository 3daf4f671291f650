"""Knot records and the batch positivity census.

Records are JSON lines::

    {"name": "12n148", "pd": "X[...];...", "fibered": true,
     "expected_mirror_jones": "t^3 + t^6 - ..."}

The expected polynomial is compared against both the computed ``V`` and
its mirror, since knot tables do not agree on chirality.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from posknot.diagram import DiagramError, PDParseError, from_text
from posknot.jones import DEFAULT_CAP, jones_polynomial
from posknot.laurent import LaurentError, LaurentPoly, format_poly, lp_invert_var, parse_poly, t_degrees
from posknot.obstructions import FIBERED_BOUND, POSITIVE_MINDEG, PositivityVerdict, Verdict, classify_positivity


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class KnotRecord:
    name: str
    pd_text: str
    fibered: bool
    expected_mirror_jones: str | None = None


def _record_from_json(obj: dict, where: str) -> KnotRecord:
    try:
        name = obj["name"]
        pd = obj["pd"]
        fibered = obj["fibered"]
    except (KeyError, TypeError) as exc:
        raise CensusError(f"{where}: missing field {exc}") from None
    if not isinstance(name, str) or not isinstance(pd, str) or not isinstance(fibered, bool):
        raise CensusError(f"{where}: fields name/pd must be strings and fibered a boolean")
    expected = obj.get("expected_mirror_jones")
    try:
        from_text(pd)
        if expected is not None:
            parse_poly(expected)
    except (PDParseError, DiagramError, LaurentError) as exc:
        raise CensusError(f"{where}: record {name!r}: {exc}") from None
    return KnotRecord(name, pd, fibered, expected)


def parse_census(lines: Iterable[str], source: str = "<input>") -> list[KnotRecord]:
    records: list[KnotRecord] = []
    seen: set[str] = set()
    for lineno, line in enumerate(lines, 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        where = f"{source}:{lineno}"
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CensusError(f"{where}: malformed JSON ({exc.msg})") from None
        rec = _record_from_json(obj, where)
        if rec.name in seen:
            raise CensusError(f"{where}: duplicate record {rec.name!r}")
        seen.add(rec.name)
        records.append(rec)
    return records


def load_census(source: str | Path) -> list[KnotRecord]:
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise CensusError(f"cannot read {source}: {exc.strerror}") from None
    return parse_census(text.splitlines(), str(source))


@dataclass
class RecordResult:
    name: str
    jones: LaurentPoly
    matched_form: str | None
    expected_ok: bool
    as_given_all_negative: bool
    min_deg: Fraction
    max_deg: Fraction
    verdict: PositivityVerdict

    @property
    def reason(self) -> str:
        form = self.verdict.forms[1] if self.matched_form == "mirror" else self.verdict.forms[0]
        if self.matched_form is None:
            form = max(self.verdict.forms, key=lambda f: t_degrees(f.polynomial)[0])
        for o in form.obstructions:
            if o.violated and o.name == FIBERED_BOUND:
                return f"{_fmt(o.details['max_deg'])} > {_fmt(o.details['bound'])}"
            if o.violated and o.name == POSITIVE_MINDEG:
                return f"min deg {_fmt(o.details['min_deg'])} <= 0"
        return ""


@dataclass
class CensusReport:
    records: list[RecordResult] = field(default_factory=list)

    @property
    def mismatches(self) -> list[str]:
        return [r.name for r in self.records if not r.expected_ok]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _run_one(rec: KnotRecord, cap: int) -> RecordResult:
    D = from_text(rec.pd_text)
    V = jones_polynomial(D, cap=cap).jones
    mirror_V = lp_invert_var(V)
    matched = None
    expected_ok = True
    if rec.expected_mirror_jones is not None:
        want = parse_poly(rec.expected_mirror_jones)
        if mirror_V == want:
            matched = "mirror"
        elif V == want:
            matched = "as-given"
        else:
            expected_ok = False
    shown = V if matched == "as-given" else mirror_V
    if matched is None:
        shown = max((V, mirror_V), key=lambda p: t_degrees(p)[0])
    lo, hi = t_degrees(shown)
    verdict = classify_positivity(V, rec.fibered, rec.name, D.n_components)
    return RecordResult(
        rec.name,
        V,
        matched,
        expected_ok,
        all(e < 0 for e in V.terms),
        lo,
        hi,
        verdict,
    )


def run_census(records: Iterable[KnotRecord], cap: int = DEFAULT_CAP, threads: int = 1) -> CensusReport:
    records = list(records)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda r: _run_one(r, cap), records))
    else:
        results = [_run_one(r, cap) for r in records]
    return CensusReport(sorted(results, key=lambda r: r.name))


def report_json(report: CensusReport) -> dict:
    recs = []
    for r in report.records:
        recs.append(
            {
                "name": r.name,
                "matched_form": r.matched_form,
                "expected_match": r.expected_ok,
                "jones": format_poly(r.jones),
                "min_deg": _fmt(r.min_deg),
                "max_deg": _fmt(r.max_deg),
                "verdict": r.verdict.verdict.value,
                "obstructions": r.verdict.to_json()["forms"],
            }
        )
    summary = {
        "total": len(report.records),
        "not_positive": sum(r.verdict.verdict is Verdict.NOT_POSITIVE for r in report.records),
        "inconclusive": sum(r.verdict.verdict is Verdict.INCONCLUSIVE for r in report.records),
        "mismatches": report.mismatches,
    }
    return {"records": recs, "summary": summary}


def emit_report(report: CensusReport, fmt: str = "text") -> bytes:
    if fmt == "json":
        return (json.dumps(report_json(report), indent=2) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = []
    for r in report.records:
        if r.verdict.verdict is Verdict.NOT_POSITIVE:
            verdict = f"NOT POSITIVE ({r.reason})"
        else:
            verdict = "INCONCLUSIVE"
        if not r.expected_ok:
            verdict += "  [EXPECTED POLYNOMIAL MISMATCH]"
        lines.append(
            f"{r.name:<10} min deg {_fmt(r.min_deg):>4}  max deg {_fmt(r.max_deg):>4}  "
            f"4*min deg {_fmt(4 * r.min_deg):>4}  {verdict}"
        )
    return ("\n".join(lines) + "\n" if lines else "").encode()
