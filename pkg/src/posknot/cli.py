"""Command-line entry point.

    posknot jones --pd "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]"
    posknot states --pd ...
    posknot classify --pd ... --fibered
    posknot census --input data/census12.jsonl
    posknot generate --k 4 --seed 1
    posknot verify --suite balanced --count 500 --seed 7

Exit status: 0 on success, 1 when a census expectation or a property check
fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from posknot.census import CensusError, emit_report, load_census, run_census
from posknot.diagram import DiagramError, OrientedDiagram, PDParseError, from_text, is_positive, is_split, pd_text
from posknot.generators import GraftError, random_balanced, random_burdened
from posknot.jones import DEFAULT_CAP, CapacityError, jones_polynomial, v_coefficient
from posknot.laurent import format_poly
from posknot.obstructions import classify_positivity
from posknot.states import (
    SelfLoopError,
    all_a_circles,
    all_b_circles,
    classify_diagram,
    reduced_a_graph,
    seifert_circles,
)
from posknot.suites import SUITES, run_suite

SUBCOMMANDS = ("jones", "states", "classify", "census", "generate", "verify")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    subcommand: str
    pd: str | None = None
    input: Path | None = None
    cap: int = DEFAULT_CAP
    seed: int = 0
    count: int = 1
    format: str = "text"
    threads: int = 1
    verbose: int = 0
    # subcommand extras
    fibered: bool = False
    k: int = 3
    kind: str = "balanced"
    suite: str = "all"

    def validate(self) -> None:
        if self.cap < 0:
            raise UsageError("--cap must be nonnegative")
        if self.count < 1:
            raise UsageError("--count must be at least 1")
        if self.threads < 1:
            raise UsageError("--threads must be at least 1")
        if self.subcommand in ("jones", "states") and (self.pd is None) == (self.input is None):
            raise UsageError(f"{self.subcommand} needs exactly one of --pd or --input")
        if self.subcommand == "classify" and (self.pd is None) == (self.input is None):
            raise UsageError("classify needs exactly one of --pd or --input")
        if self.subcommand == "census" and self.input is None:
            raise UsageError("census needs --input")
        if self.subcommand == "generate" and self.k < 1:
            raise UsageError("--k must be at least 1")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pd", help="PD code text, e.g. 'X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]'")
    common.add_argument("--input", type=Path, help="file with PD text, or JSON-lines records")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest crossing count for the state sum")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--count", type=int, default=1)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--threads", type=int, default=1, help="worker threads for state sums")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="posknot", description="Jones polynomial tools for positive links.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("jones", parents=[common], help="Jones polynomial of a diagram")
    sub.add_parser("states", parents=[common], help="A/B/Seifert circles and the reduced A-state graph")
    p = sub.add_parser("classify", parents=[common], help="positivity obstructions")
    p.add_argument("--fibered", action="store_true", help="treat a --pd knot as fibered")
    sub.add_parser("census", parents=[common], help="batch positivity census over JSON-lines records")
    p = sub.add_parser("generate", parents=[common], help="seeded Balanced or Burdened diagrams")
    p.add_argument("--k", type=int, default=3, help="number of A-circles (balanced only)")
    p.add_argument("--kind", choices=("balanced", "burdened"), default="balanced")
    p = sub.add_parser("verify", parents=[common], help="run property suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    return parser


def parse_config(argv: list[str]) -> CliConfig:
    ns = build_parser().parse_args(argv)
    cfg = CliConfig(**{k: v for k, v in vars(ns).items() if k in CliConfig.__dataclass_fields__})
    cfg.validate()
    return cfg


def _num(q: Fraction) -> int | str:
    return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _dump(obj) -> str:
    return json.dumps(obj)


def _diagram(cfg: CliConfig) -> OrientedDiagram:
    if cfg.pd is not None:
        return from_text(cfg.pd)
    try:
        return from_text(cfg.input.read_text().strip())
    except OSError as exc:
        raise UsageError(f"cannot read {cfg.input}: {exc.strerror}") from None


def cmd_jones(cfg: CliConfig, out) -> int:
    D = _diagram(cfg)
    r = jones_polynomial(D, cap=cfg.cap, threads=cfg.threads)
    info = {
        "min_deg": _num(r.min_deg_t),
        "max_deg": _num(r.max_deg_t),
        "v1": v_coefficient(r.jones, 1),
        "writhe": r.writhe,
        "components": r.n_components,
    }
    if cfg.format == "json":
        out.write(_dump({"jones": format_poly(r.jones), **info}) + "\n")
    else:
        out.write(format_poly(r.jones) + "\n" + _dump(info) + "\n")
    return 0


def states_summary(D: OrientedDiagram) -> dict:
    try:
        red = reduced_a_graph(D)
        graph = {
            "edges": [[i, j, m] for (i, j), m in sorted(red.multiplicity.items())],
            "is_tree": red.is_tree,
        }
    except SelfLoopError:
        graph = None
    cls = classify_diagram(D).value if is_positive(D) and not is_split(D) else None
    return {
        "a_circles": all_a_circles(D).count,
        "b_circles": all_b_circles(D).count,
        "seifert_circles": seifert_circles(D).count,
        "reduced_graph": graph,
        "classification": cls,
    }


def cmd_states(cfg: CliConfig, out) -> int:
    out.write(_dump(states_summary(_diagram(cfg))) + "\n")
    return 0


def cmd_classify(cfg: CliConfig, out) -> int:
    if cfg.pd is not None:
        items = [("", cfg.pd, cfg.fibered)]
    else:
        items = [(r.name, r.pd_text, r.fibered) for r in load_census(cfg.input)]
    verdicts = []
    for name, text, fibered in items:
        D = from_text(text)
        V = jones_polynomial(D, cap=cfg.cap, threads=cfg.threads).jones
        verdicts.append(classify_positivity(V, fibered, name, D.n_components))
    if cfg.format == "json":
        payload = [v.to_json() for v in verdicts]
        out.write(_dump(payload[0] if cfg.pd is not None else payload) + "\n")
    else:
        for v in verdicts:
            per_form = []
            for f in v.forms:
                fired = ", ".join(o.name for o in f.obstructions if o.violated) or "none"
                per_form.append(f"{f.form}: {fired}")
            label = f"{v.name}: " if v.name else ""
            out.write(f"{label}{v.verdict.value} ({'; '.join(per_form)})\n")
    return 0


def cmd_census(cfg: CliConfig, out) -> int:
    report = run_census(load_census(cfg.input), cap=cfg.cap, threads=cfg.threads)
    out.write(emit_report(report, cfg.format).decode())
    return 0 if report.ok else 1


def cmd_generate(cfg: CliConfig, out) -> int:
    items = []
    for i in range(cfg.count):
        seed = cfg.seed + i
        if cfg.kind == "balanced":
            D = random_balanced(cfg.k, seed)
        else:
            D = random_burdened(seed)
        manifest = {
            "k": all_a_circles(D).count,
            "seed": seed,
            "crossings": D.c,
            "classification": classify_diagram(D).value,
        }
        items.append((pd_text(D), manifest))
    if cfg.format == "json":
        out.write(_dump([{"pd": t, **m} for t, m in items]) + "\n")
    else:
        for t, m in items:
            out.write(t + "\n" + json.dumps(m) + "\n")
    return 0


def cmd_verify(cfg: CliConfig, out) -> int:
    names = SUITES if cfg.suite == "all" else (cfg.suite,)
    failed = False
    for name in names:
        res = run_suite(name, cfg.count, cfg.seed, threads=cfg.threads)
        status = "ok" if res.ok else f"{len(res.failures)} FAILURES"
        out.write(f"{name}: {res.cases} diagrams, {status}\n")
        for msg in res.failures[: 10 if not cfg.verbose else None]:
            out.write(f"  {msg}\n")
        failed |= not res.ok
    out.write("some invariants FAILED\n" if failed else "all invariants held\n")
    return 1 if failed else 0


COMMANDS = {
    "jones": cmd_jones,
    "states": cmd_states,
    "classify": cmd_classify,
    "census": cmd_census,
    "generate": cmd_generate,
    "verify": cmd_verify,
}


def run_cli(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"posknot: error: {exc}", file=sys.stderr)
        return 2
    try:
        return COMMANDS[cfg.subcommand](cfg, out)
    except (UsageError, PDParseError, DiagramError, CensusError, CapacityError, GraftError) as exc:
        print(f"posknot {cfg.subcommand}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
