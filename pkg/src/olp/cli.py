"""Command-line front end: check, solve, bench, fuzz.

Exit codes: 0 ok, 1 parse or semantic input error, 2 I/O error,
3 internal fixpoint divergence.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import replace
from typing import Iterable, Sequence

from . import brewka, classical, preference, prefwfs
from .fixpoint import FixpointDivergence
from .oracle import GeneratorConfig, chain_program, check_theorems, generate_program
from .parser import ParseError, parse_program, render_program
from .syntax import (
    Interpretation,
    Literal,
    OrderedProgram,
    PartialModel,
    mentioned_literals,
)

__all__ = ["main"]

MODES = ("wfs", "pwfs", "pwfs-simplistic", "as", "pas", "brewka", "lfp-ap")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_IO = 2
EXIT_DIVERGENCE = 3


def _render_set(literals: Iterable[Literal]) -> str:
    return "{" + ", ".join(sorted(map(str, literals))) + "}"


def _sorted_strs(literals: Iterable[Literal]) -> list[str]:
    return sorted(map(str, literals))


def _visible(op: OrderedProgram, atoms_only: bool) -> frozenset[Literal]:
    if not atoms_only:
        return op.universe
    mentioned = mentioned_literals(op)
    return frozenset(
        lit for lit in op.universe if not lit.negated or lit in mentioned
    )


def _load_program(path: str) -> OrderedProgram:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_program(handle.read())


def cmd_check(args: argparse.Namespace) -> int:
    op = _load_program(args.file)
    sys.stdout.write(render_program(op))
    return EXIT_OK


def _model_payload(
    mode: str, model: PartialModel, op: OrderedProgram, atoms_only: bool
) -> dict:
    visible = _visible(op, atoms_only)
    return {
        "mode": mode,
        "true": _sorted_strs(model.true_set & visible),
        "false": _sorted_strs(model.false_set & visible),
        "unknown": _sorted_strs(model.unknown(op.universe) & visible),
    }


def _model_trace(
    op: OrderedProgram, trace, variant: str | None
) -> list[dict]:
    entries = []
    previous: Interpretation | None = None
    for index, value in trace.steps:
        entry: dict = {"step": index, "set": _sorted_strs(value.literals)}
        if variant is not None and previous is not None:
            context = classical.c_op(op.rules, previous, op.universe)
            contexts = prefwfs.defeat_contexts(op, value, context, variant)
            entry["dsets"] = {
                name: _sorted_strs(ctx.removed)
                for name, ctx in sorted(contexts.items())
            }
        entries.append(entry)
        previous = value
    return entries


def _solve_payload(op: OrderedProgram, args: argparse.Namespace) -> dict:
    mode = args.mode
    if mode in ("wfs", "pwfs", "pwfs-simplistic"):
        if mode == "wfs":
            lfp, trace = classical.well_founded_fixpoint(op.rules, op.universe)
            false = op.universe - classical.c_op(op.rules, lfp, op.universe).literals
            model = PartialModel(lfp.literals, false)
            variant = None
        else:
            variant = "paper" if mode == "pwfs" else "simplistic"
            model = prefwfs.preferred_wf_model(op, variant)
            _, trace = prefwfs.preferred_wfs_fixpoint(op, variant)
        payload = _model_payload(mode, model, op, args.atoms_only)
        if args.trace:
            payload["trace"] = _model_trace(op, trace, variant)
        return payload
    if mode in ("as", "pas"):
        if mode == "as":
            sets = classical.answer_sets(op.rules, op.universe)
        else:
            sets = preference.preferred_answer_sets(op)
        return {
            "mode": mode,
            "answer_sets": sorted(_sorted_strs(x.literals) for x in sets),
        }
    if mode == "lfp-ap":
        value, trace = preference.lfp_ap_fixpoint(op)
        payload = {"mode": mode, "set": _sorted_strs(value.literals)}
        if args.trace:
            payload["trace"] = [
                {"step": i, "set": _sorted_strs(v.literals)}
                for i, v in trace.steps
            ]
        return payload
    if mode == "brewka":
        iterates = brewka.brewka_wf_iterates(op)
        payload = {"mode": mode, "wfset": _sorted_strs(iterates[-1])}
        if args.trace:
            entries = []
            for index, value in enumerate(iterates):
                entries.append(
                    {
                        "step": index,
                        "set": _sorted_strs(value),
                        "defeated": {
                            r.name: sorted(
                                d.name
                                for d in brewka.defeated_rules(op, r, value)
                            )
                            for r in op.rules
                        },
                    }
                )
            payload["trace"] = entries
        return payload
    raise ValueError(f"unknown mode {mode!r}")


def _print_solve_text(payload: dict) -> None:
    mode = payload["mode"]
    if "true" in payload:
        line = "true: {%s} false: {%s} unknown: {%s}" % (
            ", ".join(payload["true"]),
            ", ".join(payload["false"]),
            ", ".join(payload["unknown"]),
        )
        print(line)
    elif "answer_sets" in payload:
        label = "answer set" if mode == "as" else "preferred answer set"
        if not payload["answer_sets"]:
            print(f"no {label}s")
        for literals in payload["answer_sets"]:
            print(f"{label}: {{{', '.join(literals)}}}")
    else:
        key = "set" if "set" in payload else "wfset"
        print(f"well-founded set: {{{', '.join(payload[key])}}}")
    for entry in payload.get("trace", ()):
        print(f"step {entry['step']}: {{{', '.join(entry['set'])}}}")
        for rule_name, removed in entry.get("dsets", {}).items():
            print(f"  D[{rule_name}] = {{{', '.join(removed)}}}")
        for rule_name, names in entry.get("defeated", {}).items():
            if names:
                print(f"  defeated[{rule_name}] = {{{', '.join(names)}}}")


def cmd_solve(args: argparse.Namespace) -> int:
    op = _load_program(args.file)
    payload = _solve_payload(op, args)
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        _print_solve_text(payload)
    return EXIT_OK


def _fit_exponent(sizes: Sequence[int], times: Sequence[float]) -> float | None:
    points = [
        (math.log(n), math.log(t)) for n, t in zip(sizes, times) if t > 0
    ]
    if len(points) < 2:
        return None
    mean_x = sum(x for x, _ in points) / len(points)
    mean_y = sum(y for _, y in points) / len(points)
    denom = sum((x - mean_x) ** 2 for x, _ in points)
    if denom == 0:
        return None
    return sum((x - mean_x) * (y - mean_y) for x, y in points) / denom


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    wfs_times, pwfs_times = [], []
    for n in sizes:
        op = chain_program(n)
        t0 = time.perf_counter()
        classical.well_founded_model(op.rules, op.universe)
        t1 = time.perf_counter()
        prefwfs.preferred_wf_model(op)
        t2 = time.perf_counter()
        wfs_times.append(t1 - t0)
        pwfs_times.append(t2 - t1)
        print(f"size {n:>6}  wfs {t1 - t0:9.4f}s  pwfs {t2 - t1:9.4f}s")
    exponent = _fit_exponent(sizes, pwfs_times)
    if exponent is not None:
        print(f"fitted pwfs growth exponent: {exponent:.2f}")
        if exponent > 3.5:
            print("warning: pwfs growth exponent exceeds 3.5", file=sys.stderr)
    return EXIT_OK


def cmd_fuzz(args: argparse.Namespace) -> int:
    base = GeneratorConfig(
        max_atoms=args.max_atoms,
        max_rules=args.max_rules,
        seed=args.seed,
    )
    failures = 0
    for i in range(args.count):
        cfg = replace(base, seed=args.seed + i)
        report = check_theorems(generate_program(cfg), seed=cfg.seed)
        failures += len(report.failures)
        for line in report.json_lines():
            if args.failures_only and '"status": "pass"' in line:
                continue
            print(line)
    print(
        f"fuzz: {args.count} programs, {failures} invariant failures",
        file=sys.stderr,
    )
    return EXIT_INPUT if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="olp",
        description="Semantics of ordered extended logic programs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="parse and print the canonical form")
    p_check.add_argument("file")
    p_check.set_defaults(func=cmd_check)

    p_solve = sub.add_parser("solve", help="compute a semantics of a program")
    p_solve.add_argument("file")
    p_solve.add_argument("--mode", choices=MODES, required=True)
    p_solve.add_argument("--json", action="store_true")
    p_solve.add_argument("--trace", action="store_true")
    p_solve.add_argument(
        "--atoms-only",
        action="store_true",
        help="hide classically negated literals that the program never mentions",
    )
    p_solve.set_defaults(func=cmd_solve)

    p_bench = sub.add_parser("bench", help="time wfs/pwfs on chain programs")
    p_bench.add_argument("--sizes", default="")
    p_bench.set_defaults(func=cmd_bench)

    p_fuzz = sub.add_parser("fuzz", help="run the theorem battery on random programs")
    p_fuzz.add_argument("--seed", type=int, default=0)
    p_fuzz.add_argument("--count", type=int, default=100)
    p_fuzz.add_argument("--max-atoms", type=int, default=4)
    p_fuzz.add_argument("--max-rules", type=int, default=7)
    p_fuzz.add_argument("--failures-only", action="store_true")
    p_fuzz.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except FixpointDivergence as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_DIVERGENCE


if __name__ == "__main__":
    sys.exit(main())
