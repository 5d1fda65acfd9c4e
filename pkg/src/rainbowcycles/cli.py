"""Command-line front end.

Exit status: 0 for a definite answer, 2 when a search ran out of budget,
1 for any error (bad input, bad parameters, failed fuzz run).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Optional

from .coloring import EdgeColoring, coloring_from_dict, even_coloring, mod4_coloring
from .detect import find_rainbow_cycle, spectrum_up_to
from .monoid import GcdDegenerate, classify_spectrum, frobenius_brute, sylvester_threshold, three_gen_threshold
from .replay import FUZZ_MODES, KINDS, fuzz, replay_trace
from .search.engine import Budget, Verdict, exists_coloring
from .search.table import build_table, g_exact, table_csv

EXIT_OK, EXIT_ERROR, EXIT_TIMEOUT = 0, 1, 2


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are errors (1); 2 is reserved for timeouts
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return v


def _seed(text: str) -> int:
    v = int(text, 0)
    if not -(1 << 63) <= v < (1 << 64):
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return v


def _gens(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"generators must be integers, got {text!r}") from None


@dataclass
class RunConfig:
    command: str
    args: argparse.Namespace

    @property
    def budget(self) -> Optional[Budget]:
        a = self.args
        nodes, secs = getattr(a, "max_nodes", None), getattr(a, "max_seconds", None)
        return None if nodes is None and secs is None else Budget(nodes, secs)


def read_coloring(path: str) -> EdgeColoring:
    try:
        with (sys.stdin if path == "-" else open(path)) as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read coloring file {path!r}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed coloring JSON in {path!r}: {exc}") from None
    try:
        return coloring_from_dict(data)
    except ValueError as exc:
        raise CliError(f"invalid coloring in {path!r}: {exc}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    try:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    except OSError as exc:
        raise CliError(f"cannot write {out!r}: {exc.strerror}") from None


def cmd_generate(cfg: RunConfig) -> int:
    a = cfg.args
    c = even_coloring(a.v) if a.family == "even" else mod4_coloring(a.v)
    _emit(c.to_json(), a.out)
    return EXIT_OK


def cmd_check(cfg: RunConfig) -> int:
    a = cfg.args
    w = find_rainbow_cycle(read_coloring(a.coloring), a.k)
    print("none" if w is None else json.dumps(w.to_dict()))
    return EXIT_OK


def cmd_spectrum(cfg: RunConfig) -> int:
    a = cfg.args
    p = spectrum_up_to(read_coloring(a.coloring), a.L)
    rec = {"bound": p.bound, "absent": sorted(p.absent)}
    if a.classify:
        cls = classify_spectrum(p)
        rec["class"] = {"tag": cls.tag.value, "onset": cls.onset}
    if a.format == "text":
        line = f"absent lengths up to {p.bound}: {' '.join(map(str, rec['absent']))}"
        if a.classify:
            line += f"\nclass: {rec['class']['tag']} from {rec['class']['onset']}"
        print(line)
    else:
        print(json.dumps(rec))
    return EXIT_OK


def cmd_frobenius(cfg: RunConfig) -> int:
    a = cfg.args
    gens = sorted(set(a.gens))
    rec: dict = {"generators": gens, "bound": a.bound}
    try:
        frob = frobenius_brute(gens, a.bound)
    except GcdDegenerate as exc:
        raise CliError(str(exc)) from None
    rec["frobenius_brute"] = frob
    rec["conductor_brute"] = frob + 1
    if len(gens) == 2:
        rec["formula"] = "sylvester"
        rec["threshold"] = sylvester_threshold(*gens)
    elif len(gens) == 3:
        try:
            rec["threshold"] = three_gen_threshold(*gens)
            rec["formula"] = "three-generator"
        except ValueError as exc:
            rec["formula"] = None
            rec["note"] = str(exc)
    print(json.dumps(rec))
    return EXIT_OK


def cmd_search(cfg: RunConfig) -> int:
    a = cfg.args
    out = exists_coloring(a.n, a.m, cfg.budget, palette=a.palette, workers=a.workers)
    print(json.dumps(out.to_dict()))
    return EXIT_TIMEOUT if out.verdict is Verdict.TIMEOUT else EXIT_OK


def cmd_table(cfg: RunConfig) -> int:
    a = cfg.args
    progress = None
    if a.verbose:
        def progress(n, m, s):
            print(f"n={n} m={m} {s or '-'}", file=sys.stderr, flush=True)
    cells = build_table(a.max_n, a.max_m, cfg.budget, workers=a.workers, min_n=a.min_n, progress=progress)
    _emit(table_csv(cells, a.max_n, a.max_m, a.min_n), a.out)
    return EXIT_TIMEOUT if any(s == "" for s in cells.values()) else EXIT_OK


def cmd_gvalue(cfg: RunConfig) -> int:
    a = cfg.args
    g = g_exact(a.n, cfg.budget, total_seconds=a.total_seconds, use_lemmas=a.use_lemmas, workers=a.workers)
    if a.format == "json":
        print(json.dumps({"n": g.n, "lower": g.lower, "upper": g.upper, "exact": g.exact,
                          "cells": {str(m): s for m, s in g.cells.items()}}))
    else:
        print(g)
    return EXIT_OK if g.exact else EXIT_TIMEOUT


def cmd_replay(cfg: RunConfig) -> int:
    a = cfg.args
    if a.fuzz:
        rep = fuzz(a.kind, a.k, a.trials, a.seed, a.mode)
        print(json.dumps(rep.to_dict()))
        if not rep.ok:
            print(f"fuzz failure; reproduce with --seed {a.seed}: {rep.failure}", file=sys.stderr)
            return EXIT_ERROR
        return EXIT_OK
    if a.coloring is None:
        raise CliError("replay needs --coloring or --fuzz")
    label, w = replay_trace(read_coloring(a.coloring), a.kind, a.k)
    print(json.dumps(dict(w.to_dict(), step=label)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rainbowcycles", description=__doc__.splitlines()[0])
    p.add_argument("--log-level", default="WARNING")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def budget_flags(sp):
        sp.add_argument("--max-nodes", type=_positive_int)
        sp.add_argument("--max-seconds", type=_positive_float)
        sp.add_argument("--workers", type=_positive_int, default=1)

    sp = sub.add_parser("generate", help="write the even or mod-4 coloring of K_v")
    sp.add_argument("family", choices=("even", "mod4"))
    sp.add_argument("--v", type=_positive_int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_generate)

    sp = sub.add_parser("check", help="find a rainbow k-cycle")
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("spectrum", help="absent rainbow cycle lengths up to L")
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--L", type=int, required=True)
    sp.add_argument("--classify", action="store_true")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(fn=cmd_spectrum)

    sp = sub.add_parser("frobenius", help="membership thresholds, formula and brute force")
    sp.add_argument("--gens", type=_gens, required=True, help="comma-separated generators")
    sp.add_argument("--bound", type=_positive_int, required=True)
    sp.set_defaults(fn=cmd_frobenius)

    sp = sub.add_parser("search", help="decide one (n, m) cell")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--palette", choices=("hamiltonian", "fresh", "full"), default="hamiltonian")
    budget_flags(sp)
    sp.set_defaults(fn=cmd_search)

    sp = sub.add_parser("table", help="CSV table of cells")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--max-m", type=int, required=True)
    sp.add_argument("--min-n", type=int, default=3)
    sp.add_argument("--out")
    sp.add_argument("--verbose", action="store_true")
    budget_flags(sp)
    sp.set_defaults(fn=cmd_table)

    sp = sub.add_parser("gvalue", help="g(n) or a bracket")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--total-seconds", type=_positive_float)
    sp.add_argument("--use-lemmas", action="store_true")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    budget_flags(sp)
    sp.set_defaults(fn=cmd_gvalue)

    sp = sub.add_parser("replay", help="extract a rainbow cycle, or fuzz the extraction")
    sp.add_argument("kind", choices=KINDS)
    sp.add_argument("--k", type=int, required=True)
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--coloring")
    src.add_argument("--fuzz", action="store_true")
    sp.add_argument("--trials", type=_positive_int, default=1000)
    sp.add_argument("--seed", type=_seed, default=0)
    sp.add_argument("--mode", choices=FUZZ_MODES, default="uniform")
    sp.set_defaults(fn=cmd_replay)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    cfg = RunConfig(args.command, args)
    try:
        return args.fn(cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except ValueError as exc:
        print(f"error: invalid parameters: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
