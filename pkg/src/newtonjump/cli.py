"""Command-line front end.

Exit codes: 0 ok, 1 parse/usage error, 2 non-convenient input,
3 engine/input mismatch, 4 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from math import gcd
from multiprocessing import Pool

from .errors import EngineMismatchError, InvalidInputError, NewtonJumpError
from .fastpath import OneFaceTriple, lambda_nd_fastpath, lambda_nd_fastpath_support, one_face_triple
from .geometry import build_diagram, diagram_to_dict, gamma_minus_metrics, newton_number
from .jump_engine import (
    enumerate_candidates,
    evaluate_candidates,
    jump_of_candidate,
    lambda_nd_bruteforce,
    lambda_nd_degenerate,
)
from .parser import Support, parse_germ, render_support
from .render import render_obj, render_svg

COMMANDS = ("nu", "jump", "candidates", "render", "sweep")
ENGINES = ("auto", "bruteforce", "fastpath")


@dataclass
class RunConfig:
    command: str
    germ: str | None = None
    triple: tuple | None = None
    file: str | None = None
    dimension: int = 3
    output_format: str | None = None
    engine: str = "auto"
    mu_override: int | None = None
    trace: bool = False
    jobs: int = 1
    output: str | None = None
    bounds: dict = field(default_factory=dict)
    coprime_only: bool = False
    check: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _int_list(text):
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _int_range(text):
    lo, sep, hi = text.partition("..")
    try:
        lo = int(lo)
        hi = int(hi) if sep else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def build_parser():
    parser = _Parser(prog="newtonjump", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_input(p):
        p.add_argument("germ", nargs="?", help="germ text such as 'x^11+y^6+z^5'; '-' reads stdin")
        p.add_argument("--triple", type=_int_list, help="axis intercepts p,q,r (or p,q) of x^p+y^q+z^r")
        p.add_argument("--file", help="read germ text from a file")
        p.add_argument("--dim", type=int, choices=(2, 3), default=None, help="number of variables (default 3)")

    p = sub.add_parser("nu", help="Newton number")
    add_input(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("jump", help="non-degenerate jump of the Milnor number")
    add_input(p)
    p.add_argument("--engine", choices=ENGINES, default="auto")
    p.add_argument("--mu", type=int, default=None, help="externally computed Milnor number of a degenerate germ")
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.add_argument("--trace", action="store_true", help="include per-candidate trace for bruteforce")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("candidates", help="lattice points under the diagram with their jumps")
    add_input(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("render", help="SVG (2 variables) or OBJ (3 variables)")
    add_input(p)
    p.add_argument("--format", choices=("svg", "obj", "json"), default=None)
    p.add_argument("-o", "--output", help="write to a file instead of stdout")

    p = sub.add_parser("sweep", help="tabulate jumps of x^p+y^q+z^r over ranges")
    p.add_argument("--p", type=_int_range, required=True, metavar="LO..HI")
    p.add_argument("--q", type=_int_range, required=True, metavar="LO..HI")
    p.add_argument("--r", type=_int_range, required=True, metavar="LO..HI")
    p.add_argument("--coprime-only", action="store_true")
    p.add_argument("--check", action="store_true", help="run both engines and compare")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def config_from_args(argv=None):
    args = build_parser().parse_args(argv)
    cfg = RunConfig(command=args.command, output_format=args.format, jobs=getattr(args, "jobs", 1))
    if args.command == "sweep":
        cfg.bounds = {"p": args.p, "q": args.q, "r": args.r}
        cfg.coprime_only = args.coprime_only
        cfg.check = args.check
        return cfg
    cfg.germ, cfg.triple, cfg.file = args.germ, args.triple, args.file
    cfg.dimension = args.dim
    cfg.engine = getattr(args, "engine", "auto")
    cfg.mu_override = getattr(args, "mu", None)
    cfg.trace = getattr(args, "trace", False)
    cfg.output = getattr(args, "output", None)
    return cfg


def load_support(cfg, stdin=None):
    given = [x is not None for x in (cfg.germ, cfg.triple, cfg.file)]
    if sum(given) != 1:
        raise InvalidInputError("give exactly one of: germ text, --triple, --file")
    if cfg.triple is not None:
        if len(cfg.triple) not in (2, 3) or min(cfg.triple) < 1:
            raise InvalidInputError(f"--triple needs 2 or 3 positive integers, got {cfg.triple}")
        n = len(cfg.triple)
        if cfg.dimension not in (None, n):
            raise InvalidInputError(f"--triple has {n} entries but --dim is {cfg.dimension}")
        return Support(n, frozenset(
            tuple(w if i == k else 0 for i in range(n)) for k, w in enumerate(cfg.triple)
        ))
    if cfg.file is not None:
        with open(cfg.file, encoding="utf-8") as fh:
            text = fh.read()
    elif cfg.germ == "-":
        text = (stdin or sys.stdin).read()
    else:
        text = cfg.germ
    return parse_germ(text.strip(), dimension=cfg.dimension or 3)


def solve_jump(support, engine="auto", jobs=1, trace=False):
    if engine == "fastpath":
        return lambda_nd_fastpath_support(support)
    if engine == "auto" and one_face_triple(support) is not None:
        return lambda_nd_fastpath_support(support)
    return lambda_nd_bruteforce(support, jobs=jobs, trace=trace)


def _color(text, ok):
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def _fmt_point(p):
    return "(" + ",".join(str(c) for c in p) + ")"


def _cmd_nu(cfg, out, stdin):
    support = load_support(cfg, stdin)
    nu = newton_number(support)
    if cfg.output_format == "json":
        diagram = build_diagram(support)
        doc = {"support": render_support(support), "nu": nu,
               "diagram": diagram_to_dict(diagram, gamma_minus_metrics(diagram))}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(f"{nu}\n")
    return 0


def _cmd_jump(cfg, out, stdin):
    support = load_support(cfg, stdin)
    if cfg.mu_override is not None:
        nu = newton_number(support)
        if cfg.mu_override != nu or cfg.engine == "bruteforce":
            report = lambda_nd_degenerate(support, cfg.mu_override, jobs=cfg.jobs, trace=cfg.trace)
        else:
            report = solve_jump(support, cfg.engine, cfg.jobs, cfg.trace)
            report.mu = cfg.mu_override
    else:
        report = solve_jump(support, cfg.engine, cfg.jobs, cfg.trace)
    if cfg.output_format == "json":
        out.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        out.write(f"nu: {report.nu_before}\n")
        if report.mu is not None:
            out.write(f"mu: {report.mu}\n")
        out.write(f"lambda_nd: {report.lambda_nd}\n")
        out.write(f"method: {report.method}\n")
        out.write("realizing: " + " ".join(_fmt_point(e) for e in report.realizing_exponents) + "\n")
        out.write(f"candidates: {report.candidates_examined}\n")
    return 0


def _cmd_candidates(cfg, out, stdin):
    support = load_support(cfg, stdin)
    evaluated = evaluate_candidates(support, enumerate_candidates(support), jobs=cfg.jobs)
    nu = newton_number(support)
    if cfg.output_format == "json":
        doc = {"nu": nu, "candidates": [
            {"exponent": list(c.exponent), "nu_after": c.nu_after, "jump": c.jump} for c in evaluated
        ]}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(f"# nu = {nu}, |J| = {len(evaluated)}\n")
        out.write("exponent\tnu_after\tjump\n")
        for c in evaluated:
            out.write(f"{_fmt_point(c.exponent)}\t{c.nu_after}\t{c.jump}\n")
    return 0


def _cmd_render(cfg, out, stdin):
    support = load_support(cfg, stdin)
    diagram = build_diagram(support)
    fmt = cfg.output_format or ("svg" if support.dimension == 2 else "obj")
    if fmt == "svg" and support.dimension != 2:
        raise EngineMismatchError("SVG rendering needs a 2-variable germ; use --format obj")
    if fmt == "obj" and support.dimension != 3:
        raise EngineMismatchError("OBJ rendering needs a 3-variable germ; use --format svg")
    if fmt == "json":
        metrics = gamma_minus_metrics(diagram) if diagram.is_convenient else None
        text = json.dumps(diagram_to_dict(diagram, metrics), indent=2) + "\n"
    elif fmt == "svg":
        text = render_svg(support, diagram)
    else:
        gamma_minus_metrics(diagram)  # rejects non-convenient input
        text = render_obj(diagram)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def sweep_triples(bounds, coprime_only=False):
    for p in bounds["p"]:
        for q in bounds["q"]:
            for r in bounds["r"]:
                if not (p >= q >= r >= 2):
                    continue
                coprime = gcd(p, q) == 1 and gcd(p, r) == 1 and gcd(q, r) == 1
                if coprime_only and not coprime:
                    continue
                yield p, q, r, coprime


def sweep_row(args):
    """One sweep row; ``agree`` is None when only one engine ran."""
    p, q, r, coprime, check = args
    support = Support.of((p, 0, 0), (0, q, 0), (0, 0, r))
    agree = None
    if coprime:
        report = lambda_nd_fastpath(OneFaceTriple(p, q, r))
        if check:
            brute = lambda_nd_bruteforce(support)
            realized = jump_of_candidate(support, report.realizing_exponents[0]).jump
            agree = brute.lambda_nd == report.lambda_nd == realized
    else:
        report = lambda_nd_bruteforce(support)
    return {"p": p, "q": q, "r": r, "lambda_nd": report.lambda_nd,
            "realizing": list(report.realizing_exponents[0]), "method": report.method, "agree": agree}


def _cmd_sweep(cfg, out, stdin):
    work = [(p, q, r, c, cfg.check) for p, q, r, c in sweep_triples(cfg.bounds, cfg.coprime_only)]
    if cfg.output_format == "text":
        out.write("p\tq\tr\tlambda_nd\trealizing\tmethod\tagree\n")
    failures = 0

    def emit(row):
        nonlocal failures
        if row["agree"] is False:
            failures += 1
        if cfg.output_format == "json":
            out.write(json.dumps(row) + "\n")
        else:
            flag = "-" if row["agree"] is None else _color("yes" if row["agree"] else "NO", row["agree"])
            out.write(f"{row['p']}\t{row['q']}\t{row['r']}\t{row['lambda_nd']}\t"
                      f"{_fmt_point(row['realizing'])}\t{row['method']}\t{flag}\n")
        out.flush()

    if cfg.jobs > 1:
        with Pool(cfg.jobs) as pool:
            for row in pool.imap(sweep_row, work):
                emit(row)
    else:
        for item in work:
            emit(sweep_row(item))
    if failures:
        sys.stderr.write(f"{failures} row(s) where the engines disagree\n")
        return 4
    return 0


_HANDLERS = {
    "nu": _cmd_nu,
    "jump": _cmd_jump,
    "candidates": _cmd_candidates,
    "render": _cmd_render,
    "sweep": _cmd_sweep,
}


def run(cfg, out=None, err=None, stdin=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        return _HANDLERS[cfg.command](cfg, out, stdin)
    except NewtonJumpError as exc:
        err.write(f"error: {exc}\n")
        return exc.exit_code
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return 1


def main(argv=None):
    return run(config_from_args(argv))


if __name__ == "__main__":
    sys.exit(main())
