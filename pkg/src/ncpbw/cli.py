"""Command-line front end.

Subcommands: gb (completed basis), nf (normal form of --element), pbw
(general PBW verdict with graded presentations), gr / rees (associated
graded / Rees relations), hilbert (dimension table), koszul (quadratic
criterion).  Exit codes: 0 for definite results (a reported failure is
still a successful run), 2 when the verdict is undecided or the completion
was truncated below certainty, 1 for errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import replace
from pathlib import Path

from .algebra import AlgebraError
from .completion import PairBudgetExceeded, UnitIdealError, complete
from .ordering import OrderSpec
from .parsing import (ExpressionError, InputError, JobSpec, format_polynomial,
                      parse_input, parse_polynomial)
from .pbw import (hilbert_function, homogenize, koszul_quadratic_criterion,
                  pbw_check)
from .reduction import normal_form

COMMANDS = ("gb", "nf", "pbw", "gr", "rees", "hilbert", "koszul")


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("file", help="job file ([algebra]/[order]/[relations])")
    p.add_argument("--degree-bound", type=int, default=8, metavar="D",
                   help="completion degree bound (default 8)")
    p.add_argument("--max-pairs", type=int, default=100000, metavar="N",
                   help="ambiguity budget (default 100000)")
    p.add_argument("--order-precedence", metavar="NAMES",
                   help="comma-separated precedence overriding the file")
    p.add_argument("--output", choices=("json", "text"), default="text")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ncpbw",
        description="Degree-bounded noncommutative Groebner bases and PBW analysis "
                    "over free and path algebras.")
    sub = ap.add_subparsers(dest="command", required=True)
    helps = {
        "gb": "complete the relations to a reduced basis",
        "nf": "normal form of --element modulo the completed basis",
        "pbw": "decide the general PBW property",
        "gr": "relations of the associated graded algebra",
        "rees": "relations of the Rees algebra",
        "hilbert": "dimension table of the associated graded algebra",
        "koszul": "quadratic-basis Koszulity criterion",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, help=helps[name])
        _add_common(p)
        if name == "nf":
            p.add_argument("--element", required=True, metavar="EXPR",
                           help="expression to reduce")
    return ap


def _algebra_json(quiver):
    if quiver.kind == "free":
        return {"type": "free", "generators": list(quiver.generator_names())}
    return {"type": "path", "vertices": list(quiver.vertices),
            "arrows": [[a.name, a.source, a.target] for a in quiver.arrows]}


def _job_from_args(args) -> JobSpec:
    text = Path(args.file).read_text(encoding="utf-8")
    job = parse_input(text)
    if args.order_precedence:
        prec = tuple(s.strip() for s in args.order_precedence.split(","))
        declared = job.quiver.generator_names()
        if set(prec) != set(declared) or len(prec) != len(declared):
            raise InputError("--order-precedence must list exactly the declared generators")
        job = replace(job, order=OrderSpec(prec, scheme=job.order.scheme))
    return replace(job, command=args.command, bound=args.degree_bound,
                   max_pairs=args.max_pairs, output=args.output,
                   element=getattr(args, "element", None))


def run(job: JobSpec):
    """Execute a job; returns (report dict, exit code)."""
    fmt = lambda p: format_polynomial(p, job.order)
    report = {
        "command": job.command,
        "algebra": _algebra_json(job.quiver),
        "order": {"scheme": job.order.scheme,
                  "precedence": list(job.order.precedence)},
        "bound": job.bound,
        "max_pairs": job.max_pairs,
    }
    started = time.perf_counter()
    code = 0

    if job.command == "pbw":
        rep = pbw_check(list(job.relations), job.order, job.bound, job.max_pairs)
        report["status"] = rep.gb.status
        report["verdict"] = rep.verdict
        report["elements"] = [fmt(g) for g in rep.gb.elements]
        report["witnesses"] = [{"element": fmt(g), "remainder": fmt(r)}
                               for g, r in rep.witnesses]
        report["hilbert"] = list(rep.hilbert)
        report["assoc_graded"] = [fmt(g) for g in rep.assoc_graded.relations]
        report["rees"] = [fmt(g) for g in rep.rees.relations]
        if rep.diagnostics:
            report["diagnostics"] = rep.diagnostics
        code = 2 if rep.verdict == "undecided" else 0
    elif job.command == "koszul":
        rep = koszul_quadratic_criterion(list(job.relations), job.order,
                                         job.bound, job.max_pairs)
        report["status"] = rep.gb.status
        report["verdict"] = rep.verdict
        report["elements"] = [fmt(g) for g in rep.gb.elements]
        report["witnesses"] = []
        report["hilbert"] = []
        code = 2 if rep.verdict == "not-applicable" else 0
    else:
        policy = "raise" if job.command == "gb" else "truncate"
        gb = complete(list(job.relations), job.order, job.bound, job.max_pairs,
                      on_budget=policy)
        report["status"] = gb.status
        report["witnesses"] = []
        report["hilbert"] = []
        if gb.spans_unit_ideal:
            report["unit_ideal"] = True
        if job.command == "gb":
            report["elements"] = [fmt(g) for g in gb.elements]
            code = 0 if gb.status == "complete" else 2
        elif job.command == "nf":
            target = parse_polynomial(job.element, job.quiver)
            cert = normal_form(target, gb.elements, job.order)
            report["elements"] = [fmt(g) for g in gb.elements]
            report["element"] = fmt(target)
            report["remainder"] = fmt(cert.remainder)
            code = 0
        elif job.command == "gr":
            report["elements"] = [fmt(g.leading_homogeneous()) for g in gb.elements]
            code = 0 if gb.status == "complete" else 2
        elif job.command == "rees":
            report["elements"] = [fmt(homogenize(g)) for g in gb.elements]
            code = 0 if gb.status == "complete" else 2
        elif job.command == "hilbert":
            report["elements"] = [fmt(g) for g in gb.elements]
            report["hilbert"] = hilbert_function(gb, job.bound)
            code = 0 if gb.status == "complete" else 2
        else:
            raise InputError(f"unknown command {job.command!r}")
    report["timings"] = {"total": time.perf_counter() - started}
    return report, code


def _render_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    alg = report["algebra"]
    if alg["type"] == "free":
        lines.append("algebra: free on " + ", ".join(alg["generators"]))
    else:
        arrows = ", ".join(f"{n}:{s}->{t}" for n, s, t in alg["arrows"])
        lines.append(f"algebra: path on vertices {', '.join(alg['vertices'])} "
                     f"with arrows {arrows}")
    lines.append("order: " + report["order"]["scheme"] + " "
                 + " > ".join(report["order"]["precedence"]))
    lines.append(f"bound: {report['bound']}")
    lines.append(f"status: {report['status']}")
    if report.get("unit_ideal"):
        lines.append("unit ideal: the relations generate the whole algebra")
    if "verdict" in report:
        lines.append(f"verdict: {report['verdict']}")
    if "diagnostics" in report:
        lines.append(f"diagnostics: {report['diagnostics']}")
    if "element" in report:
        lines.append(f"element: {report['element']}")
    if "remainder" in report:
        lines.append(f"remainder: {report['remainder']}")
    lines.append(f"elements ({len(report['elements'])}):")
    for e in report["elements"]:
        lines.append(f"  {e}")
    if report["witnesses"]:
        lines.append("witnesses:")
        for w in report["witnesses"]:
            lines.append(f"  {w['element']}  ->  remainder {w['remainder']}")
    if "assoc_graded" in report:
        lines.append("assoc-graded relations: " + "; ".join(report["assoc_graded"]))
    if "rees" in report:
        lines.append("rees relations: " + "; ".join(report["rees"]))
    if report["hilbert"]:
        lines.append("hilbert: " + " ".join(str(n) for n in report["hilbert"]))
    lines.append(f"time: {report['timings']['total']:.3f}s")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        job = _job_from_args(args)
        report, code = run(job)
    except (InputError, ExpressionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except UnitIdealError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except PairBudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except AlgebraError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if job.output == "json":
        print(json.dumps(report, indent=2))
    else:
        print(_render_text(report), end="")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
