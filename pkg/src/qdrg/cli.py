"""Command-line front end: ``qdrg analyze | classify | construct | verify``.

Exit codes: 0 affirmative, 1 negative but valid, 2 input error, 3 internal
inconsistency. Plain and ``--json`` output are rendered from the same report
dictionary, so they carry identical exact values.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .constructions import OUT_OF_SCOPE, REGISTRY
from .errors import (
    CodeVerificationFailed,
    DiameterOutOfRange,
    DiameterTooLargeForSearch,
    GraphFormatError,
    InternalInconsistency,
    InvalidArray,
    NotDistanceRegular,
    TerminalIdentityFails,
)
from .graphs import format_graph, intersection_numbers, read_graph, theorem_conditions_graph
from .params import ArrayAnalysis, IntersectionArray, validate
from .theorem import classify, evaluate_conditions, is_q_polynomial_at

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    """Bad command-line input; reported with exit code 2."""


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def echo(text: str) -> str:
    """``"112/5"`` -> ``"112/5 (22.4)"``; integers and non-rationals pass through."""
    if isinstance(text, str) and "/" in text:
        try:
            return f"{text} ({float(Fraction(text)):.10g})"
        except ValueError:
            pass
    return str(text)


def _eigenvalue(ev) -> str | dict:
    if ev.is_rational:
        return rational(ev.exact)
    return {"interval": [rational(ev.lo), rational(ev.hi)], "approx": f"{float(ev):.12g}"}


def _input_section(arr: IntersectionArray, **extra) -> dict:
    return {
        "array": str(arr), "b": list(arr.b), "c": list(arr.c), "a": list(arr.a),
        "k": list(arr.k_seq), "n": arr.n, "diameter": arr.D, **extra,
    }


def _spectrum_section(an: ArrayAnalysis) -> list[dict]:
    sd = an.spectrum
    rows = []
    for ev, m, cos, approx in zip(sd.eigenvalues, sd.multiplicities, sd.cosines, sd.approximate):
        rows.append({
            "eigenvalue": _eigenvalue(ev),
            "multiplicity": f"~{float(m):.12g}" if approx else rational(m),
            "cosines": None if approx else [rational(s) for s in cos.sigma],
        })
    return rows


def _krein_section(an: ArrayAnalysis) -> dict:
    if not an.spectrum.is_rational:
        return {"skipped": "irrational eigenvalue"}
    q = an.krein
    entries = [v for plane in q for row in plane for v in row]
    thetas = an.spectrum.thetas
    try:
        orders = [[rational(thetas[i]) for i in o] for o in an.orderings]
    except DiameterTooLargeForSearch as exc:
        orders = f"skipped: {exc}"
    return {"min_entry": rational(min(entries)), "nonnegative": min(entries) >= 0,
            "q_polynomial_orderings": orders}


def _verdict(v) -> dict:
    return {"holds": v.holds, "graph_level_required": v.graph_level_required,
            "reason": str(v.witness.get("reason", ""))}


def _feasibility_section(an: ArrayAnalysis) -> dict:
    rep = an.feasibility
    return {"passed": rep.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in rep.checks]}


def _resolve_theta(an: ArrayAnalysis, selector: str) -> Fraction:
    if selector == "min":
        ev = an.spectrum.minimal
        if not ev.is_rational:
            raise InputError(f"minimal eigenvalue {ev} is irrational")
        return ev.exact
    try:
        return Fraction(selector)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse eigenvalue {selector!r}") from None


def _q_polynomial(arr, theta, an) -> bool | None:
    if not an.spectrum.is_rational:
        return False
    try:
        return is_q_polynomial_at(arr, theta, an)
    except DiameterTooLargeForSearch:
        return None


def array_report(arr: IntersectionArray, theta_selector: str = "min") -> dict:
    an = ArrayAnalysis(arr)
    report = {
        "input": _input_section(arr, theta=theta_selector),
        "spectrum": _spectrum_section(an),
        "krein": _krein_section(an),
        "classical": [str(cp) for cp in an.classical],
        "near_polygon": list(an.near_polygon) if an.near_polygon else None,
        "feasibility": _feasibility_section(an),
    }
    try:
        theta = _resolve_theta(an, theta_selector)
    except InputError as exc:
        if theta_selector != "min":
            raise
        report["theorem"] = {"skipped": str(exc)}
        return report
    verdicts = evaluate_conditions(arr, theta, an)
    qpoly = _q_polynomial(arr, theta, an)
    decided = {v.condition: v.holds for v in verdicts if not v.graph_level_required}
    unanimous = len(set(decided.values())) == 1
    report["theorem"] = {
        "theta": rational(theta), "q_polynomial_at_theta": qpoly,
        "verdicts": {v.condition: _verdict(v) for v in verdicts}, "unanimous": unanimous,
    }
    if qpoly and not unanimous and an.feasibility.passed:
        raise InternalInconsistency(f"mixed verdicts for {arr} at theta = {rational(theta)}: {decided}")
    return report


def graph_report(path: str, theta_selector: str) -> dict:
    g = read_graph(path)
    arr = intersection_numbers(g)
    report = array_report(arr, "min")
    an = ArrayAnalysis(arr)
    theta = _resolve_theta(an, theta_selector)
    res = theorem_conditions_graph(g, theta, require_q_polynomial=False, arr=arr, analysis=an)
    report["input"] = _input_section(arr, theta=theta_selector, file=str(path), edges=g.edge_count)
    cl = res.cliques
    report["theorem"] = {
        "theta": rational(theta), "multiplicity": rational(res.multiplicity),
        "q_polynomial_at_theta": res.q_polynomial,
        "verdicts": {v.condition: _verdict(v) for v in res.verdicts},
        "unanimous": res.unanimous,
        "cliques": None if cl is None else {
            "triangles": cl.triangles, "zero_sum": cl.zero_sum, "dependent": cl.dependent,
            "verdict": cl.verdict,
        },
        "kite_free": res.kites.free, "kite_witness": res.kites.witness,
        "local_order": list(res.local.order) if res.local.order else None,
    }
    return report


def classify_report(D: int) -> dict:
    rows = []
    for e in classify(D):
        witness = {k: rational(v) if isinstance(v, (Fraction, int)) else str(v) for k, v in e.witness.items()}
        rows.append({"c2": e.c2, "array": e.array_text, "classical": str(e.classical),
                     "verdict": e.verdict, "name": e.name, "citation": e.citation, "witness": witness})
    return {"input": {"diameter": D}, "classification": rows}


# ---------------------------------------------------------------------------
# plain rendering
# ---------------------------------------------------------------------------

def _state(flag) -> str:
    return {True: "PASS", False: "FAIL", None: "skip"}[flag]


def render_report(r: dict) -> str:
    inp = r["input"]
    lines = [f"array {inp['array']}  n = {inp['n']}  k_i = {inp['k']}  a_i = {inp['a']}"]
    if "file" in inp:
        lines.insert(0, f"graph {inp['file']}: {inp['n']} vertices, {inp['edges']} edges, distance-regular")
    lines.append("spectrum:")
    for row in r["spectrum"]:
        ev = row["eigenvalue"]
        ev = echo(ev) if isinstance(ev, str) else f"~{ev['approx']}"
        cos = "" if row["cosines"] is None else "  cosines " + ", ".join(row["cosines"])
        lines.append(f"  theta = {ev}  m = {echo(row['multiplicity'])}{cos}")
    kr = r["krein"]
    if "skipped" in kr:
        lines.append(f"krein: skipped ({kr['skipped']})")
    else:
        orders = kr["q_polynomial_orderings"]
        shown = orders if isinstance(orders, str) else "; ".join("(" + ",".join(o) + ")" for o in orders) or "none"
        lines.append(f"krein: min q = {echo(kr['min_entry'])}  Q-polynomial orderings: {shown}")
    lines.append("classical parameters: " + (", ".join(r["classical"]) or "none"))
    np_ = r["near_polygon"]
    lines.append("near-polygon order: " + (f"({np_[0]},{np_[1]})" if np_ else "none"))
    th = r["theorem"]
    if "skipped" in th:
        lines.append(f"theorem: skipped ({th['skipped']})")
    else:
        head = f"theorem at theta = {echo(th['theta'])}"
        if "multiplicity" in th:
            head += f" (m = {echo(th['multiplicity'])})"
        lines.append(head + f"; Q-polynomial at theta: {th['q_polynomial_at_theta']}")
        for name, v in th["verdicts"].items():
            state = "needs graph" if v["graph_level_required"] else ("holds" if v["holds"] else "fails")
            lines.append(f"  ({name}) {state}" + (f": {v['reason']}" if v["reason"] else ""))
        if th.get("cliques"):
            c = th["cliques"]
            lines.append(f"  3-cliques: {c['triangles']}, zero sums {c['zero_sum']}, "
                         f"dependent {c['dependent']} ({c['verdict']})")
        if "kite_free" in th:
            lines.append(f"  kite-free: {th['kite_free']}  local order: {th['local_order']}")
    feas = r["feasibility"]
    lines.append(f"feasibility: {_state(feas['passed'])}")
    for c in feas["checks"]:
        lines.append(f"  [{_state(c['passed'])}] {c['name']}: {c['detail']}")
    return "\n".join(lines)


def render_classification(r: dict) -> str:
    lines = [f"diameter {r['input']['diameter']}"]
    for row in r["classification"]:
        note = row["name"] or ", ".join(f"{k} = {echo(v)}" for k, v in row["witness"].items())
        cite = f"  [{row['citation']}]" if row["citation"] else ""
        lines.append(f"c2={row['c2']}  {row['array']:<22} {row['classical']:<18} {row['verdict']:<24} {note}{cite}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _emit(report: dict, as_json: bool, render) -> None:
    print(json.dumps(report, indent=2) if as_json else render(report))


def cmd_analyze(args) -> int:
    arr = validate(_int_list(args.b), _int_list(args.c))
    report = array_report(arr, args.theta)
    _emit(report, args.json, render_report)
    return EXIT_OK if report["feasibility"]["passed"] else EXIT_NEGATIVE


def cmd_classify(args) -> int:
    _emit(classify_report(args.diameter), args.json, render_classification)
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.name in OUT_OF_SCOPE:
        raise InputError(OUT_OF_SCOPE[args.name])
    if args.name not in REGISTRY:
        raise InputError(f"unknown construction {args.name!r}; choose from {', '.join(REGISTRY)}")
    construction = REGISTRY[args.name]
    g = construction.builder()
    arr = intersection_numbers(g)
    if str(arr) != construction.array:
        raise InternalInconsistency(f"{args.name} built {arr}, declared {construction.array}")
    out = Path(args.out or f"{args.name}.graph")
    out.write_text(format_graph(g))
    summary = {"name": args.name, "description": construction.description, "n": g.n,
               "edges": g.edge_count, "array": str(arr), "verified": True, "file": str(out)}
    _emit(summary, args.json, lambda s: (f"{s['name']}: {s['description']}\n"
                                          f"n = {s['n']}, edges = {s['edges']}, verified array {s['array']}\n"
                                          f"wrote {s['file']}"))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = graph_report(args.graphfile, args.eigenvalue)
    _emit(report, args.json, render_report)
    verdicts = report["theorem"]["verdicts"].values()
    return EXIT_OK if all(v["holds"] for v in verdicts) else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qdrg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="spectrum, Krein, classical fit, feasibility and theorem verdicts of an array")
    p.add_argument("--b", required=True, help="b_0,...,b_{D-1}")
    p.add_argument("--c", required=True, help="c_1,...,c_D")
    p.add_argument("--theta", default="min", help="eigenvalue for the theorem verdicts (rational or 'min')")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="candidate arrays for c2 = 1..5 at a given diameter")
    p.add_argument("--diameter", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", help="build a graph and write it in edge-list format")
    p.add_argument("name", help=", ".join([*REGISTRY, *OUT_OF_SCOPE]))
    p.add_argument("--out", help="output path (default NAME.graph)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="certify a graph file and evaluate all six conditions")
    p.add_argument("graphfile")
    p.add_argument("--eigenvalue", default="min", help="rational eigenvalue or 'min'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except CodeVerificationFailed as exc:
        print(f"code verification failed: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (InputError, InvalidArray, DiameterOutOfRange, GraphFormatError, NotDistanceRegular,
            TerminalIdentityFails, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
