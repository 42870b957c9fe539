"""Command-line front end.

Exit codes: 0 on success (and when every check passes), 1 when a check
fails, 2 on bad input.  All JSON output carries ``"schema": 1``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import kernels
from .algebra import equal_up_to_unit, poly_is_monic, poly_symmetrize
from .analysis import alexander_oracle, top_report, verify_theorem
from .ata import ata_enumerate, build_tait_graphs, fil_max_formula, gr_max_formula
from .corpus import bundled_corpus_path, load_corpus, run_corpus
from .diagram import decorate, parse_pd
from .errors import AltlinkError, GradingNotInteger
from .seifert import is_alternative, seifert_circles, seifert_spaces
from .states import enumerate_states, semantics, state_polynomial, top_states

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _emit(payload: dict, out) -> None:
    out.write(json.dumps({"schema": 1, **payload}, indent=2) + "\n")


def _diagram(args):
    if args.pd is not None:
        text = args.pd
    elif args.pd_file is not None:
        text = Path(args.pd_file).read_text(encoding="utf-8")
    else:
        raise AltlinkError("give a diagram with --pd or --pd-file")
    return parse_pd(text)


def _decorated(args):
    return decorate(_diagram(args), args.edge)


def cmd_parse(args, out):
    _emit({"diagram": _diagram(args).to_json()}, out)
    return EXIT_OK


def cmd_seifert(args, out):
    d = _diagram(args)
    census = seifert_spaces(d)
    alt, space = is_alternative(d, census)
    _emit({
        "circles": [list(c.arcs) for c in seifert_circles(d)],
        "census": census.to_json(),
        "alternative": alt,
        "offending_space": None if space is None else space.to_json(),
    }, out)
    return EXIT_OK


def cmd_states(args, out):
    dd = _decorated(args)
    states = enumerate_states(dd)
    _emit({
        "edge": dd.marked_edge,
        "regions": [dd.region_a, dd.region_b],
        "semantics": semantics(dd.diagram),
        "count": len(states),
        "states": [s.to_json() for s in states],
    }, out)
    return EXIT_OK


def cmd_ata(args, out):
    dd = _decorated(args)
    d = dd.diagram
    alt, _ = is_alternative(d)
    payload = {"edge": dd.marked_edge, "alternative": alt}
    if alt and not args.brute:
        states = ata_enumerate(dd)
        black, white = build_tait_graphs(dd)
        payload["method"] = "ata"
        payload["tait_graphs"] = [black.to_json(), white.to_json()]
    else:
        states = top_states(dd)
        payload["method"] = "brute"
    census = seifert_spaces(d)
    payload["report"] = {
        "fil_max": str(states[0].fil) if states else None,
        "gr_max": str(states[0].gr) if states and len({s.gr for s in states}) == 1 else None,
        "count": len(states),
        "formula_fil_max": str(fil_max_formula(census, d.n_components)) if alt else None,
        "formula_gr_max": str(gr_max_formula(census, d.n_components)) if alt else None,
    }
    payload["states"] = [s.to_json() for s in states]
    _emit(payload, out)
    return EXIT_OK


def cmd_alexander(args, out):
    dd = _decorated(args)
    delta = alexander_oracle(dd.diagram)
    payload = {"oracle": str(delta), "monic": poly_is_monic(delta) if delta else None}
    try:
        sp = state_polynomial(dd)
    except GradingNotInteger as exc:
        payload.update(state_sum=None, equal_up_to_unit=None, note=str(exc))
    else:
        payload.update(
            state_sum=str(poly_symmetrize(sp)),
            equal_up_to_unit=equal_up_to_unit(sp, delta),
        )
    _emit(payload, out)
    return EXIT_OK


def cmd_report(args, out):
    report = top_report(_decorated(args), brute=args.brute)
    _emit({"report": report.to_json()}, out)
    return EXIT_OK if all(c.passed for c in report.checks) else EXIT_FAIL


def _summarize(results, out, as_json):
    n_pass = sum(r["passed"] for r in results)
    summary = f"{len(results)} diagrams, {n_pass} pass"
    if as_json:
        _emit({"summary": summary, "results": results}, out)
    else:
        width = max((len(r["name"]) for r in results), default=4)
        out.write(f"{'name':<{width}}  alt    fil_max  gr_max  rank  fibred  status\n")
        for r in results:
            rep = r["report"]
            status = "pass" if r["passed"] else "FAIL"
            if not rep["alternative"]:
                status += " (not alternative, theorem checks skipped)"
            out.write(
                f"{r['name']:<{width}}  {str(rep['alternative']):<5}  {str(rep['fil_max']):<7}  "
                f"{str(rep['gr_max']):<6}  {rep['rank']:<4}  {str(rep['fibred']):<6}  {status}\n"
            )
        out.write(summary + "\n")
    return EXIT_OK if n_pass == len(results) else EXIT_FAIL


def cmd_verify(args, out):
    if args.corpus is not None:
        entries = load_corpus(args.corpus)
        return _summarize(run_corpus(entries, brute=args.brute), out, args.json)
    report = verify_theorem(_decorated(args))
    _emit({"verification": report.to_json()}, out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_corpus(args, out):
    entries = load_corpus(args.path or bundled_corpus_path())
    return _summarize(run_corpus(entries, brute=args.brute), out, args.json)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="altlink",
        description="Kauffman states and top knot Floer filtration levels of alternative links.",
    )
    p.add_argument("--version", action="version",
                   version=f"%(prog)s (state kernel: {kernels.IMPLEMENTATION})")
    sub = p.add_subparsers(dest="command", required=True)

    def diagram_args(sp, edge=True):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--pd", help='PD code, e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)" or JSON [[a,b,c,d],...]')
        g.add_argument("--pd-file", help="file containing a PD code")
        if edge:
            sp.add_argument("--edge", type=int, help="marked arc (default: lowest label)")

    sp = sub.add_parser("parse", help="diagram as JSON")
    diagram_args(sp, edge=False)
    sp.set_defaults(func=cmd_parse)

    sp = sub.add_parser("seifert", help="Seifert circles and space census")
    diagram_args(sp, edge=False)
    sp.set_defaults(func=cmd_seifert)

    sp = sub.add_parser("states", help="all Kauffman states")
    diagram_args(sp)
    sp.set_defaults(func=cmd_states)

    sp = sub.add_parser("ata", help="top-filtration states from the Alternative Tree Algorithm")
    diagram_args(sp)
    sp.add_argument("--brute", action="store_true", help="use brute-force enumeration instead")
    sp.set_defaults(func=cmd_ata)

    sp = sub.add_parser("alexander", help="region-matrix oracle and state sum")
    diagram_args(sp)
    sp.set_defaults(func=cmd_alexander)

    sp = sub.add_parser("report", help="top filtration report")
    diagram_args(sp)
    sp.add_argument("--brute", action="store_true", help="rank from brute-force enumeration")
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("verify", help="top-filtration checks for one diagram or a corpus")
    diagram_args(sp)
    sp.add_argument("--corpus", help="corpus JSON file")
    sp.add_argument("--brute", action="store_true")
    sp.add_argument("--json", action="store_true", help="JSON results instead of a table")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("corpus", help="batch-verify a corpus file (default: bundled)")
    sp.add_argument("path", nargs="?")
    sp.add_argument("--brute", action="store_true")
    sp.add_argument("--json", action="store_true", help="JSON results instead of a table")
    sp.set_defaults(func=cmd_corpus)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (AltlinkError, OSError) as exc:
        err.write(f"altlink: error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
