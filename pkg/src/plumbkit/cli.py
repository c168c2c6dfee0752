"""Command-line front end.

Exit codes: 0 success, 1 input syntax, 2 hypothesis or precondition
violation, 3 search budget exceeded. Machine output is ``key<TAB>value``.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from . import lefschetz as lf
from .dinv import DEFAULT_BUDGET, d_table
from .errors import InputSyntaxError, PreconditionError, SearchBudgetExceeded
from .graph import WeightedGraph, parse_graph, validate
from .hf_rank import hfhat_rank
from .knots import hfp_rank_zero_surgery
from .lattice import homology_summary, intersection_form, is_positive_definite
from .tables import hfp_rank, parse_label

EXIT_OK, EXIT_SYNTAX, EXIT_HYPOTHESIS, EXIT_BUDGET = 0, 1, 2, 3

HYPOTHESIS_ECHO = "G is a disjoint union of trees and m(v) >= d(v) at every vertex"
SPLITTING_NOTE = (
    "HF+_red vanishes on Y(G,m), so no closed symplectic X splits along Y(G,m) "
    "into two pieces with b2+ > 0"
)
STEIN_NOTE = "a Stein filling with b2+ > 0 would embed in a surface of general type, giving such a splitting"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors are input-syntax errors
        self.print_usage(sys.stderr)
        self.exit(EXIT_SYNTAX, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputSyntaxError(f"cannot read {path}: {exc.strerror}") from None


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _emit(out: list[str], key: str, *values) -> None:
    out.append("\t".join([key, *map(str, values)]))


def _validation_lines(g: WeightedGraph) -> tuple[list[str], bool]:
    rep = validate(g)
    out: list[str] = []
    _emit(out, "vertices", len(g))
    _emit(out, "edges", len(g.edges))
    _emit(out, "components", len(rep.components))
    _emit(out, "forest", _bool(rep.is_forest))
    _emit(out, "inequality", _bool(not rep.violations))
    _emit(out, "strict_each_component", _bool(rep.each_component_has_strict_vertex))
    for v in rep.violations:
        _emit(out, "violation", v, g.slack(v))
    _emit(out, "status", "valid" if rep.hypotheses_hold else "invalid")
    return out, rep.hypotheses_hold


def _homology_lines(g: WeightedGraph) -> list[str]:
    hs = homology_summary(intersection_form(g))
    out: list[str] = []
    _emit(out, "det", hs.det)
    _emit(out, "b1", hs.b1)
    _emit(out, "torsion", ",".join(map(str, hs.torsion_orders)) or "none")
    if hs.h1_order is not None:
        _emit(out, "h1", hs.h1_order)
    return out


def _rank_lines(g: WeightedGraph) -> list[str]:
    r = hfhat_rank(g)
    out: list[str] = []
    if r.rank is not None:
        _emit(out, "hfhat_rank", r.rank)
    else:
        _emit(out, "qhs_hfhat_rank", r.qhs_rank)
    _emit(out, "hfp_red", 0 if r.hfp_red_vanishes else "nonzero")
    _emit(out, "free", _bool(r.free))
    return out


def cmd_validate(args) -> tuple[int, list[str]]:
    lines, ok = _validation_lines(parse_graph(_read(args.path)))
    return (EXIT_OK if ok else EXIT_HYPOTHESIS), lines


def cmd_invariants(args) -> tuple[int, list[str]]:
    g = parse_graph(_read(args.path))
    lines, ok = _validation_lines(g)
    if not ok:
        return EXIT_HYPOTHESIS, lines
    return EXIT_OK, _homology_lines(g) + _rank_lines(g)


def cmd_dinv(args) -> tuple[int, list[str]]:
    g = parse_graph(_read(args.path))
    table = d_table(g, budget=args.budget)
    if args.orientation == "plumbing":
        table = table.reversed()
    return EXIT_OK, table.lines()


def cmd_report(args) -> tuple[int, list[str]]:
    g = parse_graph(_read(args.path))
    lines, ok = _validation_lines(g)
    lines += _homology_lines(g)
    if not ok:
        reason = "requires: " + HYPOTHESIS_ECHO
        _emit(lines, "verdicts", "suppressed", reason)
        return EXIT_OK, lines
    lines += _rank_lines(g)
    if args.dinv:
        f = intersection_form(g)
        if is_positive_definite(f):
            lines += ["dinv\t" + s for s in d_table(f, budget=args.budget).lines()]
    extra_split = [] if args.quiet else [f"{HYPOTHESIS_ECHO}; {SPLITTING_NOTE}"]
    extra_stein = [] if args.quiet else [f"{HYPOTHESIS_ECHO}; {STEIN_NOTE}"]
    _emit(lines, "splitting_obstructed", "true", *extra_split)
    _emit(lines, "stein_filling_b2plus_zero", "true", *extra_stein)
    return EXIT_OK, lines


def _matrix_lines(m) -> list[str]:
    return ["row\t" + " ".join(map(str, r)) for r in m]


def cmd_lefschetz(args) -> tuple[int, list[str]]:
    sub = args.lcmd
    out: list[str] = []
    if sub == "e2g":
        w = lf.e2g_word(args.genus)
        return EXIT_OK, w.to_text().splitlines()
    if sub == "screen":
        _emit(out, "verdict", lf.adjunction_screen(args.c1, args.self_int, args.genus).value)
        return EXIT_OK, out
    w = lf.parse_word(_read(args.word))
    if sub == "act":
        m = lf.word_action(w)
        out += _matrix_lines(m)
        _emit(out, "identity", _bool(m == [list(r) for r in lf.la.identity(w.surface.dim)]))
        _emit(out, "symplectic", _bool(lf.is_symplectic(m, w.surface)))
    elif sub == "hurwitz":
        out += lf.hurwitz_move(w, args.index, args.direction).to_text().splitlines()
    elif sub == "h2":
        h = lf.fibration_homology(w)
        _emit(out, "h2_rank", h.h2_rank)
        _emit(out, "fiber_class_index", h.fiber_class_index)
        for v in h.kernel_basis:
            _emit(out, "kernel", " ".join(map(str, v)))
    elif sub == "cap":
        p = lf.cap_subsurface(args.genus, w.twists)
        _emit(out, "genus", p.genus)
        _emit(out, "boundary_count", p.boundary_count)
        _emit(out, "self_int", p.self_int)
        _emit(out, "c1_eval", p.c1_eval)
        _emit(out, "zero_boundary", _bool(p.zero_boundary))
        if args.fiber_genus is not None:
            sp = lf.split_fiber(args.fiber_genus, p)
            _emit(out, "complement_genus", sp.p2.genus)
            _emit(out, "complement_self_int", sp.p2.self_int)
            _emit(out, "complement_c1_eval", sp.p2.c1_eval)
            _emit(out, "p1_dot_p2", sp.dot(sp.p1_class, sp.p2_class))
    elif sub == "audit":
        for i, flag in lf.minimality_audit(w):
            _emit(out, "twist", i, flag.value)
    return EXIT_OK, out


def cmd_knot(args) -> tuple[int, list[str]]:
    return EXIT_OK, [str(hfp_rank_zero_surgery(args.genus, args.i))]


def cmd_table(args) -> tuple[int, list[str]]:
    try:
        label = parse_label(args.label)
        k = Fraction(args.k)
    except ValueError as exc:
        raise InputSyntaxError(str(exc)) from None
    return EXIT_OK, [str(hfp_rank(label, k))]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="plumbkit", description="Invariants of plumbed three-manifolds and Lefschetz fibrations.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check the forest and m(v) >= d(v) hypotheses")
    s.add_argument("path")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("invariants", help="|H_1|, b_1 and the HF-hat rank")
    s.add_argument("path")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("dinv", help="correction terms, one line per Spin^c structure")
    s.add_argument("path")
    s.add_argument("--orientation", choices=["minus-plumbing", "plumbing"], default="minus-plumbing")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget per lattice search")
    s.set_defaults(func=cmd_dinv)

    s = sub.add_parser("report", help="full report with splitting and Stein-filling verdicts")
    s.add_argument("path")
    s.add_argument("--quiet", action="store_true", help="omit justification strings")
    s.add_argument("--dinv", action="store_true", help="include the correction-term table")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("lefschetz", help="monodromy word calculus")
    lsub = s.add_subparsers(dest="lcmd", required=True, parser_class=_Parser)
    t = lsub.add_parser("act", help="action of the word on H_1 of the fibre")
    t.add_argument("word")
    t = lsub.add_parser("hurwitz", help="apply one Hurwitz move (1-based index)")
    t.add_argument("word")
    t.add_argument("index", type=int)
    t.add_argument("direction", choices=["left", "right"])
    t = lsub.add_parser("h2", help="H_2 of the total space")
    t.add_argument("word")
    t = lsub.add_parser("cap", help="capped-surface invariants for the word's classes as boundary")
    t.add_argument("genus", type=int)
    t.add_argument("word")
    t.add_argument("--fiber-genus", type=int, default=None)
    t = lsub.add_parser("screen", help="adjunction screen of (c1, self-intersection, genus)")
    t.add_argument("c1", type=int)
    t.add_argument("self_int", type=int)
    t.add_argument("genus", type=int)
    t = lsub.add_parser("e2g", help="print the E(2g) relation word")
    t.add_argument("genus", type=int)
    t = lsub.add_parser("audit", help="flag null-homologous vanishing cycles")
    t.add_argument("word")
    s.set_defaults(func=cmd_lefschetz)

    s = sub.add_parser("knot", help="HF+ rank of zero-surgery on T(2,2g+1) with <c1,F> = 2i")
    s.add_argument("genus", type=int)
    s.add_argument("i", type=int)
    s.set_defaults(func=cmd_knot)

    s = sub.add_parser("table", help="HF+ rank of M{p,q,r} in grading k")
    s.add_argument("label", help="e.g. 1,1,1")
    s.add_argument("k", help="rational grading, e.g. 2 or 1/2")
    s.set_defaults(func=cmd_table)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, lines = args.func(args)
    except InputSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    for line in lines:
        print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
