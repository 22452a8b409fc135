"""Command-line interface.

Exit codes: 0 compliant / ok, 1 missing measures found, 2 error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .dsl import ACTOR, NIS_ARTICLES, compile_measures, load_measures, parse_measures
from .errors import DslError, LiftError, NisOntoError, TurtleSyntaxError
from .gaps import GapReport, GapRow, gap_analysis
from .kb import Declaration, Iri, KnowledgeBase, compact_iri, resolve_name
from .reasoner import SubsumptionMap, TypeMap, classify, realize
from .turtle import parse_turtle_with_diagnostics, serialize

EXIT_OK = 0
EXIT_GAPS = 1
EXIT_ERROR = 2


class CliError(Exception):
    pass


def load_kb(path: str | Path, stderr: TextIO | None = None) -> KnowledgeBase:
    """Load a ``.dsl`` measure file (compiled) or a Turtle file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror or exc}") from None
    try:
        if path.suffix == ".dsl":
            return compile_measures(parse_measures(text))
        kb, warnings = parse_turtle_with_diagnostics(text)
    except TurtleSyntaxError as exc:
        raise CliError(f"{path}:{exc.diagnostic}") from None
    except (DslError, LiftError) as exc:
        raise CliError(f"{path}: {type(exc).__name__}: {exc}") from None
    if stderr is not None:
        for w in warnings:
            print(f"{path}:{w}", file=stderr)
    return kb


def _prefixes(kb: KnowledgeBase, overrides: Sequence[str]) -> dict[str, str]:
    prefixes = dict(kb.prefixes)
    for item in overrides:
        label, sep, expansion = item.partition("=")
        if not sep or not label:
            raise CliError(f"--prefix expects name=expansion, got {item!r}")
        prefixes[label] = expansion
    return prefixes


def _resolve(name: str, prefixes: dict[str, str]) -> Iri:
    try:
        return resolve_name(name, prefixes)
    except ValueError as exc:
        raise CliError(str(exc)) from None


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------


def _row_cells(row: GapRow, prefixes: dict[str, str]) -> tuple[str, str, str]:
    obj = compact_iri(row.object, prefixes) if isinstance(row.object, Iri) else row.object
    return compact_iri(row.article, prefixes), compact_iri(row.task, prefixes), obj


def gap_table(rows: Sequence[GapRow], prefixes: dict[str, str]) -> list[str]:
    header = ("article", "task", "obj")
    cells = [_row_cells(r, prefixes) for r in rows]
    widths = [max(len(c[i]) for c in [header, *cells]) for i in range(3)]

    def fmt(c: Sequence[str]) -> str:
        return " | ".join(v.ljust(w) for v, w in zip(c, widths)).rstrip()

    lines = [fmt(header), "-+-".join("-" * w for w in widths)]
    lines += [fmt(c) for c in cells]
    return lines


def compliant_classes(kb: KnowledgeBase, types: TypeMap, individual: Iri) -> list[Iri]:
    return [c for c in types.types(individual) if kb.definition(c) is not None]


def report_json(report: GapReport, compliant: list[Iri], prefixes: dict[str, str], gaps_only: bool = False) -> str:
    def rows(items: Sequence[GapRow]) -> list[dict[str, str]]:
        out = []
        for r in items:
            article, task, obj = _row_cells(r, prefixes)
            out.append({"article": article, "task": task, "object": obj})
        return out

    if gaps_only:
        return json.dumps(rows(report.rows), indent=2)
    payload = {
        "individual": compact_iri(report.individual, prefixes),
        "target": compact_iri(report.target, prefixes),
        "compliant": [compact_iri(c, prefixes) for c in compliant],
        "gaps": rows(report.rows),
        "satisfied": rows(report.satisfied),
    }
    return json.dumps(payload, indent=2)


def report_text(report: GapReport, compliant: list[Iri], prefixes: dict[str, str]) -> str:
    lines = [
        f"individual: {compact_iri(report.individual, prefixes)}",
        f"target: {compact_iri(report.target, prefixes)}",
        "compliant with: " + (", ".join(compact_iri(c, prefixes) for c in compliant) or "(nothing)"),
        f"satisfied measures: {len(report.satisfied)}",
        f"missing measures: {len(report.rows)}",
    ]
    if report.rows:
        lines.append("")
        lines += gap_table(report.rows, prefixes)
    return "\n".join(lines)


def hierarchy_lines(kb: KnowledgeBase, subs: SubsumptionMap, prefixes: dict[str, str] | None = None) -> list[str]:
    """Indented class tree (direct subsumers only) under the Actor and NisArticles roots."""
    prefixes = prefixes or kb.prefixes
    rep = {c: subs.equivalents(c)[0] for c in kb.classes}
    nodes = sorted(set(rep.values()))
    children: dict[Iri, set[Iri]] = {n: set() for n in nodes}
    parents: dict[Iri, set[Iri]] = {n: set() for n in nodes}
    for n in nodes:
        for d in subs.direct_superclasses(n):
            children[rep[d]].add(n)
            parents[n].add(rep[d])

    def label(n: Iri) -> str:
        return " = ".join(compact_iri(c, prefixes) for c in subs.equivalents(n))

    lines: list[str] = []

    def walk(n: Iri, depth: int) -> None:
        lines.append("  " * depth + label(n))
        for child in sorted(children[n]):
            walk(child, depth + 1)

    roots = [rep[r] for r in (ACTOR, NIS_ARTICLES) if r in rep]
    for r in roots:
        walk(r, 0)
    unrooted = [n for n in nodes if not any(subs.is_subclass(n, r) for r in roots)]
    tops = [n for n in unrooted if not parents[n]]
    if tops:
        lines.append("<unrooted>")
        for n in tops:
            walk(n, 1)
    return lines


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def _reason(args: argparse.Namespace, stderr: TextIO):
    kb = load_kb(args.ontology, stderr)
    for facts in args.facts or ():
        kb.merge(load_kb(facts, stderr))
    prefixes = _prefixes(kb, args.prefix or ())
    individual = _resolve(args.individual, prefixes)
    target = _resolve(args.target, prefixes)
    kb.freeze()
    subs = classify(kb)
    types = realize(kb, subs)
    report = gap_analysis(kb, subs, individual, target, types)
    return kb, prefixes, types, report


def cmd_check(args: argparse.Namespace, stdout: TextIO, stderr: TextIO) -> int:
    kb, prefixes, types, report = _reason(args, stderr)
    compliant = compliant_classes(kb, types, report.individual)
    if args.format == "json":
        print(report_json(report, compliant, prefixes), file=stdout)
    else:
        print(report_text(report, compliant, prefixes), file=stdout)
    return EXIT_GAPS if report.rows else EXIT_OK


def cmd_gaps(args: argparse.Namespace, stdout: TextIO, stderr: TextIO) -> int:
    kb, prefixes, types, report = _reason(args, stderr)
    if args.format == "json":
        print(report_json(report, [], prefixes, gaps_only=True), file=stdout)
    else:
        print("\n".join(gap_table(report.rows, prefixes)), file=stdout)
    return EXIT_GAPS if report.rows else EXIT_OK


def cmd_compile(args: argparse.Namespace, stdout: TextIO, stderr: TextIO) -> int:
    try:
        kb = compile_measures(load_measures(args.dsl))
    except OSError as exc:
        raise CliError(f"{args.dsl}: {exc.strerror or exc}") from None
    except DslError as exc:
        raise CliError(f"{args.dsl}: {type(exc).__name__}: {exc}") from None
    text = serialize(kb)
    declarations = sum(isinstance(a, Declaration) for a in kb.tbox)
    counts = f"{len(kb.tbox) - declarations} axioms, {declarations} declarations"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"wrote {args.output}: {counts}", file=stdout)
    else:
        stdout.write(text)
        print(counts, file=stderr)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, stdout: TextIO, stderr: TextIO) -> int:
    path = args.ontology or args.path
    if not path:
        raise CliError("classify needs an ontology (--ontology FILE)")
    kb = load_kb(path, stderr).freeze()
    prefixes = _prefixes(kb, args.prefix or ())
    print("\n".join(hierarchy_lines(kb, classify(kb), prefixes)), file=stdout)
    return EXIT_OK


def cmd_validate(args: argparse.Namespace, stdout: TextIO, stderr: TextIO) -> int:
    status = EXIT_OK
    for path in args.files:
        try:
            kb = load_kb(path, stderr)
        except CliError as exc:
            print(f"error: {exc}", file=stderr)
            status = EXIT_ERROR
            continue
        problems = kb.check_invariants()
        for problem in problems:
            print(f"{path}: invariant violated: {problem}", file=stderr)
        if problems:
            status = EXIT_ERROR
        else:
            print(f"ok {path}: {len(kb.tbox)} axioms, {len(kb.abox)} assertions", file=stdout)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nisonto", description="Directive compliance checks over a NIS ontology.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile", help="compile a measure DSL file to Turtle")
    p.add_argument("dsl")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_compile)

    for name, func, help_text in (
        ("check", cmd_check, "report inferred compliance and missing measures"),
        ("gaps", cmd_gaps, "print only the missing-measure table"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--ontology", required=True)
        p.add_argument("--facts", action="append", default=[])
        p.add_argument("--individual", required=True)
        p.add_argument("--target", default="nis:MemberState")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--prefix", action="append", default=[], metavar="NAME=EXPANSION")
        p.set_defaults(func=func)

    p = sub.add_parser("classify", help="print the inferred class hierarchy")
    p.add_argument("path", nargs="?")
    p.add_argument("--ontology")
    p.add_argument("--prefix", action="append", default=[], metavar="NAME=EXPANSION")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("validate", help="parse files and check KB invariants")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args, stdout, stderr)
    except (CliError, NisOntoError) as exc:
        print(f"error: {type(exc).__name__ + ': ' if isinstance(exc, NisOntoError) else ''}{exc}", file=stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
