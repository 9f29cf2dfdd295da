"""Command-line entry point: lift, validate, query and ontology commands.

Exit codes: 0 success (warnings allowed), 1 conformance violations,
2 input or invocation errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import queries, turtle, vocab
from .validate import validate as _run_rules
from .ingest import IngestError, load_har, load_transcript
from .lift import lift_conversation
from .rdf import Dataset, Iri
from .turtle import ParseError, format_term, parse_trig
from .uri import UriError

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_ERROR = 2


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _guess_format(path: str) -> str:
    if path.endswith(".har"):
        return "har"
    if path.endswith(".trig"):
        return "trig"
    return "transcript"


def _load_dataset(path: str, fmt: Optional[str],
                  base: Optional[str]) -> Dataset:
    text = _read_input(path)
    fmt = fmt or _guess_format(path)
    if fmt == "trig":
        return parse_trig(text)
    if fmt == "har":
        return lift_conversation(load_har(text), base)
    return lift_conversation(load_transcript(text), base)


def _write_output(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_input_args(sub):
    sub.add_argument("input", help="input file, or '-' for stdin")
    sub.add_argument("--format", choices=("transcript", "har", "trig"),
                     help="input format (default: by file extension)")
    sub.add_argument("--base", metavar="IRI",
                     help="mint stable message IRIs under this base")
    sub.add_argument("--out", metavar="PATH", help="write output to PATH")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="httplift",
        description="Lift HTTP interactions into RDF, validate them and "
                    "answer the built-in competency questions.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_lift = subs.add_parser("lift", help="lift traffic to TriG/Turtle")
    _add_input_args(p_lift)
    p_lift.add_argument("--turtle", action="store_true",
                        help="emit Turtle (default graph only) instead of TriG")

    p_val = subs.add_parser("validate", help="run the conformance rules")
    _add_input_args(p_val)
    p_val.add_argument("--report", choices=("text", "tsv"), default="text")

    p_query = subs.add_parser("query", help="answer a competency question")
    p_query.add_argument("cq", help="competency question number (1-7)")
    _add_input_args(p_query)
    p_query.add_argument("--name", help="query parameter name (CQ7)")
    p_query.add_argument("--prop", metavar="IRI",
                         help="body property IRI (CQ6)")

    p_onto = subs.add_parser("ontology", help="print the vendored ontology")
    p_onto.add_argument("--extensions", action="store_true",
                        help="include the extension term declarations")
    p_onto.add_argument("--out", metavar="PATH")
    return parser


def _cmd_lift(args) -> int:
    dataset = _load_dataset(args.input, args.format, args.base)
    if args.turtle:
        text = turtle.serialize_turtle(dataset.default_graph, vocab.PREFIXES)
    else:
        text = turtle.serialize_trig(dataset, vocab.PREFIXES)
    _write_output(text, args.out)
    return EXIT_OK


def _cmd_validate(args) -> int:
    dataset = _load_dataset(args.input, args.format, args.base)
    report = _run_rules(dataset)
    text = report.to_tsv() if args.report == "tsv" else report.to_text()
    _write_output(text, args.out)
    return EXIT_VIOLATIONS if report.violations else EXIT_OK


def _cmd_query(args) -> int:
    if args.cq not in {"1", "2", "3", "4", "5", "6", "7"}:
        print("error: unknown competency question %r" % args.cq,
              file=sys.stderr)
        return EXIT_ERROR
    dataset = _load_dataset(args.input, args.format, args.base)
    g = dataset.default_graph

    def fmt(term):
        return format_term(term, vocab.PREFIXES)

    lines = []
    if args.cq == "1":
        lines = ["%s\t%s" % (fmt(b["m"]), fmt(b["mt"]))
                 for b in queries.cq1_media_types(dataset)]
    elif args.cq == "2":
        lines = ["%s\t%s" % (fmt(b["q"]), fmt(b["status"]))
                 for b in queries.cq2_interaction_status(dataset)]
    elif args.cq == "3":
        lines = [fmt(b["next"]) for b in queries.cq3_locations(dataset)]
    elif args.cq == "4":
        lines = [fmt(b["status"])
                 for b in queries.cq4_conversation_status(dataset)]
    elif args.cq == "5":
        requests = sorted({t.subject for t in g.match(None, vocab.RESP, None)},
                          key=fmt)
        lines = ["%s\t%s" % (fmt(q),
                             "true" if queries.cq5_negotiation(dataset, q)
                             else "false")
                 for q in requests]
    elif args.cq == "6":
        if not args.prop:
            print("error: CQ6 requires --prop", file=sys.stderr)
            return EXIT_ERROR
        lines = [fmt(v) for v in queries.cq6_body_values(dataset,
                                                         Iri(args.prop))]
    elif args.cq == "7":
        if not args.name:
            print("error: CQ7 requires --name", file=sys.stderr)
            return EXIT_ERROR
        lines = [fmt(v) for v in queries.cq7_query_param(dataset, args.name)]
    _write_output("".join(line + "\n" for line in lines), args.out)
    return EXIT_OK


def _cmd_ontology(args) -> int:
    _write_output(vocab.ontology_text(extensions=args.extensions), args.out)
    return EXIT_OK


_COMMANDS = {
    "lift": _cmd_lift,
    "validate": _cmd_validate,
    "query": _cmd_query,
    "ontology": _cmd_ontology,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except (IngestError, ParseError, UriError, OSError,
            UnicodeDecodeError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_ERROR


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
