"""Command line front end.

Subcommands: validate, classify, trace, semigroup, example. Exit codes are
part of the contract: 0 success, 2 invalid content (diagnostic on stdout,
prefixed "invalid:"), 3 malformed document (stderr), 4 file system trouble
(stderr), 5 resource limit hit (stderr). Internal consistency failures are
deliberately not caught; they are bugs and should surface as tracebacks.
"""

from __future__ import annotations

import argparse
import sys

from . import classify, documents, fixtures, model, oracle
from .errors import (
    CertificateError,
    DocumentError,
    ExampleError,
    PresentationError,
    ResourceLimitError,
)
from .model import KGraphPresentation, RayPresentation


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load(path: str):
    """Read, parse, and content-check one document; raises on any failure."""
    p = documents.parse_document(_read(path))
    if isinstance(p, KGraphPresentation):
        model.require_valid(p)
    else:
        model.require_valid_ray(p)
    return p


def cmd_validate(args) -> int:
    p = _load(args.path)
    if isinstance(p, KGraphPresentation):
        obj = {
            "valid": True,
            "kind": "graph",
            "format": documents.GRAPH_TAG,
            "k": p.k,
            "vertices": list(p.vertices),
        }
        noun = "vertex" if p.size == 1 else "vertices"
        text = (
            f"valid {documents.GRAPH_TAG} document: "
            f"k = {p.k}, {p.size} {noun}"
        )
    else:
        obj = {
            "valid": True,
            "kind": "ray",
            "format": documents.RAY_TAG,
            "k": p.k,
            "level_sizes": list(p.level_sizes),
            "prefix_length": p.prefix_length,
            "period": p.period,
        }
        text = (
            f"valid {documents.RAY_TAG} document: "
            f"k = {p.k}, {p.levels} listed levels"
        )
    if args.format == "json":
        sys.stdout.write(documents.canonical_json(obj))
    else:
        print(text)
    return 0


def cmd_classify(args) -> int:
    p = _load(args.path)
    report = documents.build_report(p, assume_aperiodic=args.assume_aperiodic)
    if args.format == "json":
        sys.stdout.write(documents.report_to_json(report))
    else:
        sys.stdout.write(documents.report_to_text(report))
    return 0


def cmd_trace(args) -> int:
    p = _load(args.path)
    if isinstance(p, RayPresentation):
        raise PresentationError("trace analysis needs a finite graph document")
    audit = classify.gordan_audit(p)
    if args.format == "json":
        sys.stdout.write(
            documents.canonical_json(
                {
                    "side": audit.side,
                    "trace": documents.trace_obj(audit.trace),
                    "witness": documents.witness_obj(audit.witness),
                }
            )
        )
        return 0
    if audit.side == "trace":
        t = audit.trace
        print(
            "trace: "
            + " ".join(f"{v}={x}" for v, x in zip(t.vertices, t.values))
        )
    else:
        w = audit.witness
        print("trace: none")
        print(
            "witness: "
            + " ".join(f"{v}={x}" for v, x in zip(p.vertices, w.witness))
        )
        for i, xi in enumerate(w.combination):
            print(
                f"combination color {i + 1}: "
                + " ".join(f"{v}={x}" for v, x in zip(p.vertices, xi))
            )
    return 0


def cmd_semigroup(args) -> int:
    p = _load(args.path)
    if isinstance(p, RayPresentation):
        raise PresentationError("the class table needs a finite graph document")
    box = oracle.Box(max_entry=args.box, max_degree=args.max_degree)
    summary = documents.oracle_summary(p, box)
    if args.format == "json":
        sys.stdout.write(
            documents.canonical_json(
                {
                    "input": documents.graph_document(p),
                    "oracle": documents.oracle_obj(summary),
                }
            )
        )
    else:
        for line in documents.oracle_lines(summary, p.vertices):
            print(line)
    return 0


def cmd_example(args) -> int:
    p = fixtures.named(args.name)
    sys.stdout.write(documents.canonical_json(documents.document_for(p)))
    return 0


def _add_format(sub) -> None:
    sub.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default: text)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgraphsem",
        description=(
            "Decide stable finiteness or pure infiniteness for higher-rank "
            "graph algebras and their type semigroups, with checkable "
            "certificates."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser(
        "validate", help="parse a document and check commutation and sources"
    )
    p_validate.add_argument("path", help="document file")
    _add_format(p_validate)
    p_validate.set_defaults(func=cmd_validate)

    p_classify = sub.add_parser(
        "classify", help="full structural, semigroup, and algebra report"
    )
    p_classify.add_argument("path", help="document file")
    _add_format(p_classify)
    p_classify.add_argument(
        "--assume-aperiodic",
        action="store_true",
        help="treat every cycle as having an entrance (k >= 2 only)",
    )
    p_classify.set_defaults(func=cmd_classify)

    p_trace = sub.add_parser(
        "trace", help="solve for an invariant mass function or its obstruction"
    )
    p_trace.add_argument("path", help="graph document file")
    _add_format(p_trace)
    p_trace.set_defaults(func=cmd_trace)

    p_semigroup = sub.add_parser(
        "semigroup", help="enumerate semigroup classes inside a finite box"
    )
    p_semigroup.add_argument("path", help="graph document file")
    _add_format(p_semigroup)
    p_semigroup.add_argument(
        "--box",
        type=int,
        default=6,
        metavar="N",
        help="largest vector entry enumerated (default: 6)",
    )
    p_semigroup.add_argument(
        "--max-degree",
        type=int,
        default=4,
        metavar="M",
        help="largest degree coordinate used for moves (default: 4)",
    )
    p_semigroup.set_defaults(func=cmd_semigroup)

    p_example = sub.add_parser(
        "example", help="write a named example document to stdout"
    )
    p_example.add_argument(
        "name",
        help=(
            "example name: o2, circle1, hereditary2, funnel2, funnel3, "
            "funnel2c, torus(2,3), cycle(2,3), or "
            "bridge(b=[2,2], r=[1,1], prefix=0)"
        ),
    )
    p_example.set_defaults(func=cmd_example)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (PresentationError, CertificateError, ExampleError) as exc:
        print(f"invalid: {exc}")
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 5
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
