"""Batch command-line front end.

Subcommands: factorizations, build, verify, classify, double, dual, tensor,
op, cop, corr-classify, catalog list.  Groups are addressed by file path or
"catalog:NAME"; the HOPFBX_CATALOG environment variable may point at a
directory of group JSON files that overrides the built-in catalog.

Exit codes: 0 success, 1 domain error (stage/witness JSON on stderr),
2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import catalog as _catalog
from . import serialize as ser
from .classify import ClassifyError, classify, classify_boolean
from .coeff import SEMIRING_B, SEMIRING_Q
from .correspondence import classify_correspondence
from .groups import (
    GroupError,
    MatchingViolation,
    NotAnAction,
    NotExact,
    enumerate_exact_factorizations,
    make_factorization,
)
from .hopf import (
    AntipodeNotInvertible,
    HopfError,
    NotMonomial,
    coopposite,
    drinfeld_double,
    dual,
    opposite,
    tensor,
    verify_axioms,
)


class UsageError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"{path} is not valid JSON: {e}") from None


def _load_group(spec: str):
    if spec.startswith("catalog:"):
        name = spec.split(":", 1)[1]
        override = os.environ.get("HOPFBX_CATALOG")
        if override:
            candidate = Path(override) / f"{name}.json"
            if candidate.exists():
                return ser.group_from_json(_load_json(str(candidate)))
        try:
            return _catalog.catalog_group(name)
        except KeyError as e:
            raise UsageError(str(e)) from None
    return ser.group_from_json(_load_json(spec))


def _write_output(path: str | None, doc) -> None:
    text = ser.canonical_json(doc)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_hopf(path: str):
    return ser.hopf_from_json(_load_json(path))


def _parse_elements(spec: str) -> list[int]:
    try:
        return [int(x) for x in spec.split(",") if x != ""]
    except ValueError:
        raise UsageError(f"bad element list {spec!r}; expected comma-separated ints") from None


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in _catalog.catalog_names():
            print(name)
        return 0
    raise UsageError(f"unknown catalog action {args.action!r}")


def cmd_factorizations(args) -> int:
    g = _load_group(args.group)
    pairs = enumerate_exact_factorizations(g, max_order=args.max_order)
    for gplus, gminus in pairs:
        print(
            f"gplus={list(gplus)} order={len(gplus)} | "
            f"gminus={list(gminus)} order={len(gminus)}"
        )
    if args.emit:
        outdir = Path(args.emit)
        outdir.mkdir(parents=True, exist_ok=True)
        for idx, (gplus, gminus) in enumerate(pairs):
            f = make_factorization(g, gplus, gminus)
            path = outdir / f"{g.name}_f{idx:03d}.json"
            path.write_text(ser.canonical_json(ser.factorization_to_json(f)))
    return 0


def cmd_build(args) -> int:
    from .bicross import build_bicrossproduct

    if args.factorization:
        f = ser.factorization_from_json(_load_json(args.factorization))
    else:
        if not (args.group and args.gplus is not None and args.gminus is not None):
            raise UsageError("build needs --factorization, or GROUP with --gplus/--gminus")
        g = _load_group(args.group)
        f = make_factorization(g, _parse_elements(args.gplus), _parse_elements(args.gminus))
    h = build_bicrossproduct(f, args.semiring)
    _write_output(args.output, ser.hopf_to_json(h))
    if args.output:
        print(
            f"built {h.dim}-dim model over {h.semiring}: "
            f"{len(h.mult)} mult entries, {len(h.comult)} comult entries"
        )
    return 0


def cmd_verify(args) -> int:
    h = _load_hopf(args.hopf)
    report = verify_axioms(h)
    print(report.summary())
    if args.report:
        _write_output(args.report, ser.axiom_report_to_json(report))
    if report.ok:
        return 0
    name, witness = report.failures()[0]
    print(
        json.dumps(ser.error_to_json("AxiomViolation", (name,) + tuple(witness)), sort_keys=True),
        file=sys.stderr,
    )
    return 1


def cmd_classify(args) -> int:
    h = _load_hopf(args.hopf)
    result = classify(h) if h.semiring == SEMIRING_Q else classify_boolean(h)
    f = result.factorization
    trivial = result.tau is None or all(t.is_one() for t in result.tau)
    print(
        f"classified: |G|={f.group.order} |G+|={len(f.gplus)} |G-|={len(f.gminus)} "
        f"tau={'trivial' if trivial else 'nontrivial'}"
    )
    if args.output:
        _write_output(args.output, ser.classification_to_json(result))
    return 0


def _transform(args, fn, arity=1) -> int:
    if arity == 1:
        h = fn(_load_hopf(args.hopf))
    else:
        h = fn(_load_hopf(args.hopf1), _load_hopf(args.hopf2))
    _write_output(args.output, ser.hopf_to_json(h))
    if args.output:
        print(f"wrote {h.dim}-dim Hopf data to {args.output}")
    return 0


def cmd_corr_classify(args) -> int:
    c = ser.corr_hopf_from_json(_load_json(args.corr))
    result = classify_correspondence(c)
    f = result.factorization
    print(
        f"correspondence Hopf algebra is the group {f.group.name} of order "
        f"{f.group.order} with |G+|={len(f.gplus)}, |G-|={len(f.gminus)}"
    )
    if args.output:
        _write_output(args.output, ser.classification_to_json(result))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hopfbx",
        description="exact workbench for positively based Hopf algebras",
    )
    p.add_argument(
        "--threads",
        type=int,
        default=1,
        help="reserved; desk-scale inputs need no parallelism",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", help="catalog operations")
    c.add_argument("action", choices=["list"])
    c.set_defaults(fn=cmd_catalog)

    c = sub.add_parser("factorizations", help="enumerate exact factorizations")
    c.add_argument("group")
    c.add_argument("--emit", help="write one factorization JSON per pair to DIR")
    c.add_argument("--max-order", type=int, default=24)
    c.set_defaults(fn=cmd_factorizations)

    c = sub.add_parser("build", help="build the bicrossproduct model")
    c.add_argument("group", nargs="?")
    c.add_argument("--factorization", help="factorization JSON file")
    c.add_argument("--gplus", help="comma-separated element indices")
    c.add_argument("--gminus", help="comma-separated element indices")
    c.add_argument("--semiring", choices=[SEMIRING_Q, SEMIRING_B], default=SEMIRING_Q)
    c.add_argument("-o", "--output")
    c.set_defaults(fn=cmd_build)

    c = sub.add_parser("verify", help="check the ten Hopf axioms")
    c.add_argument("hopf")
    c.add_argument("--report", help="write the axiom report JSON here")
    c.set_defaults(fn=cmd_verify)

    c = sub.add_parser("classify", help="recover (G, G+, G-) and the rescaling")
    c.add_argument("hopf")
    c.add_argument("-o", "--output")
    c.set_defaults(fn=cmd_classify)

    for name, fn in (
        ("double", drinfeld_double),
        ("dual", dual),
        ("op", opposite),
        ("cop", coopposite),
    ):
        c = sub.add_parser(name, help=f"{name} construction")
        c.add_argument("hopf")
        c.add_argument("-o", "--output")
        c.set_defaults(fn=lambda a, f=fn: _transform(a, f))

    c = sub.add_parser("tensor", help="tensor product of two Hopf data files")
    c.add_argument("hopf1")
    c.add_argument("hopf2")
    c.add_argument("-o", "--output")
    c.set_defaults(fn=lambda a: _transform(a, tensor, arity=2))

    c = sub.add_parser("corr-classify", help="classify a correspondence Hopf algebra")
    c.add_argument("corr")
    c.add_argument("-o", "--output")
    c.set_defaults(fn=cmd_corr_classify)

    return p


_DOMAIN_STAGES = (
    (ClassifyError, None),
    (NotExact, "NotExact"),
    (NotAnAction, "NotAnAction"),
    (MatchingViolation, "MatchingViolation"),
    (NotMonomial, "NotMonomial"),
    (AntipodeNotInvertible, "AntipodeNotInvertible"),
    (GroupError, "NotAGroup"),
    (HopfError, "InvalidHopfData"),
)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    if args.threads < 1:
        print("--threads must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return 2
    except ValueError as e:
        for klass, stage in _DOMAIN_STAGES:
            if isinstance(e, klass):
                if stage is None:
                    doc = ser.error_to_json(e.stage, e.witness)
                else:
                    doc = ser.error_to_json(stage, (str(e),))
                print(json.dumps(doc, sort_keys=True), file=sys.stderr)
                return 1
        print(str(e), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
