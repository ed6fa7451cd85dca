"""Command line interface.

Exit codes: 0 success, 1 a mathematical check failed (or a verdict other
than Simple under --expect-simple), 2 input or usage error including an
exceeded enumeration bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .algebra import Superalgebra, leibniz_kernel
from .analysis import (
    DEFAULT_ORACLE_BOUND,
    ClassifyPreconditionError,
    OracleBoundExceeded,
    classify,
    hypothesis_report,
    lemma_checks,
    oracle_verdict,
    theorem_verdict,
)
from .connections import (
    VerificationError,
    connected,
    connection_classes,
    connectivity_summary,
    decompose,
    neg_i_connected,
)
from .documents import DocumentError, canonical_json, parse_document
from .fields import FieldError, parse_field_spec
from .generators import fuzz_corpus, gen_example1, gen_example2
from .linalg import Subspace
from .reports import (
    SCHEMA_VERSION,
    classes_json,
    classification_json,
    decomposition_json,
    graded_json,
    graded_witness_json,
    hypotheses_json,
    machine_json,
    oracle_json,
    partition_json,
    render_text,
    root_json,
    split_json,
    subspace_json,
    validation_json,
    vector_json,
    verdict_json,
    witness_json,
)
from .splitting import (
    NotAbelianError,
    NotGradedError,
    NotSplitError,
    Root,
    SplitError,
    partition_roots,
    split,
    verify_split_facts,
)


class UsageError(Exception):
    pass


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(machine_json(report))
    else:
        sys.stdout.write(render_text(report))


def _jsonable(field, obj):
    from .algebra import GradedSubspace

    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return field.format(obj)
    if isinstance(obj, GradedSubspace):
        return graded_json(field, obj)
    if isinstance(obj, Subspace):
        return subspace_json(field, obj)
    if isinstance(obj, Root):
        return root_json(field, obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(field, v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        if obj and all(isinstance(x, (Fraction, int)) for x in obj):
            return vector_json(field, obj)
        return [_jsonable(field, x) for x in obj]
    return str(obj)


def _load(path: str, field_spec: str):
    override = None
    if field_spec:
        try:
            override = parse_field_spec(field_spec)
        except FieldError as exc:
            raise UsageError(str(exc)) from exc
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON in {path}: {exc}") from exc
    return parse_document(obj, field_override=override)


def _validated(alg: Superalgebra, report: dict, as_json: bool):
    violations = alg.validate()
    report["validation"] = validation_json(alg, violations)
    if violations:
        _emit(report, as_json)
        return False
    return True


def _split_stage(alg, cartan, report: dict, as_json: bool):
    if not cartan:
        raise UsageError("document carries no subalgebra generators (cartan)")
    try:
        dec = split(alg, cartan)
    except NotSplitError as exc:
        report["split_error"] = {
            "type": "NotSplit",
            "kind": exc.kind,
            "message": str(exc),
            "witness": _jsonable(alg.field, exc.witness),
        }
        _emit(report, as_json)
        return None
    except NotGradedError as exc:
        report["split_error"] = {
            "type": "NotGraded",
            "message": str(exc),
            "witness": _jsonable(alg.field, exc.vector),
        }
        _emit(report, as_json)
        return None
    except NotAbelianError as exc:
        report["split_error"] = {
            "type": "NotAbelian",
            "message": str(exc),
            "witness": _jsonable(
                alg.field, {"left": exc.left, "right": exc.right, "product": exc.product}
            ),
        }
        _emit(report, as_json)
        return None
    except SplitError as exc:
        report["split_error"] = {"type": "SplitError", "message": str(exc)}
        _emit(report, as_json)
        return None
    return dec


def _parse_root(field, text: str, width: int) -> Root:
    values = [s.strip() for s in text.split(",")]
    if len(values) != width:
        raise UsageError(f"root needs {width} value(s), got {len(values)}")
    try:
        return Root(field, tuple(field.parse(s) for s in values))
    except FieldError as exc:
        raise UsageError(f"bad root value in {text!r}: {exc}") from exc


def _parse_slot(field, text: str, width: int):
    if ":" not in text:
        raise UsageError(f"slot {text!r} needs a parity suffix, like 2:0")
    values, _, parity = text.rpartition(":")
    if parity not in ("0", "1"):
        raise UsageError("slot parity must be 0 or 1")
    return _parse_root(field, values, width), int(parity)


def cmd_check(args) -> int:
    alg, _, _ = _load(args.file, args.field)
    report = {"schema": SCHEMA_VERSION, "command": "check"}
    if not _validated(alg, report, args.json):
        return 1
    _emit(report, args.json)
    return 0


def cmd_split(args) -> int:
    alg, cartan, _ = _load(args.file, args.field)
    report = {"schema": SCHEMA_VERSION, "command": "split"}
    if not _validated(alg, report, args.json):
        return 1
    dec = _split_stage(alg, cartan, report, args.json)
    if dec is None:
        return 1
    report["split"] = split_json(dec)
    facts = verify_split_facts(dec)
    report["split_facts_ok"] = not facts
    if facts:
        report["split_fact_violations"] = [
            {
                "left": {"root": vector_json(alg.field, v.left[0]), "parity": v.left[1]},
                "right": {"root": vector_json(alg.field, v.right[0]), "parity": v.right[1]},
                "product": vector_json(alg.field, v.product),
            }
            for v in facts
        ]
        _emit(report, args.json)
        return 1
    _emit(report, args.json)
    return 0


def cmd_connect(args) -> int:
    alg, cartan, _ = _load(args.file, args.field)
    f = alg.field
    report = {"schema": SCHEMA_VERSION, "command": "connect"}
    if not _validated(alg, report, args.json):
        return 1
    dec = _split_stage(alg, cartan, report, args.json)
    if dec is None:
        return 1
    width = len(dec.h0_basis)
    if args.neg_i:
        part = partition_roots(dec, leibniz_kernel(alg))
        report["partition"] = partition_json(f, part)
        if args.from_root or args.to_root:
            if not (args.from_root and args.to_root):
                raise UsageError("--from and --to must be given together")
            a = _parse_slot(f, args.from_root, width)
            b = _parse_slot(f, args.to_root, width)
            try:
                w = neg_i_connected(dec, part, a, b, args.upsilon)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            report["query"] = {
                "from": {"root": root_json(f, a[0]), "parity": a[1]},
                "to": {"root": root_json(f, b[0]), "parity": b[1]},
                "upsilon": args.upsilon,
                "connected": w is not None,
            }
            if w is not None:
                report["witness"] = graded_witness_json(f, w)
        else:
            summary = connectivity_summary(dec, part)
            rendered = {}
            for side, info in summary.items():
                chains = {}
                for (a, b), w in sorted(
                    info["witnesses"].items(),
                    key=lambda kv: (kv[0][0][0], kv[0][0][1], kv[0][1][0], kv[0][1][1]),
                ):
                    key = "{}:{} -> {}:{}".format(
                        ",".join(root_json(f, a[0])), a[1],
                        ",".join(root_json(f, b[0])), b[1],
                    )
                    chains[key] = graded_witness_json(f, w)
                rendered[side] = {
                    "connected": info["connected"],
                    "failing_pair": _jsonable(
                        f,
                        [
                            {"root": s[0], "parity": s[1]}
                            for s in (info["failing_pair"] or ())
                        ],
                    )
                    or None,
                    "witnesses": chains,
                }
            report["connectivity"] = rendered
    else:
        if args.from_root or args.to_root:
            if not (args.from_root and args.to_root):
                raise UsageError("--from and --to must be given together")
            a = _parse_root(f, args.from_root, width)
            b = _parse_root(f, args.to_root, width)
            if not dec.is_root(a) or not dec.is_root(b):
                raise UsageError("both endpoints must be roots of the decomposition")
            w = connected(dec, a, b)
            report["query"] = {
                "from": root_json(f, a),
                "to": root_json(f, b),
                "connected": w is not None,
            }
            if w is not None:
                report["witness"] = witness_json(f, w)
        else:
            classes = connection_classes(dec)
            report["classes"] = classes_json(
                f, classes, witness_lookup=lambda x, y: connected(dec, x, y)
            )
    _emit(report, args.json)
    return 0


def cmd_decompose(args) -> int:
    alg, cartan, _ = _load(args.file, args.field)
    report = {"schema": SCHEMA_VERSION, "command": "decompose"}
    if not _validated(alg, report, args.json):
        return 1
    dec = _split_stage(alg, cartan, report, args.json)
    if dec is None:
        return 1
    try:
        result = decompose(dec)
    except VerificationError as exc:
        report["error"] = {"type": "VerificationError", "message": str(exc)}
        _emit(report, args.json)
        return 1
    report["decomposition"] = decomposition_json(alg.field, result)
    _emit(report, args.json)
    return 0


def cmd_analyze(args) -> int:
    alg, cartan, _ = _load(args.file, args.field)
    f = alg.field
    report = {"schema": SCHEMA_VERSION, "command": "analyze"}
    if not _validated(alg, report, args.json):
        return 1
    dec = _split_stage(alg, cartan, report, args.json)
    if dec is None:
        return 1
    report["split"] = split_json(dec)
    part = partition_roots(dec, leibniz_kernel(alg))
    report["partition"] = partition_json(f, part)
    conn = connectivity_summary(dec, part)
    report["connectivity"] = {
        side: {"connected": info["connected"]} for side, info in conn.items()
    }
    hyp = hypothesis_report(dec, part)
    report["hypotheses"] = hypotheses_json(f, hyp)
    try:
        theorem = theorem_verdict(dec, part, hyp, conn)
    except VerificationError as exc:
        report["error"] = {"type": "VerificationError", "message": str(exc)}
        _emit(report, args.json)
        return 1
    report["theorem_mode"] = verdict_json(f, theorem)

    bound = args.oracle_bound
    if bound is None:
        bound = int(os.environ.get("SLL_ORACLE_BOUND", DEFAULT_ORACLE_BOUND))
    oracle = None
    if part.maximal_length:
        oracle = oracle_verdict(dec, part, bound)
        report["oracle"] = oracle_json(f, oracle)
        checks = lemma_checks(dec, part, hyp, conn, oracle)
        report["lemma_checks"] = {
            "ok": not checks,
            "violations": [
                {"kind": kind, "ideal": graded_json(f, space)} for kind, space in checks
            ],
        }
        if checks:
            _emit(report, args.json)
            return 1
    else:
        report["oracle"] = {
            "verdict": "Undetermined",
            "skipped": True,
            "notes": ["enumeration requires one-dimensional slots"],
        }

    if oracle is not None:
        try:
            outcome = classify(dec, part, hyp, conn, oracle)
            report["classification"] = classification_json(f, outcome)
        except ClassifyPreconditionError as exc:
            report["classification"] = {
                "skipped": True,
                "unmet_preconditions": list(exc.failed),
            }
    else:
        report["classification"] = {
            "skipped": True,
            "unmet_preconditions": ["maximal_length"],
        }

    _emit(report, args.json)
    if args.expect_simple:
        oracle_simple = oracle is not None and oracle.verdict == "Simple"
        if not (theorem.verdict == "Simple" or oracle_simple):
            return 1
    return 0


def cmd_gen(args) -> int:
    if args.which == "example1":
        doc = gen_example1()
    else:
        if args.n is None:
            raise UsageError("example2 needs --n")
        if args.n < 1:
            raise UsageError("--n must be at least 1")
        doc = gen_example2(args.n)
    text = canonical_json(doc)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_fuzz(args) -> int:
    if args.count < 1:
        raise UsageError("--count must be positive")
    out_dir = Path(args.output)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise UsageError(f"cannot create {out_dir}: {exc}") from exc
    corpus = fuzz_corpus(args.seed, args.count)
    provenances = []
    for index, (doc, provenance) in enumerate(corpus):
        path = out_dir / f"fuzz_{index:04d}.json"
        path.write_text(canonical_json(doc), encoding="utf-8")
        provenances.append(provenance)
    (out_dir / "provenance.json").write_text(
        json.dumps(provenances, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )
    sys.stdout.write(f"wrote {len(corpus)} documents to {out_dir}\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", help="machine-readable report")
    shared.add_argument("--field", default=None, help="reinterpret scalars: Q or Fp:p")

    parser = argparse.ArgumentParser(
        prog="splitsuper",
        description="Split Leibniz superalgebras: decomposition, connectivity, simplicity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[shared], help="validate the identity and grading")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("split", parents=[shared], help="root-space decomposition")
    p.add_argument("file")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("connect", parents=[shared], help="connections and classes")
    p.add_argument("file")
    p.add_argument("--from", dest="from_root", default=None, metavar="ROOT")
    p.add_argument("--to", dest="to_root", default=None, metavar="ROOT")
    p.add_argument("--neg-i", action="store_true", help="graded kernel-avoiding chains")
    p.add_argument("--upsilon", choices=["I", "notI"], default="notI")
    p.set_defaults(func=cmd_connect)

    p = sub.add_parser("decompose", parents=[shared], help="ideal decomposition by classes")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("analyze", parents=[shared], help="full simplicity pipeline")
    p.add_argument("file")
    p.add_argument("--oracle-bound", type=int, default=None)
    p.add_argument("--expect-simple", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen", parents=[shared], help="emit a named example document")
    p.add_argument("which", choices=["example1", "example2"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fuzz", parents=[shared], help="write a deterministic corpus")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_fuzz)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OracleBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
