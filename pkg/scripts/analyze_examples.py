#!/usr/bin/env python3
"""Run the whole pipeline over the bundled example algebras and print a summary.

Usage: python scripts/analyze_examples.py [--n 1 3 5] [--json]
"""

from __future__ import annotations

import argparse
import json
import sys

import splitsuper as ss


def summarize(label: str, doc: dict, as_json: bool) -> dict:
    alg, cartan, _ = ss.parse_document(doc)
    violations = alg.validate()
    if violations:
        return {"label": label, "valid": False, "violations": len(violations)}
    try:
        dec = ss.split(alg, cartan)
    except ss.SplitError as exc:
        return {"label": label, "valid": True, "split": False, "reason": str(exc)}
    kernel = ss.leibniz_kernel(alg)
    part = ss.partition_roots(dec, kernel)
    hyp = ss.hypothesis_report(dec, part)
    conn = ss.connectivity_summary(dec, part)
    theorem = ss.theorem_verdict(dec, part, hyp, conn)
    oracle = ss.oracle_verdict(dec, part, 1 << 20)
    out = {
        "label": label,
        "valid": True,
        "split": True,
        "dim": alg.dim,
        "roots": sorted(
            ",".join(alg.field.format(v) for v in r.values) for r in dec.roots
        ),
        "kernel_dim": kernel.dim,
        "classes": len(ss.connection_classes(dec)),
        "theorem": theorem.verdict,
        "oracle": oracle.verdict,
        "candidates": oracle.candidates_checked,
    }
    try:
        out["case"] = ss.classify(dec, part, hyp, conn, oracle).case_tag
    except ss.ClassifyPreconditionError as exc:
        out["case"] = f"preconditions unmet: {', '.join(exc.failed)}"
    return out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--n", type=int, nargs="*", default=[1, 2, 3, 4, 5],
        help="module family sizes to include",
    )
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    rows = [summarize("five-dim", ss.gen_example1(), args.json)]
    for n in args.n:
        rows.append(summarize(f"module n={n}", ss.gen_example2(n), args.json))

    if args.json:
        json.dump(rows, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
        return 0
    for row in rows:
        print(f"== {row['label']}")
        for key, value in row.items():
            if key == "label":
                continue
            print(f"  {key}: {value}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
