"""Command-line front end.

Exit codes: 0 success, 2 domain rejection (bad input, not a del Pezzo surface),
1 internal inconsistency.  JSON output is byte-deterministic: keys are sorted
and nothing time-dependent goes into the payload (elapsed time goes to stderr).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import platform
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from . import families as fam
from . import sod
from . import surface as srf
from . import verify
from .errors import DomainRejection, InternalError, ParseError
from .lattice import DivisorClass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": "), ensure_ascii=True)


def versions() -> dict:
    return {"dp6": __version__, "python": platform.python_version()}


def run_report(command: str, results, digest: str | None = None, **extra) -> dict:
    report = {"command": command, "inputs_digest": digest, "results": results, "versions": versions()}
    report.update(extra)
    return report


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip() for r in [header, *rows]]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _emit(obj, fmt: str, render) -> None:
    print(dumps(obj) if fmt == "json" else render(obj))


def _fail(exc, code: int) -> int:
    print(dumps(exc.payload()))
    return code


# --- classify ------------------------------------------------------------------------


def _classify_one(args):
    family, item = args
    return fam.classify_item(family, item)


def _render_classify(report) -> str:
    rows = []
    for i, r in enumerate(report["results"]):
        if "error" in r:
            e = r["error"]
            rows.append([str(i), "-", f"{e['code']}: {e['condition'] or ''}".rstrip(": "), "", "", ""])
        else:
            rows.append([str(i), str(r["type"]), r["singularities"], str(r["z1"]), str(r["z2"]), str(r["z3"])])
    return _table(["#", "type", "singularities", "z1", "z2", "z3"], rows)


def cmd_classify(args) -> int:
    try:
        with open(args.file, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        return _fail(ParseError(f"cannot read {args.file}: {exc.strerror}"), 2)
    digest = hashlib.sha256(raw).hexdigest()
    try:
        data = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        return _fail(ParseError(f"malformed JSON: {exc}"), 2)
    if args.family not in fam.FAMILIES:
        return _fail(ParseError(f"unknown family {args.family!r}"), 2)

    single = not isinstance(data, list)
    items = [data] if single else data
    jobs = [(args.family, item) for item in items]
    try:
        if args.jobs > 1 and len(items) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(_classify_one, jobs))  # map keeps input order
        else:
            results = [_classify_one(j) for j in jobs]
    except InternalError as exc:
        return _fail(exc, 1)

    if single and "error" in results[0]:
        print(dumps(results[0]))
        return 2
    report = run_report("classify", results, digest, family=args.family)
    _emit(report, args.format, _render_classify)
    return 2 if any("error" in r for r in results) else 0


# --- tables --------------------------------------------------------------------------


def type_row(t_id: int) -> dict:
    row = srf.type_table(t_id)
    blocks = sod.block_table(t_id)
    row["blocks"] = blocks["blocks"]
    row["z_from_blocks"] = blocks["z_from_blocks"]
    row["simples"] = blocks["simples"]
    return row


def _render_tables(rows) -> str:
    body = [
        [str(r["type"]), ", ".join(r["delta_set"]) or "-", r["singularities"], " | ".join(r["blocks"]),
         str(r["z1"]), str(r["z2"]), str(r["z3"])]
        for r in rows
    ]
    return _table(["type", "delta set", "singularities", "blocks", "Z1", "Z2", "Z3"], body)


def cmd_tables(args) -> int:
    try:
        ids = [srf.get_type(args.type).id] if args.type is not None else [t.id for t in srf.TYPES]
        rows = [type_row(i) for i in ids]
    except DomainRejection as exc:
        return _fail(exc, 2)
    except InternalError as exc:
        return _fail(exc, 1)
    _emit(rows, args.format, _render_tables)
    return 0


# --- verify --------------------------------------------------------------------------


def cmd_verify(args) -> int:
    seed_text = os.environ.get("DP6_SEED", "0")
    try:
        seed = int(seed_text)
    except ValueError:
        return _fail(ParseError(f"DP6_SEED must be an integer, got {seed_text!r}"), 2)
    start = time.perf_counter()
    suite = verify.run_suite(seed, quick=args.quick)
    results = {"types": verify.type_reports(), "checks": [c.to_dict() for c in suite.checks]}
    digest = hashlib.sha256(f"seed={seed};quick={args.quick}".encode()).hexdigest()
    print(dumps(run_report("verify", results, digest, seed=seed, quick=args.quick, ok=suite.ok)))
    failed = [c.name for c in suite.checks if not c.passed]
    elapsed = time.perf_counter() - start
    print(f"{len(suite.checks) - len(failed)}/{len(suite.checks)} checks passed in {elapsed:.2f}s", file=sys.stderr)
    for name in failed:
        print(f"FAILED: {name}", file=sys.stderr)
    return 0 if suite.ok else 1


# --- cohomology ----------------------------------------------------------------------


def parse_divisor(text: str) -> DivisorClass:
    parts = text.split(",")
    if len(parts) != 4:
        raise ParseError(f"divisor needs 4 comma-separated integers, got {text!r}")
    try:
        return DivisorClass(*(int(p.strip()) for p in parts))
    except ValueError:
        raise ParseError(f"divisor needs 4 comma-separated integers, got {text!r}") from None


def cmd_cohomology(args) -> int:
    try:
        d = parse_divisor(args.divisor)
        h = srf.cohomology(args.type, d)
    except DomainRejection as exc:
        return _fail(exc, 2)
    except InternalError as exc:
        return _fail(exc, 1)
    print(f"({h[0]}, {h[1]}, {h[2]})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dp6", description="Sextic du Val del Pezzo surfaces toolkit.")
    p.add_argument("--version", action="version", version=f"dp6 {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify a family member (or a JSON list of them)")
    c.add_argument("family", choices=fam.FAMILIES)
    c.add_argument("file")
    c.add_argument("--format", choices=("json", "table"), default="json")
    c.add_argument("--jobs", type=int, default=1, help="worker processes for list inputs")
    c.set_defaults(func=cmd_classify)

    t = sub.add_parser("tables", help="per-type curve, block and Z-scheme tables")
    t.add_argument("--type", type=int)
    t.add_argument("--format", choices=("json", "table"), default="json")
    t.set_defaults(func=cmd_tables)

    v = sub.add_parser("verify", help="run the self-verification suite (seed from DP6_SEED)")
    v.add_argument("--quick", action="store_true", help="cut random sample counts by 10x")
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("cohomology", help="(h0, h1, h2) of a line bundle on the minimal resolution")
    h.add_argument("--type", type=int, required=True)
    h.add_argument("--divisor", required=True, help="a,b1,b2,b3 for a h + b1 e1 + b2 e2 + b3 e3; write --divisor=-1,0,0,0 for negatives")
    h.set_defaults(func=cmd_cohomology)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
