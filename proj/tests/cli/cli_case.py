#!/usr/bin/env python3
"""Runs one goe invocation, checks its exit code, validates the --json report
against the schema, re-runs to confirm byte-identical output modulo timing,
and checks optional JSON-pointer expectations on the report."""

import argparse
import json
import subprocess
import sys

import jsonschema


def pointer(doc, path):
    for part in path.strip("/").split("/"):
        doc = doc[int(part)] if isinstance(doc, list) else doc[part]
    return doc


def run(cmd):
    p = subprocess.run(cmd, capture_output=True, text=True, timeout=300)
    return p.returncode, p.stdout, p.stderr


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--goe", required=True)
    ap.add_argument("--schema", required=True)
    ap.add_argument("--exit", type=int, default=0)
    ap.add_argument("--expect", action="append", default=[], help="/json/pointer=json-value")
    ap.add_argument("--stdout-contains", action="append", default=[])
    ap.add_argument("args", nargs=argparse.REMAINDER)
    ns = ap.parse_args()
    args = [a for a in ns.args if a != "--"]

    code, plain, err = run([ns.goe, *args])
    if code != ns.exit:
        sys.exit(f"plain run exited {code}, expected {ns.exit}\n{err}")
    for needle in ns.stdout_contains:
        if needle not in plain:
            sys.exit(f"stdout lacks {needle!r}")

    code, out, err = run([ns.goe, "--json", *args])
    if code != ns.exit:
        sys.exit(f"--json run exited {code}, expected {ns.exit}\n{err}")
    report = json.loads(out)
    with open(ns.schema) as f:
        jsonschema.validate(report, json.load(f))
    if ns.exit != 0 and report.get("error", {}).get("exit_code") != ns.exit:
        sys.exit("error block does not carry the exit code")

    _, again, _ = run([ns.goe, "--json", *args])
    second = json.loads(again)
    report.pop("timing_ms")
    second.pop("timing_ms")
    if json.dumps(report, sort_keys=True) != json.dumps(second, sort_keys=True):
        sys.exit("report is not reproducible")

    for spec in ns.expect:
        path, _, value = spec.partition("=")
        got = pointer(report, path)
        want = json.loads(value)
        if got != want:
            sys.exit(f"{path}: got {got!r}, expected {want!r}")
    print("ok:", " ".join(args))


if __name__ == "__main__":
    main()
