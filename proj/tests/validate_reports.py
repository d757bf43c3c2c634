#!/usr/bin/env python3
"""Runs the CLI for each JSON-producing command and validates the output."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    ["analyze", "--generator", "fibonacci", "--n-max", "12"],
    ["analyze", "--word", "abca"],
    ["analyze", "--generator", "s-word", "--n-max", "8"],
    ["analyze", "--generator", "episturmian", "--directive", "abc", "--n-max", "6"],
    ["verify", "--generator", "fibonacci", "--n-max", "10"],
    ["verify", "--generator", "thue-morse", "--n-max", "10"],
    ["verify", "--generator", "s-word", "--n-max", "8"],
    ["verify", "--generator", "periodic", "--block", "a", "--n-max", "4"],
    ["verify", "--word", "aabaa"],
    ["count", "--kind", "sturmian", "--n-max", "14"],
    ["count", "--kind", "rich", "--alphabet", "3", "--n-max", "8"],
    ["count", "--kind", "sturmian-palindrome", "--n-max", "0"],
    ["search", "--samples", "4", "--seed", "3", "--n-max", "6"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in CASES:
        proc = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for e in errors:
            print(f"FAIL {label}: {e.message} at {list(e.path)}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
