#!/usr/bin/env python3
"""Run czcp with --json over every subcommand, validate each report against
report.schema.json, and recompute the emitted profiles from the emitted
sequences."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

RUNS = [
    (["verify", "K6"], 0),
    (["verify", "EX60"], 0),
    (["verify", "GCP26"], 0),
    (["verify", "--first", "+++-", "--second", "+++-"], 1),
    (["verify", "--first", "+x", "--second", "++"], 2),
    (["verify", "no-such-pair"], 2),
    (["construct", "--gcp", "GCP2", "--seed", "K6", "--mode", "theorem1"], 0),
    (["construct", "--gcp", "GCP10", "--seed", "K6"], 0),
    (["construct", "--gcp", "GCP2", "--seed", "K48", "--mode", "lemma8"], 0),
    (["construct", "--gcp", "GCP10", "--seed", "GCP2", "--mode", "gcp"], 0),
    (["construct", "--gcp", "K6", "--seed", "K6"], 1),
    (["construct", "--gcp", "GCP2", "--seed", "K6", "--mode", "extend"], 0),
    (["search", "--length", "6", "--mid-abs", "2"], 0),
    (["search", "--length", "12", "--shards", "2", "--shard", "1"], 0),
    (["search", "--length", "24"], 2),
    (["catalog"], 0),
    (["reproduce", "table1"], 0),
    (["reproduce", "table2"], 0),
    (["reproduce", "table3"], 0),
    (["reproduce", "table4"], 0),
    (["reproduce", "example1"], 0),
]


def accf(a, b, u):
    n = len(a)
    if u >= 0:
        return sum(a[i] * b[i + u] for i in range(n - u))
    return sum(a[i - u] * b[i] for i in range(n + u))


def ints(text):
    return [1 if c == "+" else -1 for c in text]


def check_pair(p):
    a, b = ints(p["first"]), ints(p["second"])
    n = len(a)
    aacs = [accf(a, a, u) + accf(b, b, u) for u in range(n)]
    accs = [accf(a, b, u) + accf(b, a, u) for u in range(n)]
    assert p["length"] == n, p["label"]
    assert p["profiles"]["aacs"] == aacs, f"{p['label']}: aacs does not round-trip"
    assert p["profiles"]["accs"] == accs, f"{p['label']}: accs does not round-trip"


def main():
    czcp, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        bad = Path(tmp) / "bad.txt"
        bad.write_text("+-+\n+-*\n")
        runs = RUNS + [(["verify", str(bad)], 2)]
        for args, expected_code in runs:
            proc = subprocess.run([czcp, *args, "--json"], capture_output=True, text=True)
            label = " ".join(args)
            try:
                report = json.loads(proc.stdout)
                validator.validate(report)
                assert proc.returncode == expected_code, f"exit {proc.returncode}, expected {expected_code}"
                assert report["exit_code"] == proc.returncode
                for p in report.get("pairs", []):
                    check_pair(p)
                print(f"ok    {label}")
            except (AssertionError, json.JSONDecodeError, jsonschema.ValidationError) as e:
                failures += 1
                print(f"FAIL  {label}: {e}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
