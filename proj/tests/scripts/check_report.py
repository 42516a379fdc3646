"""Runs `level1kit verify --json` and validates the report against the schema."""

import json
import subprocess
import sys

import jsonschema

cli, schema_path, max_n = sys.argv[1], sys.argv[2], sys.argv[3]
proc = subprocess.run([cli, "verify", "--max-n", max_n, "--json"], capture_output=True, text=True)
report = json.loads(proc.stdout)
with open(schema_path) as f:
    jsonschema.validate(report, json.load(f))

no_failures = all(not s["failures"] for s in report["suites"])
assert report["pass"] == no_failures, "pass flag disagrees with the failure lists"
assert report["max_n"] == int(max_n)
assert [s["id"] for s in report["suites"]][:3] == ["bounds", "galls", "clusters-count"]
assert report["pass"], [s["failures"] for s in report["suites"] if s["failures"]]
assert proc.returncode == 0, proc.returncode
print("report valid;", len(report["suites"]), "suites")
