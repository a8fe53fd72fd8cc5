"""Runs the ekt binary on a spread of invocations and validates every JSON
report against the published schema; each invocation runs twice and the two
outputs must be byte-identical."""

import json
import subprocess
import sys

import jsonschema

ekt, data, schema_path = sys.argv[1:4]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

g = lambda name: f"{data}/groups/{name}.json"
b = lambda name: f"{data}/bundles/{name}.json"

cases = [
    (["irr", g("Z4")], 0),
    (["irr", g("1")], 0),
    (["irr", g("S4")], 0),
    (["irr", "--catalog", "Z11xZ5"], 0),
    (["--max-order", "4", "irr", g("D8")], 3),
    (["irr", f"{data}/groups/missing.json"], 2),
    (["clifford", g("D8")], 0),
    (["clifford", g("Q8"), "--normal", "center"], 0),
    (["clifford", g("S4"), "--normal", "all"], 0),
    (["clifford", g("D8"), "--normal", "1"], 4),
    (["bundle-verify", b("d8_rho")], 0),
    (["bundle-verify", b("trivial")], 0),
    (["bundle-verify", b("d8_rho_corrupted")], 1),
    (["bordism", g("D10"), "--normal", "file", "--max-degree", "12"], 0),
    (["bordism", g("Q8"), "--max-degree", "8"], 0),
    (["d2p", "--p", "3", "--max-degree", "20"], 0),
    (["d2p", "--p", "11", "--max-degree", "0"], 0),
    (["d2p", "--p", "25"], 2),
    (["catalog"], 0),
]

failures = 0
for args, expected in cases:
    runs = [subprocess.run([ekt, "--format", "json", *args], capture_output=True) for _ in range(2)]
    label = " ".join(args)
    if runs[0].stdout != runs[1].stdout:
        print(f"FAIL nondeterministic output: {label}")
        failures += 1
    if runs[0].returncode != expected:
        print(f"FAIL exit {runs[0].returncode}, expected {expected}: {label}")
        failures += 1
    try:
        report = json.loads(runs[0].stdout)
        validator.validate(report)
        if report["exit_status"] != runs[0].returncode:
            raise ValueError("exit_status field differs from the process status")
    except Exception as e:  # noqa: BLE001
        print(f"FAIL {label}: {e}")
        failures += 1
        continue
    print(f"ok   {label}")

sys.exit(1 if failures else 0)
