#!/usr/bin/env python3
"""Validate the JSON report of every command against docs/report.schema.json."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def main() -> int:
    binary, root = sys.argv[1], Path(sys.argv[2])
    data = root / "data"
    schema = json.loads((root / "docs" / "report.schema.json").read_text())
    commands = [
        ["--method", "hare", "--seats", "101", "--votes-csv", data / "s2.csv"],
        ["compare", "--methods", "hare,sainte-lague", "--seats", "94,95", "--votes-csv", data / "alabama.csv"],
        ["check", "--quotas", data / "s3a.json", "--method", "sainte-lague"],
        ["check", "--votes-csv", data / "s2.csv", "--seats", "101"],
        ["scan", "alabama", "--votes-csv", data / "alabama.csv", "--from", "90", "--to", "100"],
        ["scan", "new-state", "--votes-json", data / "s6.json", "--new-votes", "17", "--new-name", "D"],
        ["scan", "instability", "--quotas", data / "s3a.json", "--against", data / "s3b.json",
         "--method", "sainte-lague", "--trials", "100", "--seed", "1"],
        ["scan", "bias", "--method", "dhondt", "--trials", "100", "--seed", "1"],
        ["verify", "--max-n", "3", "--max-m", "6", "--trials", "20", "--seed", "1"],
        ["scenarios"],
    ]
    failures = 0
    for args in commands:
        args = [str(a) for a in args]
        run = subprocess.run([binary, *args], capture_output=True, text=True)
        label = " ".join(args[:2])
        try:
            jsonschema.validate(json.loads(run.stdout), schema)
            print(f"ok   {label}")
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            failures += 1
            print(f"bad  {label}: {str(e).splitlines()[0]}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
