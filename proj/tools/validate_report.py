"""Validate a verify report against the shipped schema: validate_report.py SCHEMA CLI [args...]"""
import json
import subprocess
import sys

import jsonschema


def main():
    schema_path, cli, *args = sys.argv[1:]
    with open(schema_path) as f:
        schema = json.load(f)
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    if proc.returncode not in (0, 1):
        print(proc.stderr, file=sys.stderr)
        return 1
    report = json.loads(proc.stdout)
    jsonschema.validate(report, schema)
    if "--timing" in args:
        print(f"schema ok (timed): {len(report['suites'])} suites")
        return 0
    again = subprocess.run([cli, *args], capture_output=True, text=True).stdout
    if again != proc.stdout:
        print("verify output is not byte-identical across runs", file=sys.stderr)
        return 1
    print(f"schema ok: {sum(len(s['entries']) for s in report['suites'])} entries")
    return 0


if __name__ == "__main__":
    sys.exit(main())
