#!/usr/bin/env python3
"""Runs the CLI over the samples and validates every JSON output against docs/schemas."""
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def main():
    cli, docs, samples = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    schema_dir = docs / "schemas"
    schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())

    runs = [
        ("indec", ["--format", "json"], "indec.schema.json", {0}),
        ("ar-quiver", ["--format", "json"], "ar_quiver.schema.json", {0}),
        ("export", [], "ar_quiver.schema.json", {0}),
        ("short-cycles", ["--format", "json", "--all-witnesses"], "short_cycles.schema.json", {0, 3}),
        ("slices", ["--format", "json"], "slices.schema.json", {0}),
        ("theorem-check", [], "certificate.schema.json", {0, 3}),
        ("export", ["--certificate"], "certificate.schema.json", {0, 3}),
    ]
    failures = 0
    count = 0
    for sample in sorted(samples.glob("*.alg")):
        for cmd, extra, schema_name, codes in runs:
            proc = subprocess.run([cli, cmd, str(sample), *extra], capture_output=True, text=True)
            tag = f"{cmd} {' '.join(extra)} {sample.name}"
            if proc.returncode == 2 and "NotSelfinjective" in proc.stderr and cmd in ("theorem-check", "export", "slices"):
                continue
            if proc.returncode not in codes:
                print(f"FAIL {tag}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                continue
            doc = json.loads(proc.stdout)
            validator = Draft202012Validator(schemas[schema_name], registry=registry)
            errors = list(validator.iter_errors(doc))
            count += 1
            if errors:
                failures += 1
                print(f"FAIL {tag}: {errors[0].message}")
    print(f"{count} documents validated, {failures} failures")
    return 1 if failures or count == 0 else 0


if __name__ == "__main__":
    sys.exit(main())
