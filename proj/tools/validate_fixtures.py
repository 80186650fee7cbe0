"""Validate every fixture document against the input schema.

Usage: validate_fixtures.py SCHEMA FIXTURE_DIR
Exits 77 (skip) when the jsonschema package is unavailable.
"""
import json
import pathlib
import sys

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed; skipping")
    sys.exit(77)


def main() -> int:
    schema = json.loads(pathlib.Path(sys.argv[1]).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for path in sorted(pathlib.Path(sys.argv[2]).glob("*.json")):
        errors = list(validator.iter_errors(json.loads(path.read_text())))
        for e in errors:
            print(f"{path.name}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"{path.name}: ok")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
