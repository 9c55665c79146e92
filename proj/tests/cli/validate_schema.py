"""Validates analyze reports against the JSON schema."""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path, *inputs = sys.argv[1:]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    for path in inputs:
        out = subprocess.run([cli, "analyze", path, "--p", "3/2,2,3,5"],
                             check=True, capture_output=True, text=True).stdout
        errors = sorted(validator.iter_errors(json.loads(out)), key=str)
        for e in errors:
            print(f"{path}: {e.message} at {list(e.path)}")
        if errors:
            return 1
        print(f"{path}: valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
