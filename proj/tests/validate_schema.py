"""Run the CLI on a spread of commands and validate every envelope against docs/report.schema.json."""

import json
import subprocess
import sys

import jsonschema

tool, schema_path, data = sys.argv[1:4]
schema = json.load(open(schema_path))
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

circle = f"{data}/circle.dd"
rotation = f"{data}/rotation.dd"
runs = [
    ["apply", "X^2 + Y^2", "--problem", circle],
    ["is-constant", "X/Y", "--problem", circle],
    ["is-diff-ideal", "X^2 + Y^2", "--problem", circle],
    ["diff-closure", "X + Y^2", "--problem", circle],
    ["darboux", "--problem", rotation],
    ["primes", "--problem", rotation],
    ["first-integrals", "--problem", circle, "--max-deg", "1"],
    ["report", "--problem", rotation],
    ["family", "X", "Y", "--problem", circle, "--c", "1,2,-1/3"],
    ["witness", "--problem", rotation],
    ["print", "--problem", f"{data}/rational_image.dd", "--clear-denominators"],
    ["scenario", "paper-s1-circle"],
    ["apply", "X", "--problem", f"{data}/missing_image.dd"],
    ["no-such-command"],
]

# The last two runs exercise the error envelope.
failed = 0
for args in runs:
    out = subprocess.run([tool, *args, "--json"], capture_output=True, text=True).stdout
    envelope = json.loads(out)
    errors = [e.message for e in validator.iter_errors(envelope)]
    if ("error" in envelope) != (args in runs[-2:]):
        errors.append("unexpected outcome")
    status = "ok" if not errors else "invalid: " + "; ".join(errors)
    print(f"{' '.join(args)}: {status}")
    failed += bool(errors)
sys.exit(1 if failed else 0)
