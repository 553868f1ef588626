"""Validate knotconc JSON output against the shipped schemas."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def output(cli, *args):
    return json.loads(subprocess.run([cli, *args], check=True, capture_output=True, text=True).stdout)


def main():
    cli, schemas = sys.argv[1], Path(sys.argv[2])
    pl = json.loads((schemas / "pl_function.schema.json").read_text())
    cert = json.loads((schemas / "certificate.schema.json").read_text())

    for expr in ["T(2,3)", "T(9,13) - T(4,9) - T(9,10)", "3*T(4,5) - T(2,7)", "0"]:
        jsonschema.validate(output(cli, "upsilon", expr, "--json"), pl)
    jsonschema.validate(output(cli, "certify", "4", "9", "1"), cert)
    jsonschema.validate(output(cli, "certify", "10", "21", "2"), cert)
    family = output(cli, "family", "--count", "3", "--json")
    jsonschema.validate(family, cert)
    jsonschema.validate(family["independence"], cert["$defs"]["certificate"] | {"$defs": cert["$defs"]})
    jsonschema.validate(output(cli, "family", "--count", "0", "--json"), cert)

    bad = output(cli, "upsilon", "T(2,3)", "--json")
    bad["values"][1] = -1.0
    try:
        jsonschema.validate(bad, pl)
    except jsonschema.ValidationError:
        pass
    else:
        sys.exit("schema accepted a float value")
    print("schemas ok")


if __name__ == "__main__":
    main()
