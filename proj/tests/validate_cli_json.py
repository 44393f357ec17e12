"""Run CLI subcommands and validate their JSON against docs/schemas."""
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

cli, schemas = sys.argv[1], pathlib.Path(sys.argv[2])
docs = {p.name: json.loads(p.read_text()) for p in schemas.glob("*.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in docs.items())

runs = {
    "fredholm.schema.json": ["fredholm", "--preset", "pearcey", "--E", "-1,1"],
    "pde-residual.schema.json": ["pde-residual", "--equation", "intro4", "--preset", "airy", "--E", "-1,1"],
    "asymptotics.schema.json": ["asymptotics", "--tau", "4,8", "--E", "0,1"],
    "accept.schema.json": ["accept", "--only", "1,2", "--format", "json"],
}
for schema, args in runs.items():
    out = subprocess.run([cli, *args], check=True, capture_output=True, text=True).stdout
    first = subprocess.run([cli, *args], check=True, capture_output=True, text=True).stdout
    if args[0] != "accept":  # accept reports wall time
        assert out == first, f"{args[0]}: output differs between identical runs"
    Draft202012Validator(docs[schema], registry=registry).validate(json.loads(out))
    print("ok", args[0])
