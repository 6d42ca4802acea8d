"""Validate every JSON document the CLI emits against schemas/."""
import json
import os
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

tool, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])


def schema(name):
    s = json.loads((schema_dir / f"{name}.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(s)
    return jsonschema.Draft202012Validator(s)


def run(args, env=None, expect=0):
    p = subprocess.run([tool, *args], capture_output=True, text=True, env=env)
    if p.returncode != expect:
        sys.exit(f"{args}: exit {p.returncode}\n{p.stderr}")
    return json.loads(p.stdout)


cases = [
    ("roots", ["roots", "--type", "G", "--rank", "2"]),
    ("roots", ["roots", "--type", "B", "--rank", "3", "--lattice", "adjoint"]),
    ("table", ["dtable", "--type", "A", "--rank", "2", "--format", "json"]),
    ("table", ["conv", "--type", "A", "--rank", "1", "--radius", "1", "--format", "json"]),
    ("hess", ["hess", "--type", "A", "--rank", "2", "--lambda", "1,1"]),
    ("hess", ["hess", "--type", "A", "--rank", "2", "--gl", "-1,0,1"]),
    ("weights", ["weights", "--type", "B", "--rank", "2", "--mu", "1,1"]),
    ("kmod", ["kmod", "--type", "A", "--rank", "2"]),
    ("kmod", ["kmod", "--type", "A", "--rank", "2", "--parabolic", "1"]),
    ("verify", ["verify", "--type", "A", "--rank", "2"]),
    ("verify", ["verify", "--type", "B", "--rank", "2", "--lattice", "adjoint"]),
    ("verify_all", ["verify-all", "--skip-a3"]),
]

failures = 0
for name, args in cases:
    errors = list(schema(name).iter_errors(run([*args, "--no-cache"])))
    for e in errors:
        print(f"FAIL {' '.join(args)}: {e.message} at {list(e.absolute_path)}")
    failures += bool(errors)
    if not errors:
        print(f"ok   {' '.join(args)}")

# The schemas must reject documents with unknown or missing fields.
doc = run(["hess", "--type", "A", "--rank", "1", "--lambda", "1", "--no-cache"])
broken = [dict(doc, extra=1), {k: v for k, v in doc.items() if k != "dim"}, dict(doc, betti="1")]
for b in broken:
    if schema("hess").is_valid(b):
        print("FAIL hess schema accepted a malformed document")
        failures += 1

with tempfile.TemporaryDirectory() as d:
    env = dict(os.environ, KSHADOW_CACHE_DIR=d)
    run(["weights", "--type", "A", "--rank", "2", "--mu", "2,1"], env=env)
    entries = sorted(pathlib.Path(d).glob("*.json"))
    kinds = set()
    for p in entries:
        doc = json.loads(p.read_text())
        kinds.add(doc["kind"])
        errors = list(schema("cache_entry").iter_errors(doc))
        for e in errors:
            print(f"FAIL cache entry {p.name}: {e.message}")
        failures += bool(errors)
    if kinds != {"weyl", "character"}:
        print(f"FAIL cache entries: expected weyl and character, found {sorted(kinds)}")
        failures += 1
    else:
        print(f"ok   {len(entries)} cache entries")

sys.exit(1 if failures else 0)
