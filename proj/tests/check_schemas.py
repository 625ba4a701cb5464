"""Runs every CLI subcommand on the fixture workspace and validates the JSON
output against the schemas in docs/."""

import json
import subprocess
import sys

import jsonschema

cli, root = sys.argv[1], sys.argv[2]
workspace = f"{root}/tests/fixtures/workspace.json"
reports = json.load(open(f"{root}/docs/reports.schema.json"))
jsonschema.validate(json.load(open(workspace)), json.load(open(f"{root}/docs/workspace.schema.json")))


def check(definition, *args, expect=0):
    proc = subprocess.run([cli, "--workspace", workspace, *args], capture_output=True, text=True)
    assert proc.returncode == expect, (args, proc.returncode, proc.stderr)
    schema = {"$ref": f"#/$defs/{definition}", "$defs": reports["$defs"]}
    jsonschema.validate(json.loads(proc.stdout), schema)


check("group", "homology", "--complex", "mc2", "--degree", "0")
check("homology", "homology", "--complex", "mc2")
check("snf", "snf", "--complex", "mc2", "--degree", "1")
check("snf", "snf", "--map", "x2", "--degree", "0")
check("mapping_cone", "mapping-cone", "--map", "x2")
check("sequence", "puppe", "--map", "x2", "--depth", "6")
check("sequence", "puppe", "--map", "x2", "--depth", "6", "--engine", "efunctor", "--variant", "nonnegative")
check("les", "les", "--map", "x2", "--from", "-2", "--to", "2", "--format", "json")
check("les", "les", "--map", "x2", "--engine", "triple", "--triple", "1", "--format", "json")
check("square_witness", "check-square", "--square", "pullback_of_fibration")
check("square_witness", "check-square", "--square", "pullback_of_fibration", "--fiber", expect=2)
check("compare_paths", "compare-paths", "--map", "x2", "--depth", "6")
check("extend_e", "extend-e", "--map", "x2", "--depth", "6")
print("all reports match their schemas")
