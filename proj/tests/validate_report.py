import json
import subprocess
import sys

import jsonschema

binary, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
for args in (["audit", "--all", "--seed", "0"], ["audit", "--select", "sp", "--seed", "7"]):
    out = subprocess.run([binary, "--format", "json", *args], check=True, capture_output=True, text=True).stdout
    jsonschema.validate(json.loads(out), schema)
print("report schema ok")
