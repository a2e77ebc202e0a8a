"""Checks CLI JSON output and exit codes."""
import json
import re
import subprocess
import sys

cli = sys.argv[1]
cases = [
    ["table1", "--group", "G2"],
    ["moduli", "E8", "--affine"],
    ["adjoint", "steinberg", "--n", "3", "--invariants", "2,-1/2"],
    ["bundle", "W2*Wd3*Wd3", "--curve", "both"],
]
number = re.compile(r"^-?\d+(/\d+)?$")
for args in cases:
    proc = subprocess.run([cli, "--json", *args], capture_output=True, text=True)
    doc = json.loads(proc.stdout)
    assert json.loads(json.dumps(doc)) == doc
    assert set(doc) >= {"command", "seed", "items", "summary"}, args
    s = doc["summary"]
    assert int(s["total"]) == len(doc["items"]), args
    assert int(s["failed"]) == sum(not i["pass"] for i in doc["items"]), args
    assert (proc.returncode == 0) == (s["failed"] == "0"), args
    for row in doc.get("rows", []):
        for key in ("rank", "degree", "h0", "h1", "k"):
            assert number.match(row[key]), (args, key, row[key])
    for item in doc["items"]:
        assert not isinstance(item["computed"], float)

# Input errors exit with 2, failing checks with 1, success with 0.
for args, code in [
    (["bundle", "wedge(O(1)+O(-1),1)"], 2),
    (["etale", "1,-1", "--gluings", "0,1"], 2),
    (["moduli", "E8", "--pairing"], 2),
    (["roots", "X9"], 2),
    (["roots", "E8"], 0),
]:
    got = subprocess.run([cli, *args], capture_output=True).returncode
    assert got == code, (args, got, code)
print("ok")
