"""Exit codes, determinism and schema conformance of the command-line tool.

usage: cli_contract.py <path-to-choose2> <schema-dir>
"""

import json
import math
import subprocess
import sys
from pathlib import Path

import jsonschema

CLI = sys.argv[1]
SCHEMAS = Path(sys.argv[2])
REPORT = json.loads((SCHEMAS / "report.schema.json").read_text())
SAMPLE = json.loads((SCHEMAS / "sample.schema.json").read_text())

failures = []


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def report(args, code):
    r = run("verify", *args)
    expect(r.returncode == code, f"verify {' '.join(args)} exits {code} (got {r.returncode})")
    try:
        doc = json.loads(r.stdout)
    except json.JSONDecodeError as e:
        expect(False, f"verify {' '.join(args)} prints JSON ({e})")
        return None
    try:
        jsonschema.validate(doc, REPORT)
        expect(True, f"verify {' '.join(args)} matches the report schema")
    except jsonschema.ValidationError as e:
        expect(False, f"verify {' '.join(args)} matches the report schema: {e.message}")
    expect((doc["status"] == "fail") == any(c["status"] == "fail" for c in doc["checks"]),
           f"verify {' '.join(args)} overall status agrees with checks")
    return doc


def sample(args):
    r = run("sample", *args)
    expect(r.returncode == 0, f"sample {' '.join(args)} exits 0")
    doc = json.loads(r.stdout)
    try:
        jsonschema.validate(doc, SAMPLE)
        expect(True, f"sample {' '.join(args)} matches the sample schema")
    except jsonschema.ValidationError as e:
        expect(False, f"sample {' '.join(args)} matches the sample schema: {e.message}")
    return r.stdout, doc


# usage errors
for bad in (["verify", "operad", "--bad-flag"], ["verify", "cosimplicial", "--corrupt", "--level", "2"], ["verify", "nonsense"], ["sample", "nothing"],
            ["verify", "kontsevich", "--n", "1"], ["verify", "closure", "--mode", "fast"],
            ["verify", "config-model", "--n", "3", "--u", "1", "0"], []):
    r = run(*bad)
    expect(r.returncode == 2, f"{' '.join(bad) or '(no args)'} exits 2 (got {r.returncode})")
    expect(r.stdout == "", f"{' '.join(bad) or '(no args)'} keeps stdout empty")
r = run("verify", "operad", "--bad-flag")
expect("Usage" in r.stderr or "usage" in r.stderr, "usage text on stderr")

# passing and failing reports
report(["chains", "--seed", "3"], 0)
report(["operad", "--max-arity", "3"], 0)
report(["bimodule", "--m", "1", "--max-arity", "6"], 0)
report(["bimodule", "--m", "2", "--max-arity", "12"], 1)
report(["alpha", "--m", "2", "--samples", "5"], 0)
report(["kontsevich", "--k", "5", "--n", "3", "--samples", "10", "--seed", "4"], 0)
report(["closure", "--m", "1", "--k", "2", "--samples", "5", "--seed", "7"], 0)
report(["cosimplicial", "--m", "1", "--level", "3", "--samples", "3"], 0)
report(["config-model", "--m", "1", "--level", "2", "--samples", "3", "--u", "0", "0", "0", "2"], 0)
for suite in ("operad", "bimodule", "alpha", "chains", "kontsevich", "closure", "cosimplicial",
              "config-model"):
    doc = report([suite, "--corrupt", "--samples", "3", "--max-arity", "4", "--level", "3"], 1)
    if doc:
        expect(any(c["status"] == "fail" and isinstance(c["witness"], dict) for c in doc["checks"]),
               f"{suite} --corrupt names a witness")

# parameters echo seed and tolerances; reports deterministic apart from wallTime
a = report(["kontsevich", "--k", "4", "--samples", "6", "--seed", "11", "--tol", "1e-7"], 0)
b = report(["kontsevich", "--k", "4", "--samples", "6", "--seed", "11", "--tol", "1e-7"], 0)
if a and b:
    expect(a["parameters"]["seed"] == 11 and a["parameters"]["tolerances"]["fourConsistency"] == 1e-7,
           "parameters echo seed and tolerances")
    a.pop("wallTime")
    b.pop("wallTime")
    expect(a == b, "identical parameters give identical reports")

# --out writes the same report
out = Path("cli_contract_report.json")
r = run("verify", "chains", "--seed", "3", "--out", str(out))
expect(r.returncode == 0 and out.exists(), "--out writes a file")
if out.exists():
    expect(json.loads(out.read_text())["suite"] == "chains", "--out file holds the report")
    out.unlink()

# samples
first, _ = sample(["config", "--k", "4", "--n", "3", "--seed", "1"])
second, _ = sample(["config", "--k", "4", "--n", "3", "--seed", "1"])
expect(first == second, "sample config is byte-identical across runs")
_, g = sample(["gauss", "--k", "4", "--n", "4", "--seed", "2"])
norms = [math.sqrt(sum(x * x for x in p["value"])) for p in g["payload"]["map"]["pairs"]]
expect(len(norms) == 6 and all(abs(v - 1) <= 1e-9 for v in norms), "gauss vectors have unit norm")
_, lad = sample(["ladder", "--flavor", "config", "--m", "2", "--level", "2", "--seed", "3"])
payload = lad["payload"]
expect("anchors" in payload and "u" in payload, "ladder dump records anchors and u")
expect(len(payload["levels"]) == 3, "ladder dump covers levels 0..2")
sample(["ladder", "--flavor", "numeric", "--m", "2", "--level", "2", "--seed", "3"])
sample(["ladder", "--flavor", "sinha", "--level", "2", "--seed", "3"])

# the written doubles round-trip
_, c = sample(["config", "--k", "3", "--n", "3", "--seed", "5"])
for p in c["payload"]["points"]:
    for x in p:
        expect(float(repr(x)) == x, "coordinates round-trip")
        break
    break

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
