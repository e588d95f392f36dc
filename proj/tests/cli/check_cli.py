"""Runs the painleve CLI: JSON reports against the schema, text/JSON parity,
exit codes and error messages."""

import json
import re
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

failures = []


def run(*args):
    return subprocess.run([cli, *args], capture_output=True, text=True, timeout=300)


def expect(cond, what):
    print(("ok    " if cond else "FAIL  ") + what)
    if not cond:
        failures.append(what)


def text_outcomes(text):
    out = []
    for line in text.splitlines():
        m = re.match(r"^(PASS|FAIL|SKIP)  (\S+)  (\S+)  (.*)  \[", line)
        if m:
            out.append((m.group(1).lower(), m.group(2), m.group(3), m.group(4)))
    return out


def report(args, want_exit=0):
    j = run(*args, "--format", "json")
    t = run(*args, "--format", "text")
    name = " ".join(args)
    expect(j.returncode == want_exit and t.returncode == want_exit, f"{name}: exit {j.returncode}/{t.returncode}")
    doc = json.loads(j.stdout)
    errors = sorted(validator.iter_errors(doc), key=str)
    expect(not errors, f"{name}: schema ({errors[0].message if errors else 'valid'})")
    from_json = [(r["status"], r["id"], r["scope"], r["inputs"]) for r in doc["records"]]
    expect(from_json == text_outcomes(t.stdout), f"{name}: text and json outcomes agree")
    s = doc["summary"]
    expect(s["total"] == len(doc["records"]) == s["pass"] + s["fail"] + s["skip"], f"{name}: summary counts")
    expect(f"summary: {s['pass']} pass, {s['fail']} fail" in t.stdout, f"{name}: text summary")
    return doc


doc = report(["verify-groups"])
expect(doc["summary"]["fail"] == 0 and doc["summary"]["total"] > 0, "verify-groups: no failures")
gens = {r["inputs"].split(":")[0] + r["scope"] for r in doc["records"] if r["id"] == "symplectic"}
expect(len(gens) == 17, f"verify-groups: 17 generators ({len(gens)})")

doc = report(["verify-groups", "--system", "VI", "--jobs", "2", "--seed", "7"])
expect(doc["config"]["seed"] == 7 and doc["config"]["jobs"] == 2, "config echo")
expect(all(r["scope"] == "W_VI" for r in doc["records"]), "verify-groups --system VI is filtered")

doc = report(["degenerate", "VI", "V", "--what", "all"])
expect(doc["summary"]["fail"] == 0, "degenerate VI V: no failures")
expect(len(doc["branches"]) == 4, "degenerate VI V: branch per subgroup generator")
expect(any(r["id"] == "negative-control" and r["status"] == "pass" for r in doc["records"]),
       "degenerate VI V: raw s3 diverges")

doc = report(["degenerate", "IV", "II", "--what", "limits"])
lim = [r for r in doc["records"] if r["id"] == "limit"]
expect(len(lim) == 6 and all("|  table" in r["detail"] for r in lim), "limits print limit and table entry")
expect(doc["config"]["order"] == 12, "IV II default order 12")

doc = report(["numeric", "backlund", "--system", "II", "--gen", "s1"])
expect(doc["summary"]["pass"] == 1, "numeric backlund II s1 passes")
d1 = float(re.search(r"deviation (\S+)", doc["records"][0]["detail"]).group(1))
doc = report(["numeric", "backlund", "--system", "II", "--gen", "s1", "--h", "2e-3"])
d2 = float(re.search(r"deviation (\S+)", doc["records"][0]["detail"]).group(1))
expect(8 <= d2 / d1 <= 32, f"deviation ratio on doubling h: {d2 / d1:.2f}")

doc = report(["numeric", "degeneration", "--arrow", "V", "III", "--eps", "1e-3"])
expect(doc["summary"]["pass"] == 1, "numeric degeneration V III passes")

# a tolerance nobody can meet gives a failure record with a witness and exit 1
doc = report(["numeric", "backlund", "--system", "II", "--gen", "s1", "--tol", "1e-30"], want_exit=1)
expect(doc["records"][0]["witness"], "failure carries a witness")

r = run("verify-groups", "--system", "I")
expect(r.returncode != 0 and "no Bäcklund group for P_I" in r.stderr, "verify-groups --system I refused")
r = run("degenerate", "II", "I")
expect(r.returncode != 0 and "identity" in r.stderr, "degenerate II I refused with explanation")
r = run("degenerate", "VI", "IV")
expect(r.returncode != 0 and "no degeneration arrow" in r.stderr, "degenerate VI IV refused")

r = run("numeric", "trajectory", "--system", "I", "--initial", "0,0,0", "--to", "0.2", "--h", "0.1")
lines = r.stdout.splitlines()
expect(r.returncode == 0 and lines[0] == "t,q,p" and len(lines) == 4, "trajectory CSV")
q, p = (float(x) for x in lines[1 + 1].split(",")[1:])
expect(abs(q - 0.1**3 / 6) < 1e-15 and abs(p - (0.1**2 / 2 + 0.1**7 / 16)) < 1e-15, "trajectory first step")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
