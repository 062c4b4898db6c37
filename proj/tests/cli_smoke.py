"""Exit codes and outputs of the rdlab command-line tool."""

import json
import os
import subprocess
import sys
import tempfile

RDLAB = sys.argv[1]
failures = []


def run(*args):
    return subprocess.run([RDLAB, *args], capture_output=True, text=True)


def expect(name, cond, proc):
    if not cond:
        failures.append(f"{name}: exit {proc.returncode}\n{proc.stdout}\n{proc.stderr}")


with tempfile.TemporaryDirectory() as tmp:
    c4 = os.path.join(tmp, "c4.dg")
    p = run("family", "symmetric-cycle", "4", "-o", c4)
    expect("family", p.returncode == 0 and os.path.exists(c4), p)

    p = run("check", "slupecki", "-k", "2", "-i", c4, "--json")
    report = json.loads(p.stdout) if p.returncode == 0 else {}
    expect("check holds", report.get("result", {}).get("holds") is True, p)
    expect("report fields", set(report) >= {"command", "inputs", "result", "stats", "version", "deterministic"}, p)

    again = run("check", "slupecki", "-k", "2", "-i", c4, "--json")
    expect("deterministic payload", json.loads(again.stdout)["result"] == report.get("result"), again)

    poset = os.path.join(tmp, "p.dg")
    run("family", "ordinal-sum", "2", "2", "2", "-o", poset)
    p = run("check", "slupecki", "-i", poset, "--budget-nodes", "3")
    expect("inconclusive", p.returncode == 2, p)
    p = run("check", "slupecki", "-i", poset)
    expect("fails with witness", p.returncode == 0 and "holds: false" in p.stdout, p)

    p = run("bmk", "12", "12")
    expect("bmk", p.returncode == 0 and p.stdout.split()[0] == "145", p)

    p = run("witness", "binary", "2", "6", "2")
    expect("refusal", p.returncode == 1 and p.stderr, p)

    op = os.path.join(tmp, "w.op")
    p = run("witness", "binary", "2", "3", "2", "-o", op)
    expect("witness written", p.returncode == 0 and os.path.exists(op), p)
    p = run("verify", "op", "-i", poset, "--op", op, "--json")
    expect("verify size mismatch", p.returncode == 1, p)

    p = run("check", "slupecki", "-i", c4, "--no-such-flag")
    expect("usage error", p.returncode == 1 and "Usage" in p.stderr, p)

    p = run("topo", "-i", c4, "--json")
    expect("topo", p.returncode == 0 and json.loads(p.stdout)["result"]["euler_characteristic"] == 0, p)

    p = run("gadget", "builtin", "crown", "6", "--json")
    expect("gadget", p.returncode == 0 and json.loads(p.stdout)["result"]["valid"] is True, p)

    p = run("hom", "count", "-i", c4, "--pin", "0=0")
    expect("hom count", p.returncode == 0 and "count: 21" in p.stdout, p)

    p = run("check", "slupecki", "-i", os.path.join(tmp, "missing.dg"))
    expect("missing file", p.returncode == 1, p)

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
