import json
import subprocess
import sys

EXE = sys.argv[1]
failures = []


def run(*args):
    return subprocess.run([EXE, *args], capture_output=True, text=True)


def expect(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


r = run("invariants", "a|b|c|d", "((a,b),(c,d))")
expect(r.returncode == 0, "invariants exits 0")
expect("(y - 1)^2*(y - 4)" in r.stdout, "invariants prints factored chi")

r = run("invariants", "a|b|c|d", "((a,b),(c,d))", "--method", "both", "--json")
expect(r.returncode == 0, "invariants --json exits 0")
doc = json.loads(r.stdout)
for key in ["subject", "chi_factored", "chi_coeffs", "exponents", "mobius", "m_poly",
            "z_poly", "card", "agreement", "timings"]:
    expect(key in doc, f"json has {key}")
expect(doc["exponents"] == [1, 1, 4], "exponents of the balanced tree")
expect(doc["mobius"] == -4, "mobius of the balanced tree")
expect(all(doc["agreement"].values()), "fast and brute agree")

expect(run("invariants", "((a,c),b)", "((a,b),c)").returncode == 1, "incomparable exits 1")
expect(run("invariants", "(a,b", "(a,b)").returncode == 1, "parse error exits 1")
expect(run("frobnicate").returncode == 1, "unknown subcommand exits 1")
expect(run("--help").returncode == 0, "help exits 0")

r = run("hasse", "a|b|c", "((a,b),c)")
expect(r.returncode == 0, "hasse exits 0")
expect(r.stdout.count("[label=") == 5, "hasse has 5 nodes")
expect(r.stdout.count("->") == 6, "hasse has 6 edges")
r = run("hasse", "a|b|c", "((a,b),c)", "--format", "json")
expect(len(json.loads(r.stdout)["elements"]) == 5, "hasse json has 5 elements")

r = run("enumerate", "--labels", "a,b,c")
expect(r.returncode == 0, "enumerate exits 0")
expect(len([l for l in r.stdout.splitlines() if l and not l.startswith("#")]) == 3, "3 trees")
r = run("enumerate", "--labels", "a,b,c", "--what", "forests", "--json")
expect(len(json.loads(r.stdout)) == 7 or len(json.loads(r.stdout).get("items", [])) == 7,
       "7 forests")
r = run("enumerate", "--labels", "x", "--what", "forests")
expect(len([l for l in r.stdout.splitlines() if l and not l.startswith("#")]) == 1, "1 forest")

r = run("verify", "--max-labels", "3", "--json")
expect(r.returncode == 0, "verify exits 0")
expect(json.loads(r.stdout)["passed"] is True, "verify passes")
expect(run("verify", "--max-labels", "9").returncode == 1, "out-of-range labels exit 1")

print("cli:", "FAIL" if failures else "PASS")
sys.exit(1 if failures else 0)
