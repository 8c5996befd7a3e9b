"""Smoke tests for the og4core extension module and the og4 CLI."""

import json
import os
import subprocess
import sys
import tempfile

import og4core as og


def check(cond, msg):
    if not cond:
        raise AssertionError(msg)


def test_permutations():
    p = og.Permutation([1, 0, 2])
    check((p * p).is_identity(), "involution squared should be the identity")
    check(p.inverse() == p, "a transposition is its own inverse")
    check(p.cycles() == "(0 1)", "cycle notation")
    q = og.Permutation([0, 2, 1])
    # left-to-right composition
    check((p * q)[0] == 2, "0^(pq) = (0^p)^q = 2")


def test_groups():
    s4 = og.PermGroup(4, [[1, 0, 2, 3], [1, 2, 3, 0]])
    check(s4.order() == 24, "Sym(4) order")
    check(not s4.stabilizer(0).contains(og.Permutation([1, 0, 2, 3])), "stabilizer")
    check(len(s4.orbit(2)) == 4, "transitive orbit")

    group, a, b = og.psl2(7)
    check(group.order() == 168, "PSL(2,7) order")
    check(a.order() == 2 and b.order() == 3, "generator orders")
    check((a * b).order() == 7, "order of ab")

    ag, aa, ab2 = og.alt_pair(5, "k2")
    check(ag.order() == 60 and aa.order() == 3 and ab2.order() == 5, "Alt(5) pair")


def test_families():
    a1 = og.build_family("A1", p=5)
    check(a1["vertex_count"] == 10 and a1["group_order"] == 20, "A1 sizes")
    check(a1["construction"] == "5.1", "construction id")

    rep = og.verify_family("A1", p=5)
    check(rep["all_passed"], "A1 verifies")
    names = {c["name"]: c["status"] for c in rep["checks"]}
    check(names["oriented"] == "pass", "orientedness check present")

    cert = og.verify_family("C2", p=7)
    check(cert["tier"] == "certificate", "certificate tier")
    check(cert["all_passed"], "C2 verifies")

    c4 = og.build_family("C4", p=7)
    check(c4["h_order"] == 168**8 * 4, "C4 order formula, exact big integer")

    edges = og.export_family_graph("A1", p=5, format="edge_list")
    check(len(edges.strip().splitlines()) == 20, "A1 has 20 edges")


def test_sweep():
    sweep = og.table2(["A1", "A2"])
    check(sweep["verified_rows"] == 4 and sweep["total_rows"] == 4, "abelian rows")
    for row in sweep["rows"]:
        for chk in row["checks"]:
            check("paper_ref" in chk, "report schema carries paper_ref")


def test_errors():
    try:
        og.build_family("A1", p=7)
    except og.Og4Error as e:
        check("(mod 4)" in str(e), "admissibility message")
    else:
        raise AssertionError("A1 with p=7 must be rejected")


def run_cli(*args):
    cli = os.environ.get("OG4_CLI", "og4")
    return subprocess.run([cli, *args], capture_output=True, text=True)


def test_cli():
    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "a1")
        r = run_cli("construct", "A1", "--p", "5", "--export", "graph6",
                    "--out", out)
        check(r.returncode == 0, f"construct failed: {r.stderr}")
        check(os.path.exists(os.path.join(out, "A1_p5.g6")), "graph6 written")
        meta = json.load(open(os.path.join(out, "A1_p5_meta.json")))
        check(meta["valency"] == 4, "metadata valency")

        check(run_cli("construct", "A1", "--p", "7").returncode == 2, "exit 2")

        r3 = run_cli("construct", "C4", "--p", "7", "--export", "edge_list",
                     "--out", os.path.join(tmp, "c4"))
        check(r3.returncode == 3, "exit 3 for certificate-tier export")
        check(os.path.exists(os.path.join(tmp, "c4", "C4_p7_bundle.json")),
              "bundle written")

        bad = os.path.join(tmp, "bad.json")
        with open(bad, "w") as f:
            f.write("{}")
        check(run_cli("verify", "--input", bad).returncode == 4, "exit 4")

        rep1 = os.path.join(tmp, "sweep1.json")
        rep2 = os.path.join(tmp, "sweep2.json")
        check(run_cli("table2", "--families", "A1", "--out", rep1).returncode == 0,
              "table2 exit 0")
        check(run_cli("table2", "--families", "A1", "--out", rep2).returncode == 0,
              "table2 exit 0 (repeat)")
        check(open(rep1, "rb").read() == open(rep2, "rb").read(),
              "byte-identical reports")


def main():
    tests = [test_permutations, test_groups, test_families, test_sweep,
             test_errors, test_cli]
    for t in tests:
        t()
        print(f"{t.__name__}: ok")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
