import json
import subprocess
import sys

import pytest

from halfabelian import paperdata
from halfabelian.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_c12_diagram(capsys):
    code, out, _ = run(capsys, "orbit-info", "--family", "C", "--rank", "12",
                       "--partition", "8,6,3,3,2,1,1")
    assert code == 0
    assert "diagram:     2 0 2 0 1 0 1 0 0 1 0 0" in out


def test_g2(capsys):
    code, out, _ = run(capsys, "orbit-info", "--family", "G2", "--diagram", "0 1", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["dim_g1"] == 4 and rec["mis"]["size"] == 2


def test_e6_with_enumeration(capsys, table_rows):
    r = [x for x in table_rows if x.table_id == "E6s" and x.orbit_name == "A2+A1"][0]
    code, out, _ = run(capsys, "orbit-info", "--family", "E6", "--diagram", str(r.diagram),
                       "--enumerate", "7", "--json")
    rec = json.loads(out)
    assert rec["dim_g1"] == 14 and rec["mis"]["size"] == 6 and rec["mis"]["proven_optimal"]
    assert rec["enumerate"]["count"] == 0


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "orbit-info", "--family", "D", "--partition", "5,3,2,2", "--json")
    rec = json.loads(out)
    assert rec["type"] == "D6" and rec["diagram"] == "2 0 1 0 1 1"
    # feeding the emitted diagram back in reproduces the record exactly
    code2, out2, _ = run(capsys, "orbit-info", "--family", rec["type"], "--diagram", rec["diagram"], "--json")
    assert json.loads(out2) == rec
    # the witness is a set of pairwise commuting degree-1 roots
    w = rec["mis"]["witness"]
    assert len(w) == rec["mis"]["size"] == 4
    assert all(sum(c * x for c, x in zip(root, (2, 0, 1, 0, 1, 1))) == 1 for root in w)


def test_invalid_inputs(capsys):
    assert run(capsys, "orbit-info", "--family", "C", "--partition", "3,2,2,1")[0] == 2
    assert run(capsys, "orbit-info", "--family", "E6", "--partition", "3,2")[0] == 2
    assert run(capsys, "orbit-info", "--family", "G2", "--diagram", "0 3")[0] == 2
    assert run(capsys, "orbit-info", "--family", "C3", "--diagram", "1 1 1")[0] == 2
    assert run(capsys, "orbit-info", "--family", "G2")[0] == 2
    assert run(capsys, "bogus")[0] == 2


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "--family", "D", "--partition", "5,3,2,2")
    assert code == 0
    assert "subtype:    D5" in out and "subdiagram: 0 1 0 1 1" in out
    assert "partition:  3^2,2^2" in out and "crosscheck: ok" in out
    code, out, _ = run(capsys, "reduce", "--family", "F4", "--diagram", "1 0 1 2", "--json")
    rec = json.loads(out)
    assert rec["subtype"] == "B3" and rec["reduced_partition"] == "3,2^2"
    assert run(capsys, "reduce", "--family", "D5", "--diagram", "0 1 0 1 1")[0] == 0
    assert run(capsys, "reduce", "--family", "D5", "--diagram", "2 0 2 0 0")[0] == 2


def test_tables_print(capsys):
    code, out, _ = run(capsys, "tables", "--print", "G2s")
    assert code == 0 and len(out.splitlines()) == 2


def test_tables_verify_subset(capsys):
    code, out, _ = run(capsys, "tables", "--verify", "G2s", "F4s", "F4o")
    assert code == 0 and "10/10 rows verified" in out
    assert run(capsys, "tables", "--verify", "X1s")[0] == 2


def test_tables_fault_injection(capsys, tmp_path, table_rows):
    bad = [r for r in table_rows if r.table_id == "G2s"]
    text = paperdata.dumps(bad).replace("G2s|A1|G 2|0 1|4|", "G2s|A1|G 2|0 1|6|")
    path = tmp_path / "bad.txt"
    path.write_text(text)
    code, out, _ = run(capsys, "tables", "--verify", "--data", str(path))
    assert code == 1
    (line,) = [l for l in out.splitlines() if "MISMATCH" in l]
    assert "A1" in line and "dim_g1" in line
    assert run(capsys, "tables", "--verify", "--data", str(tmp_path / "missing.txt"))[0] == 2


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--family", "C", "--max-rank", "4")
    assert code == 0 and out.strip().endswith("orbits agree")
    code, out, _ = run(capsys, "scan", "--family", "D", "--max-rank", "3", "--json")
    recs = [json.loads(l) for l in out.splitlines()]
    (r,) = [x for x in recs if x["partition"] == "2^2,1^2"]
    assert r["mis"] == 2 and r["dim_g1"] == 4 and r["agree"]
    code, out, _ = run(capsys, "scan", "--family", "A", "--max-rank", "6", "--json")
    assert all(json.loads(l)["half_abelian"] for l in out.splitlines())
    assert run(capsys, "scan", "--family", "A", "--max-rank", "11")[0] == 2
    assert run(capsys, "scan", "--family", "E", "--max-rank", "6")[0] == 2


def test_graph_dump(capsys, tmp_path):
    code, out, _ = run(capsys, "graph-dump", "--family", "G2", "--diagram", "1 0")
    assert code == 0 and out == "0 | 1 0 | 1\n1 | 1 1 | 0\n"
    p = tmp_path / "g.txt"
    assert run(capsys, "graph-dump", "--family", "E6", "--diagram", "0 1 0 0 0 0", "-o", str(p))[0] == 0
    assert len(p.read_text().splitlines()) == 20


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "halfabelian", "tables", "--print", "F4o"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and len(proc.stdout.splitlines()) == 2
