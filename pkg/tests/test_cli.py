import json
import subprocess
import sys
from pathlib import Path

import pytest

from drgen.cli import run
from drgen.derangements import DigraphCertificate
from drgen.graphs import parse_graph, read_graph, serialize
from drgen.infinite import cycle_graph, ladder_graph_finite
from drgen.thickening import Certificate

DATA = Path(__file__).parent / "data"
D2 = str(DATA / "d2.dgf")
CYCLE4 = str(DATA / "cycle4.dgf")


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def g3_file(tmp_path):
    p = tmp_path / "g3.dgf"
    p.write_text(serialize(ladder_graph_finite(3)))
    return str(p)


@pytest.fixture
def c4_file(tmp_path):
    p = tmp_path / "c4.dgf"
    p.write_text(serialize(cycle_graph(2)))
    return str(p)


def test_synthesize_d2(capsys):
    code, out, _ = call(capsys, "synthesize", "-k", 2, D2)
    assert code == 0
    assert out.splitlines() == ["(w1 w2)(w3 w5 w4)", "(w1 w3 w2)(w4 w5)"]


def test_check_d2_k1_prints_valid_certificate(capsys):
    code, out, _ = call(capsys, "check", "--json", "-k", 1, D2)
    assert code == 1
    js = json.loads(out)
    assert js["feasible"] is False
    c = js["certificate"]
    assert set(c) >= {"kind", "T", "lhs", "rhs", "k"}
    cert = DigraphCertificate(c["kind"].split("-")[1], tuple(c["T"]), c["lhs"], c["rhs"], c["k"], c.get("direction"))
    assert cert.recheck(read_graph(D2))


def test_check_text_mode(capsys):
    code, out, _ = call(capsys, "check", "-k", 2, D2)
    assert code == 0 and out.startswith("feasible")
    code, out, _ = call(capsys, "check", "-k", 1, D2)
    assert code == 1 and "certificate:" in out


def test_min_k(capsys):
    assert call(capsys, "min-k", CYCLE4)[:2] == (0, "k=1\n")
    code, out, _ = call(capsys, "min-k", "--json", D2)
    assert code == 0 and json.loads(out) == {"k": 2, "derangements": ["(w1 w2)(w3 w5 w4)", "(w1 w3 w2)(w4 w5)"]}


def test_min_k_not_generable(capsys, tmp_path):
    p = tmp_path / "sink.dgf"
    p.write_text("digraph\na a b\na b a\na c a\n")
    code, out, _ = call(capsys, "min-k", "--json", p)
    assert code == 1
    js = json.loads(out)
    assert js["generable"] is False and js["reason"]["kind"].startswith("condition-")


def test_min_k_bipartite_not_coverable(capsys, tmp_path):
    p = tmp_path / "p4.dgf"
    p.write_text("bipartite\nl a1\nl a2\nr b1\nr b2\ne a1 b1\ne a2 b1\ne a2 b2\n")
    code, out, _ = call(capsys, "min-k", "--json", p)
    assert code == 1
    assert json.loads(out)["reason"]["edge"] == ["a2", "b1"]


def test_cover(capsys, g3_file):
    code, out, _ = call(capsys, "cover", "--json", "-k", 3, g3_file)
    assert code == 0
    js = json.loads(out)
    assert js["k"] == 3 and len(js["factors"]) == 3
    code, out, _ = call(capsys, "cover", "--json", "-k", 2, g3_file)
    assert code == 1
    c = json.loads(out)["certificate"]
    assert set(c) == {"kind", "part", "T", "lhs", "rhs", "k"}
    cert = Certificate(c["kind"], c["part"], tuple(c["T"]), c["lhs"], c["rhs"], c["k"])
    assert cert.recheck(ladder_graph_finite(3))


def test_cover_needs_bipartite(capsys):
    code, _, err = call(capsys, "cover", "-k", 2, D2)
    assert code == 2 and "bipartite" in err


def test_double(capsys):
    code, out, _ = call(capsys, "double", CYCLE4)
    assert code == 0
    g = parse_graph(out)
    assert g.edge_count() == 4 and "a.1" in g.left


def test_undirected_flag(capsys, tmp_path):
    p = tmp_path / "path.dgf"
    p.write_text("digraph\na a b\na b c\n")
    code, out, _ = call(capsys, "min-k", "--undirected", p)
    assert code == 1
    p.write_text("digraph\na a b\na c d\n")
    assert call(capsys, "min-k", "--undirected", p)[:2] == (0, "k=1\n")


def test_dedup_flag(capsys, tmp_path):
    p = tmp_path / "dup.dgf"
    p.write_text("digraph\na a b\na b a\na a b\n")
    code, _, err = call(capsys, "min-k", p)
    assert code == 2 and "duplicate" in err
    assert call(capsys, "min-k", "--dedup", p)[0] == 0


def test_window_exit_codes(capsys, c4_file):
    code, out, _ = call(capsys, "window", "--json", "--family", "ladder-digraph", "-k", 3, "--radius", 2)
    assert code == 1 and json.loads(out)["verdict"] == "refuted"
    code, out, _ = call(capsys, "window", "--family", "Dk", "--k-param", 3, "-k", 3, "--radius", 3)
    assert code == 3 and out.startswith("unresolved")
    code, _, _ = call(capsys, "window", "--family", "subdivided-product", "--H", c4_file, "-k", 4, "--radius", 8)
    assert code == 1
    code, _, err = call(capsys, "window", "--family", "subdivided-product", "-k", 2, "--radius", 1)
    assert code == 2


def test_scan(capsys):
    code, out, _ = call(capsys, "scan", "--json", "--family", "ladder-graph", "--k-max", 3)
    assert code == 0
    rows = json.loads(out)
    assert [r["k"] for r in rows] == [1, 2, 3]
    assert all(r["radius"] is not None for r in rows)


def test_oracle_subcommands(capsys):
    assert call(capsys, "oracle", "min-k", D2)[:2] == (0, "k=2\n")
    assert call(capsys, "oracle", "conditions", "-k", 2, D2)[0] == 0
    assert call(capsys, "oracle", "conditions", "-k", 1, D2)[0] == 1
    assert call(capsys, "oracle", "one-extendable", D2)[0] == 0
    code, out, _ = call(capsys, "oracle", "matchings", "--json", CYCLE4)
    assert code == 0 and len(json.loads(out)) == 1
    assert call(capsys, "oracle", "conditions", D2)[0] == 2


@pytest.mark.parametrize(
    "argv",
    [[], ["check", D2], ["check", "-k", "0", D2], ["check", "-k", "x", D2], ["check", "-k", "1", "missing.dgf"], ["frobnicate"]],
)
def test_usage_errors(capsys, argv):
    assert run(argv) == 2


def test_parse_error_exit(capsys, tmp_path):
    p = tmp_path / "bad.dgf"
    p.write_text("digraph\na x x\n")
    code, _, err = call(capsys, "check", "-k", 1, p)
    assert code == 2 and "loop" in err


def test_byte_stable(capsys, g3_file):
    for argv in (["synthesize", "--json", "-k", "3", D2], ["cover", "--json", "-k", "3", g3_file], ["double", D2]):
        first = call(capsys, *argv)
        assert all(call(capsys, *argv) == first for _ in range(3))


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "drgen.cli", "min-k", CYCLE4], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "k=1\n"
