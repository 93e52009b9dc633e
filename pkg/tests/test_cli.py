import json

import pytest

from berge_turan import formats
from berge_turan.cli import main
from berge_turan.constructions import construct_H, construct_W


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_then_check(tmp_path, capsys):
    h = tmp_path / "h.hg"
    assert run(capsys, "construct", "h-path", "--n", "20", "--k", "8", "--r", "3", "-o", str(h))[0] == 0
    assert formats.read(h) == construct_H(20, 8, 3)
    code, out, _ = run(capsys, "check", "berge-path-free", "--k", "8", str(h))
    assert code == 0 and json.loads(out)["holds"] is True
    code, out, _ = run(capsys, "check", "berge-path-free", "--k", "7", str(h))
    assert code == 1 and json.loads(out)["certificate"]["pattern"] == "path"


def test_formula_prints_value(capsys):
    code, out, _ = run(capsys, "formula", "conn-berge-path", "--n", "20", "--k", "8", "--r", "3")
    assert code == 0 and out == "52\n"
    code, out, _ = run(capsys, "formula", "2conn-berge-cycle", "--n", "20", "--k", "8", "--r", "3", "--format", "json")
    assert json.loads(out)["value"] == 55


def test_two_connected_reports_cut_hyperedge(tmp_path, capsys):
    p = tmp_path / "h127.hg"
    formats.write(construct_H(12, 7, 3), p)
    code, out, _ = run(capsys, "check", "two-connected", str(p))
    data = json.loads(out)
    assert code == 1 and data["holds"] is False and data["cut_hyperedges"]


def test_reduce_and_certificate(tmp_path, capsys):
    h = tmp_path / "h.hg"
    formats.write(construct_H(10, 8, 3), h)
    out = tmp_path / "g.rb"
    cert = tmp_path / "cert.json"
    code, _, err = run(capsys, "reduce", str(h), "-o", str(out), "--certificate", str(cert))
    assert code == 0 and "certificate_ok" in err
    assert formats.read(out).n == 10
    code, _, _ = run(capsys, "check", "certificate", str(h), "--certificate", str(cert))
    assert code == 0
    other = tmp_path / "other.hg"
    formats.write(construct_H(10, 6, 3), other)
    assert run(capsys, "check", "certificate", str(other), "--certificate", str(cert))[0] == 1


def test_kelmans_apply_and_recolor(tmp_path, capsys):
    g = tmp_path / "c5.g"
    g.write_text("5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n")
    out = tmp_path / "k.g"
    assert run(capsys, "kelmans", "apply", str(g), "--u", "3", "--v", "0", "-o", str(out))[0] == 0
    assert set(formats.read(out).edges) == {(0, 1), (1, 2), (0, 2), (3, 4), (0, 4)}
    assert run(capsys, "kelmans", "apply", str(g), "--u", "1", "--v", "1")[0] == 2

    w = construct_W(20, 9, 4)
    rb = tmp_path / "w.rb"
    rb.write_text("\n".join([f"{w.n} {w.m}"] + [f"{u} {v} {'B' if i % 2 else 'R'}" for i, (u, v) in enumerate(w.edges)]) + "\n")
    log = tmp_path / "log.csv"
    code, _, _ = run(capsys, "kelmans", "recolor", str(rb), "--r", "3", "--k", "10", "--log", str(log), "-o", str(tmp_path / "o.rb"))
    assert code == 0
    assert log.read_text().startswith("step_id,description,g_r_before,g_r_after\n")
    assert set(formats.read(tmp_path / "o.rb").colors) == {"R"}


def test_gr_and_pstar(tmp_path, capsys):
    p = tmp_path / "k4.rb"
    p.write_text("4 6\n0 1 B\n0 2 B\n0 3 B\n1 2 B\n1 3 B\n2 3 B\n")
    code, out, _ = run(capsys, "gr", str(p), "--r", "3", "--pstar")
    data = json.loads(out)
    assert code == 0 and data["g_r"] == 6 and data["p_star"] == 6 and data["p_star_exact"]


def test_classify_components(tmp_path, capsys):
    p = tmp_path / "k4.g"
    p.write_text("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    code, out, _ = run(capsys, "classify", "components", str(p), "--k", "8")
    assert code == 0 and json.loads(out)["classes"][0]["label"] == "bad"
    code, out, _ = run(capsys, "classify", "leaf-blocks", str(p), "--k", "8", "--format", "csv")
    assert out.startswith("key,value\n")


def test_search_verbs(capsys):
    code, out, _ = run(capsys, "search", "hypergraph", "--n", "5", "--r", "3", "--k", "5")
    assert code == 0 and json.loads(out)["value"] == 4
    code, out, _ = run(capsys, "search", "hypergraph", "--n", "7", "--r", "3", "--k", "5", "--node-cap", "5")
    assert code == 3 and "budget_exceeded" in json.loads(out)["flags"]
    code, out, _ = run(capsys, "search", "graph", "--kind", "eg-path", "--n", "6", "--ks", "3,4")
    assert code == 0 and json.loads(out)["reports"]


def test_format_errors_are_line_numbered(tmp_path, capsys):
    p = tmp_path / "bad.hg"
    p.write_text("4 3 1\n0 1 9\n")
    code, _, err = run(capsys, "check", "connected", str(p))
    assert code == 2 and "bad.hg:2" in err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["construct", "w", "--n", "10"],
        ["frobnicate"],
        ["check", "berge-path-free", "missing-file.hg", "--k", "3"],
        ["verify", "12"],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_verify_single_criterion(tmp_path, capsys):
    seed = tmp_path / "seed"
    seed.write_text("7\n")
    code, out, _ = run(capsys, "verify", "1", "--seed-file", str(seed), "--format", "text")
    assert code == 0 and out.startswith("1. construction/formula agreement: PASS")
    bad = tmp_path / "bad-seed"
    bad.write_text("not json")
    assert run(capsys, "verify", "1", "--seed-file", str(bad))[0] == 2
