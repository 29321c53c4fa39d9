import json

import pytest

from besforge import group_system, grow_girth_graph, random_linear, to_triple_system
from besforge import io as textio
from besforge.cli import main
from besforge.errors import FormatError


def test_system_round_trip_tls():
    lts = random_linear(6, 7, 8, 20, seed=3)
    assert textio.loads_system(textio.dumps_system(lts)) == lts


def test_system_round_trip_ts():
    ts = to_triple_system(group_system(3))
    assert textio.loads_system(textio.dumps_system(ts)) == ts


def test_comments_and_blank_lines_ignored():
    text = "# hello\n\np tls 1 1 1 1\n# mid\ne 0 0 0\n"
    assert textio.loads_system(text) == group_system(1)


def test_format_errors():
    with pytest.raises(FormatError):
        textio.loads_system("e 0 1 2\n")
    with pytest.raises(FormatError):
        textio.loads_system("p tls 1 1 1 2\ne 0 0 0\n")
    with pytest.raises(FormatError):
        textio.loads_system("p ts x 1\n")


def test_graph_cert_round_trip():
    g, cert = grow_girth_graph(40, 8, 5, seed=2)
    text = textio.dumps_graph(g, cert)
    g2, cert2 = textio.loads_graph(text)
    assert g2.edges == g.edges
    assert cert2 == cert


def test_cli_gen_and_oracle(tmp_path, capsys):
    path = tmp_path / "g5.tls"
    assert main(["gen", "group", "--m", "5", "--out", str(path)]) == 0
    assert main(["oracle", "--input", str(path), "--e", "1"]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_cli_solve_report(tmp_path, capsys):
    g3 = tmp_path / "g3.tls"
    report = tmp_path / "r.json"
    main(["gen", "group", "--m", "3", "--out", str(g3)])
    code = main([
        "solve", "--input", str(g3), "--e", "7", "--t", "4",
        "--tau-max", "4", "--base-e", "4", "--report", str(report),
    ])
    assert code == 0
    payload = json.loads(report.read_text())
    assert payload["e"] == 7 and payload["span"] == 9


def test_cli_girth_grow_isolated(capsys):
    assert main(["girth", "grow", "--k", "10", "--t", "10", "--g", "5"]) == 0
    out = capsys.readouterr().out
    assert "10 vertices, 0 edges" in out


def test_cli_girth_grow_check_round_trip(tmp_path, capsys):
    path = tmp_path / "g.graph"
    assert main(["girth", "grow", "--k", "60", "--t", "16", "--g", "5",
                 "--seed", "4", "--out", str(path)]) == 0
    assert main(["girth", "check", "--input", str(path), "--g", "5"]) == 0
    assert "certificate ok" in capsys.readouterr().out


def test_cli_seed_determinism(tmp_path):
    g6 = tmp_path / "g6.tls"
    main(["gen", "group", "--m", "6", "--out", str(g6)])
    r1 = tmp_path / "r1.json"
    r2 = tmp_path / "r2.json"
    for r in (r1, r2):
        main(["solve", "--input", str(g6), "--e", "14", "--seed", "3",
              "--report", str(r), "--no-timestamp"])
    assert r1.read_bytes() == r2.read_bytes()


def test_cli_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.tls"
    bad.write_text("p tls 1 1\n")
    assert main(["aux", "--input", str(bad)]) == 2
    g2 = tmp_path / "g2.tls"
    main(["gen", "group", "--m", "2", "--out", str(g2)])
    # asking for more edges than exist is a domain failure
    assert main(["solve", "--input", str(g2), "--e", "9"]) == 1
    assert main(["oracle", "--input", str(tmp_path / "nope.tls"), "--e", "1"]) == 2


def test_cli_verify_and_unpack(tmp_path, capsys):
    g3 = tmp_path / "g3.tls"
    main(["gen", "group", "--m", "3", "--out", str(g3)])
    cfg = tmp_path / "cfg.txt"
    cfg.write_text("e 0 0 0\ne 0 1 1\n")
    assert main(["verify", "--input", str(g3), "--config", str(cfg),
                 "--v", "5", "--e", "2"]) == 0
    assert capsys.readouterr().out.strip() == "true"
    trace = tmp_path / "trace.json"
    assert main(["unpack", "--input", str(g3), "--k", "4", "--t", "4",
                 "--strategy", "exhaustive", "--trace", str(trace)]) == 0
    steps = json.loads(trace.read_text())
    assert len(steps) == 4
    assert {"i", "vertex", "side", "d", "class", "dE", "dV",
            "apexes", "new_edges", "new_vertices"} == set(steps[0])


def test_cli_sweep(tmp_path):
    g4 = tmp_path / "g4.tls"
    main(["gen", "group", "--m", "4", "--out", str(g4)])
    csv = tmp_path / "sweep.csv"
    assert main(["sweep", "--input", str(g4), "--e-min", "1", "--e-max", "5",
                 "--csv", str(csv)]) == 0
    lines = csv.read_text().strip().splitlines()
    assert lines[0] == "e,span,d_achieved"
    assert len(lines) == 6


def test_cli_reduce(tmp_path, capsys):
    ts_path = tmp_path / "flat.ts"
    ts = to_triple_system(group_system(3))
    ts_path.write_text(textio.dumps_system(ts))
    out = tmp_path / "red.tls"
    assert main(["reduce", "--input", str(ts_path), "--e", "4",
                 "--out", str(out)]) == 0
    reduced = textio.loads_system(out.read_text())
    assert reduced.m == 9
