import json

from powercw.cli import main
from powercw.formats import read_graph
from powercw.generators import path
from powercw.iso import is_isomorphic


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_gen_power_and_cw(tmp_path, capsys):
    p9 = tmp_path / "p9.el"
    sq = tmp_path / "p9sq.g6"
    assert main(["gen", "path", "--n", "9", "--out", str(p9)]) == 0
    assert read_graph(str(p9)) == path(9)
    assert main(["power", str(p9), "--k", "2", "--out", str(sq)]) == 0
    capsys.readouterr()
    assert main(["cw", str(sq)]) == 0
    out = _json(capsys)
    assert out["clique_width"] == 4 and out["labels_used"] <= 4
    assert main(["cw", str(sq), "--decide", "3"]) == 0
    assert _json(capsys)["possible"] is False


def test_cap_override_warns(tmp_path, capsys):
    g = tmp_path / "p4.el"
    main(["gen", "path", "--n", "4", "--out", str(g)])
    assert main(["nlcw", str(g), "--cap", "20"]) == 0
    captured = capsys.readouterr()
    assert "warning" in captured.err and json.loads(captured.out)["nlc_width"] == 2


def test_queries(tmp_path, capsys):
    claw, p5, k3 = tmp_path / "claw.g6", tmp_path / "p5.el", tmp_path / "k3.el"
    main(["gen", "star", "--m", "3", "--out", str(claw)])
    main(["gen", "path", "--n", "5", "--out", str(p5)])
    main(["gen", "complete", "--n", "3", "--out", str(k3)])
    capsys.readouterr()
    main(["contains", str(p5), str(claw)])
    assert _json(capsys)["contains"] is False
    main(["iso", str(claw), str(claw)])
    assert _json(capsys)["isomorphic"] is True
    main(["free", str(p5), "--forbidden", f"{claw},{k3}"])
    assert _json(capsys)["free"] is True
    main(["prime", str(p5)])
    assert _json(capsys)["prime"] is True
    main(["twins", str(claw)])
    assert len(_json(capsys)["twin_classes"]) == 2
    main(["cograph", str(claw)])
    assert _json(capsys)["cograph"] is True
    main(["ingkd", str(p5), "--k", "1", "--d", "1"])
    assert _json(capsys)["member"] is True
    main(["kappa", str(p5)])
    assert _json(capsys)["kappa"] == "inf"
    main(["lambda", str(claw)])
    assert _json(capsys)["lambda"] == 0


def test_quotient_writes_graph(tmp_path, capsys):
    g = tmp_path / "g.el"
    g.write_text("p 5\ne 0 1\ne 1 2\ne 2 3\ne 4 1\n")
    q = tmp_path / "q.el"
    assert main(["quotient", str(g), "--out", str(q)]) == 0
    assert sorted(map(sorted, _json(capsys)["blocks"])) == [[0, 4], [1], [2], [3]]
    assert is_isomorphic(read_graph(str(q)), path(4))


def test_classify_commands(tmp_path, capsys):
    claw, bull = tmp_path / "claw.g6", tmp_path / "bull.g6"
    main(["gen", "spider", "--i", "1", "--j", "1", "--k", "1", "--out", str(claw)])
    main(["gen", "t_spider", "--i", "1", "--j", "2", "--k", "2", "--out", str(bull)])
    capsys.readouterr()
    main(["classify", "mono", str(claw)])
    assert _json(capsys)["verdict"] == "PowerUnbounded"
    main(["classify", "bi", str(claw), str(bull)])
    assert _json(capsys)["verdict"] == "PowerBounded"
    main(["classify", "set", str(claw), str(bull)])
    assert _json(capsys)["reason"] == "bounded-pair"


def test_gen_with_graph_parameter(tmp_path, capsys):
    h = tmp_path / "k2.el"
    h.write_text("p 2\ne 0 1\n")
    assert main(["gen", "mH", "--m", "3", "--graph", str(h)]) == 0
    assert capsys.readouterr().out.startswith("p 6")
    assert main(["gen", "split_gadget", "--graph", str(h), "--k", "3", "--format", "g6"]) == 0
    assert capsys.readouterr().out.strip()


def test_errors_exit_with_code_two(tmp_path, capsys):
    bad = tmp_path / "bad.el"
    bad.write_text("p 2\ne 0 5\n")
    assert main(["prime", str(bad)]) == 2
    assert "error" in capsys.readouterr().err
    assert main(["gen", "path"]) == 2
    assert main(["gen", "nosuch", "--n", "3"]) == 2
    assert main(["prime", str(tmp_path / "missing.el")]) == 2


def test_verify_single_suite(tmp_path, capsys):
    assert main(["verify", "--list-suites"]) == 0
    assert "split_gadget" in capsys.readouterr().out.split()
    out = tmp_path / "core.csv"
    assert main(["verify", "core", "--seed", "1", "--out", str(out)]) == 0
    assert out.read_text().startswith("suite,case_id,params,observed,expected,relation,pass\n")
    assert "PASS core" in capsys.readouterr().err
    assert main(["verify", "split_gadget"]) == 1
