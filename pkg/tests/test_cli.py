import json

from ochrom.cli import main

H_INLINE = "n=4;a 0 1;a 2 3;e 0 2;e 1 3"
H_POLY = "x^4 - 4x^3 + 5x^2 - 2x"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poly_inline_both_methods(capsys):
    code, out, _ = run(capsys, "poly", "--inline", H_INLINE, "--method", "both")
    assert code == 0
    assert f"reduction:  {H_POLY}" in out
    assert f"bruteforce: {H_POLY}" in out


def test_poly_json_output(capsys):
    code, out, _ = run(capsys, "poly", "--gen", "dn:6", "--out", "json")
    assert code == 0
    data = json.loads(out)
    assert data["reduction"][-1] == "1"          # monic
    assert data["stats"]["node_count"] >= 1


def test_poly_file_and_stdin(tmp_path, capsys, monkeypatch):
    path = tmp_path / "g.txt"
    path.write_text("n=2\na 0 1\n")
    code, out, _ = run(capsys, "poly", str(path))
    assert code == 0 and "x^2 - x" in out
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("n=2\na 0 1\n"))
    code, out, _ = run(capsys, "poly", "-")
    assert code == 0 and "x^2 - x" in out


def test_poly_guard_and_source_errors(capsys):
    code, _, err = run(capsys, "poly", "--gen", "tk2:10",
                       "--method", "bruteforce")
    assert code == 2 and "guard" in err
    code, _, err = run(capsys, "poly")
    assert code == 2
    code, _, err = run(capsys, "poly", "--inline", "n=2", "--gen", "dn:4")
    assert code == 2
    code, _, err = run(capsys, "poly", "--inline", "nonsense")
    assert code == 2 and "parse error" in err
    code, _, err = run(capsys, "poly", "/no/such/file")
    assert code == 2
    code, _, err = run(capsys, "poly", "--gen", "dn:")
    assert code == 2
    code, _, err = run(capsys, "poly", "--gen", "petersen:10")
    assert code == 2 and "unknown family" in err


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "--gen", "tk2:3")
    assert code == 0
    assert "c2 first-order 0, closure 0, actual 0" in out
    code, out, _ = run(capsys, "analyze", "--inline", "n=3;a 0 1;a 1 2",
                       "--out", "json")
    assert code == 0
    data = json.loads(out)
    assert data["dipath_pairs"] == [[0, 2]]
    assert data["actual_c2"] == data["closure_c2"]


def test_invar(capsys):
    code, out, _ = run(capsys, "invar", "--gen", "tk2:2", "--out", "json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "no"
    assert data["certificate_kind"] == "violating_2k2"
    code, _, err = run(capsys, "invar", "--inline", "n=2;e 0 1")
    assert code == 2 and "oriented" in err


def test_orient(capsys):
    c4 = "n=4;e 0 1;e 1 2;e 2 3;e 0 3"
    code, out, _ = run(capsys, "orient", "--inline", c4)
    assert code == 0 and "yes" in out
    code, _, err = run(capsys, "orient", "--gen", "tk2:2")
    assert code == 2 and "simple" in err


def test_equiv(capsys):
    code, out, _ = run(capsys, "equiv", "--gen", "star:2,2")
    assert code == 0 and "equivalent simple graph:" in out
    code, out, _ = run(capsys, "equiv", "--gen", "tk2:2")
    assert code == 0 and "unknown" in out
    code, out, _ = run(capsys, "equiv", "--gen", "tk2:2", "--search")
    assert code == 0 and "found none" in out


def test_roots_report(capsys):
    code, out, _ = run(capsys, "roots", "--gen", "dn:5", "--out", "json")
    assert code == 0
    data = json.loads(out)
    hits = [r for r in data["real_roots"] if 0.38 < r["approx"] < 0.382]
    assert len(hits) == 1


def test_roots_threshold(capsys):
    code, out, _ = run(capsys, "roots", "--gen", "dn:10", "--threshold", "-2")
    assert code == 0 and "certified root below -2: yes" in out
    code, _, err = run(capsys, "roots", "--gen", "tk2:2", "--threshold", "-2")
    assert code == 2
    code, _, err = run(capsys, "roots", "--gen", "dn:9", "--threshold", "-2")
    assert code == 2 and "even" in err


def test_scan_window(capsys):
    code, out, _ = run(capsys, "scan-window", "--lo", "1", "--hi", "32/27",
                       "--max-n", "3")
    assert code == 0 and "oriented graphs" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "dn")
    assert code == 0 and "dn: 8/8 pass" in out
    code, _, err = run(capsys, "verify", "nonsense")
    assert code == 2 and "unknown suite" in err


def test_usage_exit_code(capsys):
    assert main([]) == 2
    assert main(["no-such-command"]) == 2
    assert main(["--help"]) == 0
