import json

from fishburn.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_modasc_avoid(capsys):
    code, out, _ = run(capsys, "enumerate", "modasc", "5", "--avoid", "212")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 52
    record = json.loads(lines[0])
    assert set(record) == {"word", "stats"}
    assert set(record["stats"]) == {"max", "ascents", "ones"}


def test_enumerate_rgf(capsys):
    code, out, _ = run(capsys, "enumerate", "rgf", "3")
    assert code == 0
    assert [json.loads(l)["word"] for l in out.strip().splitlines()] == \
        ["1,1,1", "1,1,2", "1,2,1", "1,2,2", "1,2,3"]


def test_enumerate_csv_has_header(capsys):
    code, out, _ = run(capsys, "enumerate", "rgf", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["word,max,ascents,ones", "1 1,1,0,2", "1 2,2,1,1"]


def test_enumerate_empty_family(capsys):
    code, out, _ = run(capsys, "enumerate", "modasc", "0")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1
    assert json.loads(lines[0]) == {"word": "", "stats": {"max": 0, "ascents": 0, "ones": 0}}


def test_enumerate_is_deterministic(capsys):
    _, first, _ = run(capsys, "enumerate", "modasc", "4")
    _, second, _ = run(capsys, "enumerate", "modasc", "4")
    assert first == second


def test_enumerate_bad_pattern_is_usage_error(capsys):
    code, _, err = run(capsys, "enumerate", "modasc", "4", "--avoid", "@nope")
    assert code == 2
    assert "@nope" in err


def test_enumerate_budget_exit(capsys):
    code, out, err = run(capsys, "enumerate", "modasc", "12")
    assert code == 3
    assert out == ""
    assert "budget" in err.lower()


def test_enumerate_budget_override_warns(capsys):
    code, out, err = run(capsys, "enumerate", "wi", "12", "--budget", "12")
    assert code == 0
    assert len(out.strip().splitlines()) == 2 ** 11
    assert "warning" in err


def test_count_triangle(capsys):
    code, out, _ = run(capsys, "count", "--family", "modasc", "--n-max", "4",
                       "--by", "max")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,key,count"
    assert "4,2,6" in lines and "4,3,7" in lines


def test_count_bfile_format(capsys):
    code, out, _ = run(capsys, "count", "--family", "rgf", "--n", "3",
                       "--by", "prefix", "--format", "bfile")
    assert code == 0
    assert out.strip().splitlines() == ["1 2", "2 2", "3 1"]


def test_count_needs_size(capsys):
    code, _, err = run(capsys, "count", "--family", "rgf")
    assert code == 2


def test_map_golden_examples(capsys):
    cases = [
        (["map", "psi", "141233551"], "1,2,3,2,2,4,1,4,5"),
        (["map", "psi-inverse", "123224145"], "1,4,1,2,3,3,5,5,1"),
        (["map", "phi212", "123224135"], "1,4,1,2,3,3,5,5,1"),
        (["map", "gamma", "2132"], "2,4,1,3"),
        (["map", "gamma", "14123351"], "8,3,1,4,6,5,2,7"),
    ]
    for argv, expected in cases:
        code, out, _ = run(capsys, *argv)
        assert code == 0
        assert out.strip() == expected


def test_map_with_op_flag(capsys):
    code, out, _ = run(capsys, "map", "--op", "gamma", "2132")
    assert code == 0
    assert out.strip() == "2,4,1,3"


def test_map_insert_and_extract(capsys):
    code, out, _ = run(capsys, "map", "insert2213", "1112", "--k", "2", "--i", "1")
    assert code == 0
    assert out.strip() == "1,2,2,3,1"
    code, out, _ = run(capsys, "map", "extract2213", "12613224532")
    assert code == 0
    assert json.loads(out) == {"i": 1, "j": 5, "k": 2, "x": "1,5,1,2,1,1,3,4,2,1"}


def test_map_transpose(capsys):
    code, out, _ = run(capsys, "map", "transpose", "1,2,3,4/2,1,3,2")
    assert code == 0
    assert out.strip() == "1,2,2,3/2,4,1,3"


def test_map_matrix(capsys):
    code, out, _ = run(capsys, "map", "to-matrix", "122/312")
    assert code == 0
    assert out.strip() == "0 0 1\n1 1 0"
    code, out, _ = run(capsys, "map", "from-matrix", "0 0 1;1 1 0")
    assert code == 0
    assert out.strip() == "1,2,2/3,2,1"


def test_map_roundtrip_flag(capsys):
    code, _, err = run(capsys, "map", "psi", "141233551", "--check-roundtrip")
    assert code == 0
    assert "round-trip ok" in err


def test_map_domain_error_exit_4(capsys):
    code, _, err = run(capsys, "map", "psi", "1212")
    assert code == 4
    assert "modified ascent sequence" in err


def test_map_bad_token_exit_2(capsys):
    code, _, err = run(capsys, "map", "psi", "hello")
    assert code == 2


def test_map_unknown_op(capsys):
    code, _, err = run(capsys, "map", "frobnicate", "123")
    assert code == 2


def test_verify_cli(capsys, tmp_path):
    report_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "core", "--n-max", "4",
                       "--report", str(report_path))
    assert code == 0
    assert "[PASS]" in out
    assert "suite core: PASSED" in out
    payload = json.loads(report_path.read_text())
    assert payload["passed"] is True


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "bogus")
    assert code == 2


def test_oeis_check_cli(capsys):
    code, out, _ = run(capsys, "oeis-check", "A000110", "--n-max", "8")
    assert code == 0
    assert "match length 9" in out


def test_oeis_check_unknown_id(capsys):
    code, _, err = run(capsys, "oeis-check", "A000042")
    assert code == 2


def test_oeis_missing_fixture_exit_5(capsys, monkeypatch, tmp_path):
    import fishburn.oeis as oeis_mod

    monkeypatch.setitem(oeis_mod.SEQUENCES, "A999998", ("fake", lambda n, b: [1], 3))
    monkeypatch.chdir(tmp_path)
    code, _, err = run(capsys, "oeis-check", "A999998")
    assert code == 5
    assert "fixture" in err


def test_oeis_fetch_failure_exit_6(capsys, monkeypatch, tmp_path):
    import fishburn.oeis as oeis_mod

    monkeypatch.setitem(oeis_mod.SEQUENCES, "A999998", ("fake", lambda n, b: [1], 3))
    monkeypatch.setenv("OEIS_BASE_URL", "http://127.0.0.1:9/")
    monkeypatch.chdir(tmp_path)
    code, _, err = run(capsys, "oeis-check", "A999998", "--fetch")
    assert code == 6
    assert "retry" in err


def test_map_fishburn_basis(capsys):
    code, out, _ = run(capsys, "map", "fishburn-basis", "2413")
    assert code == 0
    assert json.loads(out) == ["2,1,3,2", "3,1,4,2"]


def test_usage_error_exit_code(capsys):
    assert main(["enumerate"]) == 2
    assert main([]) == 2
