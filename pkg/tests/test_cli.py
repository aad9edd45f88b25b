import json
import pathlib

from nchopf import cli

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def golden(name):
    return (GOLDEN / name).read_text()


def test_mul_matches_golden(capsys):
    code, out, _ = run(["mul", "w", "{1|2,3}", "{1|2}"], capsys)
    assert code == 0
    assert out == golden("w_product.txt")
    code, out, _ = run(["mul", "Q", "(1,3|2)", "(1|2)"], capsys)
    assert code == 0
    assert out == golden("Q_product.txt")
    code, out, _ = run(["mul", "W", "(1,2)", "(2|1)"], capsys)
    assert code == 0
    assert out == golden("W_product.txt")


def test_comul_matches_golden(capsys):
    code, out, _ = run(["comul", "w", "{1,3|2,5,6|4}"], capsys)
    assert code == 0
    assert out == golden("w_coproduct.txt")


def test_repeated_invocations_byte_identical(capsys):
    first = run(["mul", "m", "{1,2}", "{1|2}"], capsys)
    second = run(["mul", "m", "{1,2}", "{1|2}"], capsys)
    assert first == second
    d1 = run(["poset", "star-compositions", "3", "--dot"], capsys)
    d2 = run(["poset", "star-compositions", "3", "--dot"], capsys)
    assert d1 == d2


def test_dot_export_matches_golden(capsys):
    for n in (3, 4):
        code, out, _ = run(["poset", "star-partitions", str(n), "--dot"],
                           capsys)
        assert code == 0
        assert out == golden(f"star_partitions_{n}.dot")


def test_json_output_round_trips(capsys):
    code, out, _ = run(["mul", "m", "{1}", "{1}", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == "m"
    assert data["terms"] == {"{1,2}": 1, "{1|2}": 1}


def test_convert_and_pair(capsys):
    elt = json.dumps({"basis": "W", "terms": {"(1|2)": 1, "(2|1)": 1}})
    code, out, _ = run(["convert", "V", elt], capsys)
    assert code == 0
    assert out.strip() == "V_(1|2)"
    x = json.dumps({"basis": "m", "terms": {"{1,2}": 1}})
    y = json.dumps({"basis": "w", "terms": {"{1,2}": 2, "{1|2}": 5}})
    code, out, _ = run(["pair", x, y], capsys)
    assert code == 0
    assert out.strip() == "2"


def test_antipode(capsys):
    code, out, _ = run(["antipode", "m", "{1,2}"], capsys)
    assert code == 0
    assert out.strip() == "-m_{1,2}"


def test_count_tables_tsv(capsys):
    code, out, _ = run(["count", "bell", "6"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n\tbell"
    assert lines[-1] == "6\t203"


def test_count_identity_json(capsys):
    code, out, _ = run(["count", "identity-ii", "5"], capsys)
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_verify_suite_exit_codes(capsys):
    code, out, err = run(["verify", "zeta", "3"], capsys)
    assert code == 0
    reports = [json.loads(line) for line in out.strip().splitlines()]
    assert all(r["status"] == "pass" for r in reports)
    assert "suite zeta" in err  # progress goes to stderr, not stdout


def test_usage_errors_exit_2(capsys):
    assert run(["mul", "w", "garbage", "{1}"], capsys)[0] == 2
    assert run(["mul", "nope", "{1}", "{1}"], capsys)[0] == 2
    assert run(["count", "nope", "3"], capsys)[0] == 2
    assert run(["verify", "nope", "3"], capsys)[0] == 2


def test_poset_figure(tmp_path, capsys):
    out_path = tmp_path / "hasse.png"
    code, out, _ = run(["poset", "sharp", "1,1,1", "--figure", str(out_path)],
                       capsys)
    assert code == 0
    assert out_path.stat().st_size > 0
    data = json.loads(out)
    assert len(data["elements"]) == 6


def test_count_figure(tmp_path, capsys):
    out_path = tmp_path / "bell.png"
    code, _, _ = run(["count", "bell", "6", "--figure", str(out_path)], capsys)
    assert code == 0
    assert out_path.stat().st_size > 0
