import io
import json


from online_ramsey.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_prints_value(capsys):
    code, out, err = run_cli(capsys, "solve", "--red", "S3", "--blue", "P3", "--max-budget", "6")
    assert code == 0
    assert out.strip() == "4"


def test_solve_json(capsys):
    code, out, err = run_cli(capsys, "solve", "--red", "P3", "--blue", "P4", "--max-budget", "5", "--json")
    assert code == 0
    assert json.loads(out) == {"red": "P3", "blue": "P4", "value": 4}


def test_solve_unknown_above(capsys):
    code, out, err = run_cli(capsys, "solve", "--red", "S3", "--blue", "P4", "--max-budget", "3")
    assert code == 0
    assert "unknown above 3" in out


def test_verify_upper_ok(capsys):
    code, out, err = run_cli(capsys, "verify-upper", "--l", "5")
    assert code == 0
    assert out.startswith("verified, max_rounds=7")


def test_verify_upper_forced_tight_cap(capsys):
    code, out, err = run_cli(capsys, "verify-upper", "--l", "5", "--budget", "6", "--json")
    assert code == 2
    doc = json.loads(out)
    assert doc["result"] == "counterexample"
    assert doc["counterexample"]["status"] == "ongoing"


def test_verify_lower_ok(capsys):
    code, out, err = run_cli(capsys, "verify-lower", "--l", "3", "--json")
    assert code == 0
    assert json.loads(out)["result"] == "verified"


def test_audit_and_replay_round_trip(tmp_path, capsys):
    code, out, err = run_cli(capsys, "verify-upper", "--l", "4", "--budget", "5", "--json")
    assert code == 2
    doc = json.loads(out)["counterexample"]
    f = tmp_path / "t.json"
    f.write_text(json.dumps(doc), encoding="utf-8")

    code, out, err = run_cli(capsys, "audit", "--in", str(f), "--l", "4", "--json")
    assert code == 0
    audit = json.loads(out)
    assert audit["red_edges"] + audit["blue_edges"] == 5

    code, out, err = run_cli(capsys, "replay", "--in", str(f))
    assert code == 0
    assert "status: ongoing after 5 rounds" in out


def test_usage_error_exit_code(capsys):
    assert run_cli(capsys, "solve", "--red", "S3")[0] == 1  # missing --blue
    assert run_cli(capsys, "nonsense")[0] == 1
    code, out, err = run_cli(capsys, "solve", "--red", "Q9", "--blue", "P3")
    assert code == 1
    assert "error" in err


def test_play_painter_all_blue():
    from online_ramsey.cli import _build_parser, _cmd_play

    args = _build_parser().parse_args(["play", "--l", "4", "--as", "painter"])
    fin = io.StringIO("B\n" * 10)
    fout = io.StringIO()
    assert _cmd_play(args, in_stream=fin, out_stream=fout) == 0
    text = fout.getvalue()
    assert "blue_hit" in text
    assert "builder proposes" in text


def test_play_builder_against_blocking():
    from online_ramsey.cli import _build_parser, _cmd_play

    args = _build_parser().parse_args(["play", "--l", "2", "--as", "builder"])
    # grow a star at 0: blocking paints R R then is forced to answer B (P2 hit)
    fin = io.StringIO("new new\n0 new\n0 new\n")
    fout = io.StringIO()
    assert _cmd_play(args, in_stream=fin, out_stream=fout) == 0
    assert "blue_hit" in fout.getvalue()
