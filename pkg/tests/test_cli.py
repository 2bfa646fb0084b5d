"""End-to-end command line checks, run in process through main()."""

import json

import pytest

from qskein.cli import main
from qskein.jsonio import decode_annulus, decode_outcome
from qskein.adams_skein import Inconsistent


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_qint(capsys):
    code, out, err = run(capsys, "qint", "2")
    assert code == 0
    assert out == "s + s^-1\n"
    assert err == ""


def test_alpha(capsys):
    code, out, _ = run(capsys, "alpha", "(2)")
    assert code == 0
    assert out == "s^2 + 1\n"


def test_lr(capsys):
    code, out, _ = run(capsys, "lr", "(2)", "(1)")
    assert code == 0
    assert out == "(3) + (2,1)\n"


def test_adams_both_forms(capsys):
    code, out, _ = run(capsys, "adams", "2")
    assert code == 0
    assert out == "c1^2 - 2*c2\n"
    code, out, _ = run(capsys, "adams", "2", "--as-diagrams")
    assert code == 0
    assert out == "(2) - (1,1)\n"


def test_pm(capsys):
    code, out, _ = run(capsys, "pm", "2")
    assert code == 0
    assert out == "2*x^-1*A2 - (s - s^-1)*A1^2\n"


def test_q_and_theta_agree(capsys):
    # c2 maps to the depth-2 column
    _, q_out, _ = run(capsys, "q", "(1,1)")
    _, theta_out, _ = run(capsys, "theta", "c2")
    assert q_out == theta_out


def test_closure_infers_strands(capsys):
    code, explicit, _ = run(capsys, "closure", "1 1 1", "--strands", "2")
    assert code == 0
    code, inferred, _ = run(capsys, "closure", "1 1 1")
    assert code == 0
    assert explicit == inferred
    assert explicit == "(x^2*s^2 - x^2 + x^2*s^-2)*A2 + (x^3*s - x^3*s^-1)*A1^2\n"


def test_closure_json_round_trip(capsys):
    code, out, _ = run(capsys, "closure", "1 1 1", "--json")
    assert code == 0
    record = json.loads(out)
    element = decode_annulus(record)
    _, text_out, _ = run(capsys, "closure", "1 1 1")
    assert str(element) + "\n" == text_out


def test_torus_variants(capsys):
    code, out, _ = run(capsys, "torus", "2", "3")
    assert code == 0
    assert "v" in out
    code, out, _ = run(capsys, "torus", "2", "3", "--sl", "2", "--normalize")
    assert code == 0
    assert out == "t^-2 + t^-6 + t^-10 - t^-18\n"
    code, out, _ = run(capsys, "torus", "2", "3", "--sl", "2", "--h-order", "4", "--normalize")
    assert code == 0
    assert out == "2 - 23/4*h^2 + 12*h^3 - 2927/192*h^4\n"


def test_torus_h_order_requires_sl(capsys):
    code, _, err = run(capsys, "torus", "2", "3", "--h-order", "3")
    assert code == 2
    assert err != ""


def test_parse_error_annotated(capsys):
    code, out, err = run(capsys, "theta", "c1 + %")
    assert code == 2
    assert out == ""
    assert "position" in err
    assert "^" in err


def test_partition_parse_error(capsys):
    code, _, err = run(capsys, "alpha", "(1,2)")
    assert code == 2
    assert "position" in err


def test_unknown_command(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_psi_chords(capsys):
    code, out, _ = run(capsys, "psi-chords", "1-3,2-4", "2")
    assert code == 0
    assert out.splitlines() == ["8  1-2,3-4", "8  1-3,2-4"]


def test_verify_suite(capsys):
    code, out, err = run(capsys, "verify", "--suite", "xbiff", "--max", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert all(line.startswith("PASS xbiff") for line in lines)
    assert err == ""


def test_verify_max_above_default_warns(capsys):
    code, out, err = run(capsys, "verify", "--suite", "pattern", "--max", "3")
    assert code == 0
    assert err.startswith("warning: --max 3 exceeds the tested size 2 for suite pattern")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "cd", "--json")
    assert code == 0
    rows = json.loads(out)
    assert all(row[0] == "PASS" for row in rows)


def test_solve_pattern_solution(tmp_path, capsys):
    payload = {
        "target": {"word": [1], "strands": 2},
        "patterns": [{"word": [1], "strands": 2}],
    }
    path = tmp_path / "system.json"
    path.write_text(json.dumps(payload))
    code, out, _ = run(capsys, "solve-pattern", str(path))
    assert code == 0
    assert out == "solution [1]\n"


def test_solve_pattern_inconsistent_json(tmp_path, capsys):
    from qskein.annulus import Q
    from qskein.jsonio import encode_annulus
    from qskein.partitions import Partition

    target = Q(Partition((4,))) - Q(Partition((2, 1, 1))) + Q(Partition((2, 2)))
    payload = {
        "target": encode_annulus(target),
        "patterns": [
            {"word": [1], "strands": 2, "colour": [1, 1]},
            {"word": [-1], "strands": 2, "colour": [1, 1]},
        ],
    }
    path = tmp_path / "cable.json"
    path.write_text(json.dumps(payload))
    code, out, _ = run(capsys, "solve-pattern", str(path))
    assert code == 0
    assert out.startswith("inconsistent: unknown 0 is ")

    code, out, _ = run(capsys, "solve-pattern", str(path), "--json")
    assert code == 0
    outcome = decode_outcome(json.loads(out))
    assert isinstance(outcome, Inconsistent)


def test_solve_pattern_missing_file(capsys):
    code, _, err = run(capsys, "solve-pattern", "/no/such/file.json")
    assert code == 2
    assert err != ""


def test_torus_link_two_components(capsys):
    # non-coprime parameters give the torus link; two components double the
    # writhe-free constant term
    code, out, _ = run(capsys, "torus", "2", "4", "--sl", "2", "--h-order", "2")
    assert code == 0
    assert out == "4 + 7*h^2\n"
