import json
import os
import subprocess
import sys

import pytest

from hypinv.cli import main


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(data if isinstance(data, str) else json.dumps(data))
    return str(path)


def run_transform(tmp_path, seq, spec):
    return main(["transform", "--in", write(tmp_path, "seq.json", seq), "--spec", write(tmp_path, "spec.json", spec)])


@pytest.mark.parametrize(
    "seq, spec, expected",
    [
        ([["1", "0"], ["0", "0"]], {"kind": "binomial-signed"}, [["1", "0"], ["1", "0"]]),
        ([["3/4", "1"], ["-2", "0"], ["5", "1/2"]], {"kind": "identity"}, [["3/4", "1"], ["-2", "0"], ["5", "1/2"]]),
        ([["0", "0"], ["1", "0"]], {"kind": "L", "a": "1"}, [["0", "0"], ["-2", "0"]]),
    ],
)
def test_transform_examples(tmp_path, capsys, seq, spec, expected):
    assert run_transform(tmp_path, {"seq": seq}, spec) == 0
    assert json.loads(capsys.readouterr().out) == {"seq": expected}


def test_transform_roundtrip_through_cli(tmp_path, capsys):
    seq = {"seq": [["1", "2"], ["-1/3", "0"], ["4", "-5/7"], ["0", "1"]]}
    assert run_transform(tmp_path, seq, {"kind": "Ltilde", "a": "-1"}) == 0
    forward = json.loads(capsys.readouterr().out)
    assert run_transform(tmp_path, forward, {"kind": "Ltilde-inv", "a": "-1"}) == 0
    assert json.loads(capsys.readouterr().out) == seq


@pytest.mark.parametrize(
    "spec",
    [{"kind": "L", "a": "-2"}, {"kind": "Lab", "a": "1", "b": "0"}, {"kind": "Ltilde"}, {"kind": "nope"}],
)
def test_transform_invalid_parameters_exit_2(tmp_path, spec):
    assert run_transform(tmp_path, {"seq": [["1", "0"]]}, spec) == 2


@pytest.mark.parametrize(
    "seq, spec",
    [
        ("not json", {"kind": "identity"}),
        ({"seq": []}, {"kind": "identity"}),
        ({"values": [["1", "0"]]}, {"kind": "identity"}),
        ({"seq": [["1.5", "0"]]}, {"kind": "identity"}),
        ({"seq": [["1", "0"]]}, "{"),
        ({"seq": [["1", "0"]]}, {"kind": "L", "a": "x"}),
    ],
)
def test_transform_malformed_input_exit_3(tmp_path, seq, spec):
    assert run_transform(tmp_path, seq, spec) == 3


def test_transform_missing_file_exit_3(tmp_path):
    assert main(["transform", "--in", str(tmp_path / "none.json"), "--spec", str(tmp_path / "none.json")]) == 3


@pytest.mark.parametrize(
    "tag, trials, nmax, seed",
    [("roundtrip-L", 200, 16, 7), ("I5710", 50, 6, 1), ("S610", 1, 0, 0)],
)
def test_verify_examples(tmp_path, capsys, tag, trials, nmax, seed):
    code = main(["verify", "--id", tag, "--trials", str(trials), "--nmax", str(nmax), "--seed", str(seed), "--out", str(tmp_path)])
    assert code == 0
    printed = json.loads(capsys.readouterr().out)
    saved = json.loads((tmp_path / f"{tag}-{seed}.json").read_text())
    assert printed == saved
    assert saved["status"] == "pass"
    assert saved["n_range"] == [0, nmax]


def test_verify_s610_sides_are_one():
    from hypinv.sums import rhs

    assert rhs("S610", {"a": "5/2", "b": "1/3", "c": "2/7", "d": "3/5", "e": "4/9"}, 0) == 1


def test_verify_unknown_tag_exit_2(capsys):
    assert main(["verify", "--id", "I999", "--trials", "1", "--nmax", "1", "--seed", "0"]) == 2


def test_verify_is_deterministic(capsys):
    args = ["verify", "--id", "I538", "--trials", "5", "--nmax", "4", "--seed", "3"]
    outs = []
    for _ in range(2):
        assert main(args) == 0
        data = json.loads(capsys.readouterr().out)
        data.pop("elapsed_ms")
        outs.append(data)
    assert outs[0] == outs[1]


def test_usage_error_exit_2(capsys):
    assert main(["verify", "--id", "dixon"]) == 2
    assert main([]) == 2


def test_selftest_with_sign_flip_names_roundtrip_l(capsys):
    assert main(["selftest", "--mutate", "L"]) == 1
    out = capsys.readouterr().out
    failing = [line for line in out.splitlines() if line.startswith("selftest FAILED")]
    assert len(failing) == 1
    assert "criterion 1" in failing[0] and "roundtrip-L" in failing[0]


def test_selftest_passes_with_empty_environment():
    # a fresh process with no environment variables at all
    result = subprocess.run(
        [sys.executable, "-m", "hypinv", "selftest"],
        env={},
        capture_output=True,
        text=True,
        timeout=600,
        cwd=os.path.dirname(__file__),
    )
    assert result.returncode == 0, result.stdout + result.stderr
    assert result.stdout.count("[PASS]") == 7
