"""
Tests for the command-line front-end.
"""

import json

import pytest

from markedmcg.main import build_parser, config_from_args, main


def run_cli(capsys, *argv):
    with pytest.raises(SystemExit) as exit_info:
        main(list(argv))
    return exit_info.value.code, capsys.readouterr().out


def test_classify(capsys, surface_file):
    code, out = run_cli(capsys, "classify", "-i", surface_file(0, [], 4))
    assert code == 0
    assert out.strip() == "FourPuncturedSphere"


def test_classify_annulus_parameters(capsys, surface_file):
    code, out = run_cli(capsys, "classify", "-i", surface_file(0, [3, 1], 0))
    assert code == 0
    assert out.strip() == "UnpuncturedAnnulus(1,3)"


def test_classify_json(capsys, surface_file):
    code, out = run_cli(capsys, "--json", "classify", "-i", surface_file(1, [], 1))
    assert code == 0
    report = json.loads(out)
    assert report["class"] == "OncePuncturedClosed"
    assert report["surface"] == {"genus": 1, "punctures": 1, "boundary": []}


def test_present_text_and_struct(capsys, surface_file):
    path = surface_file(0, [], 5)
    code, out = run_cli(capsys, "present", "-i", path)
    assert code == 0
    assert out.startswith("gens: ")
    assert all(line.startswith("rel: ") for line in out.splitlines()[1:])

    code, out = run_cli(capsys, "present", "-i", path, "--format", "struct")
    assert code == 0
    struct = json.loads(out)
    assert struct["generators"]
    assert all(0 <= i < len(struct["generators"]) for r in struct["relators"] for i, _ in r)


def test_abelianize(capsys, surface_file):
    code, out = run_cli(capsys, "abelianize", "-i", surface_file(0, [], 5))
    assert code == 0
    divisors = json.loads(out)
    assert isinstance(divisors, list)
    assert all(isinstance(d, int) for d in divisors)


def test_descriptor(capsys, surface_file):
    code, out = run_cli(capsys, "descriptor", "-i", surface_file(0, [2, 2], 0))
    assert code == 0
    assert out.strip().endswith("| H_{2,2} ⋊ Z₂")

    code, out = run_cli(capsys, "--json", "descriptor", "-i", surface_file(0, [4], 1))
    assert code == 0
    assert json.loads(out)["exceptional"] == "Di4xSigma3"


def test_mutate(capsys):
    code, out = run_cli(capsys, "mutate", "-B", "[[0,2],[-2,0]]", "-k", "1", "-k", "1")
    assert code == 0
    assert out.strip() == "[[0, 2], [-2, 0]]"

    code, out = run_cli(capsys, "mutate", "-B", "[[0,1,0],[-1,0,1],[0,-1,0]]", "-k", "2")
    assert code == 0
    assert json.loads(out) == [[0, -1, 1], [1, 0, -1], [-1, 1, 0]]


def test_mutate_index_out_of_range(capsys):
    code, out = run_cli(capsys, "mutate", "-B", "[[0,1],[-1,0]]", "-k", "3")
    assert code == 1
    assert out.startswith("FAIL mutate")


def test_verify(capsys):
    code, out = run_cli(
        capsys, "verify", "--suite", "braid", "--max-n", "3", "--samples", "2"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines
    assert all(line.startswith("PASS braid") for line in lines)


def test_verify_json(capsys):
    code, out = run_cli(capsys, "--json", "verify", "--suite", "extension")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True
    assert {r["suite"] for r in report["results"]} == {"extension"}


def test_missing_input_file(capsys, tmp_path):
    code, out = run_cli(capsys, "classify", "-i", str(tmp_path / "absent.json"))
    assert code == 1
    assert out.startswith("FAIL classify")


def test_usage_errors(capsys):
    for argv in (["frobnicate"], ["verify", "--suite", "genus7"], ["verify", "--max-n", "0"]):
        code, _ = run_cli(capsys, *argv)
        assert code == 2


def test_config_from_args():
    args = build_parser().parse_args(
        ["verify", "--suite", "braid", "--suite", "sphere", "--depth", "3", "--workers", "2"]
    )
    config = config_from_args(args)
    assert config.suites == ("braid", "sphere")
    assert config.workers == 2
    assert config.overrides()["depth"] == 3
    assert config_from_args(build_parser().parse_args(["verify"])).suites == ("all",)
