"""Tests for the command-line front end, run against the bundled sample documents."""
from __future__ import annotations

import json
from pathlib import Path

import pytest

from cosmos import cli
from cosmos import config as settings
from cosmos.config import Config

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(settings, "config", Config())


def _sample(name: str) -> str:
    return str(SAMPLES / name)


def test_nerve_is_a_quasicategory(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["qcheck", _sample("nerve2.json"), "--dims", "4"]) == 0
    out = capsys.readouterr().out
    assert "status: YES" in out
    assert "reason: quasi-category up to dim 4" in out


def test_horn_fails_the_inner_horn_condition(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["qcheck", _sample("horn21.json"), "--format", "json"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["status"] == "NO"
    assert report["witness"]["horn"] == "Λ^{2,1}"


def test_homotopy_category_of_a_horn_is_an_input_error(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["hcat", _sample("horn21.json")]) == cli.EXIT_INPUT_ERROR
    assert "inner horn" in capsys.readouterr().err


def test_galois_connection_adjcheck(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["adjcheck", _sample("galois.json")]) == 0
    assert cli.main(["adjviacomma", _sample("galois.json")]) == 0


def test_homotopy_commands_need_two_dimensions(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["adjcheck", _sample("galois.json"), "--dims", "1"]) == cli.EXIT_INPUT_ERROR
    assert "dimension bound" in capsys.readouterr().err


def test_point_of_iso_is_an_equivalence() -> None:
    assert cli.main(["equivcheck", _sample("iso.json")]) == 0


@pytest.mark.parametrize("variant, code", [("cartesian", 1), ("cocartesian", 0)])
def test_fibration_variants(variant: str, code: int) -> None:
    assert cli.main(["fibcheck", _sample("inclusion.json"), "--variant", variant]) == code


def test_limit_of_a_pair(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["limitcheck", _sample("pair-limit.json"), "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "YES"


def test_right_extension_along_the_point(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["ran", _sample("cospan.json")]) == 0
    assert "pointwise right extension" in capsys.readouterr().out


def test_corrupt_category_is_rejected(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["validate", _sample("corrupt.json")]) == cli.EXIT_INPUT_ERROR
    assert "composite boundary" in capsys.readouterr().err


def test_library_with_a_corrupt_document(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["library", "--with", _sample("corrupt.json")]) == cli.EXIT_INPUT_ERROR
    assert "composite boundary" in capsys.readouterr().err


def test_missing_file_is_an_input_error() -> None:
    assert cli.main(["validate", _sample("missing.json")]) == cli.EXIT_INPUT_ERROR


def test_several_inputs_report_the_worst_status(capsys: pytest.CaptureFixture[str]) -> None:
    code = cli.main(["qcheck", _sample("nerve2.json"), _sample("horn21.json")])
    assert code == 1
    out = capsys.readouterr().out
    assert f"input: {_sample('horn21.json')}" in out


def test_library_listing(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["library", "--list", "--format", "json"]) == 0
    listing = json.loads(capsys.readouterr().out)
    assert "galois" in listing["adjunction"]


def test_library_group_passes(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["library", "--group", "foundations"]) == 0
    assert "checks passed" in capsys.readouterr().out


@pytest.mark.parametrize(
    "codes, expected",
    [([], 0), ([0, 2], 2), ([2, 1, 0], 1), ([0, 0], 0)],
)
def test_worst_status(codes: list, expected: int) -> None:
    assert cli._worst(codes) == expected


def test_flags_override_the_configured_defaults() -> None:
    args = cli.build_parser().parse_args(["qcheck", "a.json", "--dims", "5", "--probe-set", "minimal"])
    run = cli.RunConfig.from_args(args)
    assert run.dim_bound == 5
    assert run.probe_set == "minimal"
    assert run.budget == settings.config.budget


def test_run_library_lists_items_as_text() -> None:
    code, report = cli.run_library(cli.RunConfig("library", listing=True))
    assert code == 0
    assert any(line.startswith("adjunction:") and "galois" in line for line in report.splitlines())
