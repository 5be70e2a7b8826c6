"""Compile-fail harness: the static checking mode is only as good as mypy's verdicts."""
from pathlib import Path

import pytest

from helpers import TYPECHECK_DIR, expected_errors, gate_line, mypy_errors

mypy_api = pytest.importorskip("mypy.api")

HERE = TYPECHECK_DIR


@pytest.fixture(scope="module")
def ill_typed():
    path = HERE / "ill_typed.py"
    return expected_errors(path), mypy_errors(path)


def test_every_marked_line_is_rejected(ill_typed):
    expected, found = ill_typed
    assert expected, "no expectations found"
    assert expected == found


@pytest.mark.parametrize(
    "snippet",
    [
        "And(result_in, Int(0))",
        "net.interact(Int(0), Int(1))",
        "net.interact(IsEven(result_in), IsEven(result_in))",
    ],
    ids=["and-on-int", "pos-pos-pair", "neg-neg-pair"],
)
def test_gate_cases_are_rejected(ill_typed, snippet):
    _, found = ill_typed
    assert any(line == gate_line(snippet) for line, _ in found)


def test_well_typed_counterparts_pass():
    assert mypy_errors(HERE / "well_typed.py") == set()


def test_package_itself_type_checks():
    src = Path(__file__).parents[1] / "src" / "inets"
    stdout, _, status = mypy_api.run([str(src), "--no-incremental"])
    assert status == 0, stdout
