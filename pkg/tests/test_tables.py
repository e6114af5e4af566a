"""Testing module."""

import logging
import math

import pytest

from levy_foraging.const import TOOL_VERSION
from levy_foraging.exceptions import UsageError
from levy_foraging.tables import (
    KERNEL_TABLE,
    SWEEP_TABLE,
    SweepTable,
    format_number,
)

_LOGGER = logging.getLogger(__name__)


def test_format_number():
    """Test the round-trip number text."""
    assert format_number(0.1) == "0.1"
    assert float(format_number(1.0 / 3.0)) == 1.0 / 3.0
    assert format_number(math.inf) == "inf"
    assert format_number(-math.inf) == "-inf"
    assert format_number("unit") == "unit"


def test_render():
    """Test the metadata lines, header and rows."""
    table = SweepTable(SWEEP_TABLE, [(0.6, 1.5), (0.7, 2.0)], {"functional": "E1"})
    assert table.render() == (
        "# functional: E1\n"
        f"# version: {TOOL_VERSION}\n"
        "s,value\n"
        "0.6,1.5\n"
        "0.7,2.0\n"
    )


def test_abscissa_must_increase():
    """Test that a non-increasing abscissa is rejected."""
    with pytest.raises(UsageError):
        SweepTable(KERNEL_TABLE, [(1.0, 0.2), (1.0, 0.1)])


def test_atomic_write(tmp_path):
    """Test that a write leaves only the target file."""
    path = tmp_path / "nested" / "kernel.csv"
    table = SweepTable(KERNEL_TABLE, [(0.0, 0.3), (1.0, 0.2)])

    assert table.write(path) == path
    assert path.read_text(encoding="utf-8").splitlines()[1] == "x,value"
    assert [p.name for p in path.parent.iterdir()] == ["kernel.csv"]


def test_failed_write_leaves_no_file(tmp_path, monkeypatch):
    """Test that a failing write removes its temporary file."""
    path = tmp_path / "sweep.csv"
    table = SweepTable(SWEEP_TABLE, [(0.6, 1.5)])

    def broken_render():
        raise RuntimeError("disk full")

    monkeypatch.setattr(table, "render", broken_render)
    with pytest.raises(RuntimeError):
        table.write(path)
    assert list(tmp_path.iterdir()) == []
