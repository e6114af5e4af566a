"""CSV tables written by the sweep and kernel verbs."""

from __future__ import annotations

import csv
import io
import logging
import math
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from .const import TOOL_VERSION
from .exceptions import UsageError


_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class TableDescription:
    """Column layout of a table."""

    key: str
    abscissa: str
    ordinate: str = "value"

    @property
    def header(self) -> tuple[str, str]:
        return self.abscissa, self.ordinate


SWEEP_TABLE = TableDescription(key="sweep", abscissa="s")

KERNEL_TABLE = TableDescription(key="kernel", abscissa="x")


def format_number(value) -> str:
    """Return the shortest round-trip text of value, ``inf`` for infinity."""
    if not isinstance(value, float):
        return str(value)
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return repr(float(value))


@dataclass
class SweepTable:
    """Two-column table with ``#`` metadata lines.

    The abscissa must be strictly increasing.
    """

    description: TableDescription
    rows: list[tuple[float, float]]
    metadata: dict[str, object] = field(default_factory=dict)

    def __post_init__(self):
        abscissae = [row[0] for row in self.rows]
        if any(b <= a for a, b in zip(abscissae, abscissae[1:])):
            raise UsageError(
                f"{self.description.abscissa} column is not strictly increasing"
            )
        self.metadata.setdefault("version", str(TOOL_VERSION))

    @property
    def header(self) -> tuple[str, str]:
        return self.description.header

    def render(self) -> str:
        """Return the CSV text with LF line endings."""
        buffer = io.StringIO()
        for key, value in self.metadata.items():
            buffer.write(f"# {key}: {format_number(value)}\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.header)
        writer.writerows(
            (format_number(x), format_number(y)) for x, y in self.rows
        )
        return buffer.getvalue()

    def write(self, path: str | Path) -> Path:
        """Write the table atomically.

        The text goes to a temporary file in the target directory, which is
        renamed over the target. No partial file is left behind on failure.
        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(
            prefix=f".{path.name}.", suffix=".tmp", dir=path.parent
        )
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as file:
                file.write(self.render())
            os.replace(tmp_name, path)
        except BaseException:
            Path(tmp_name).unlink(missing_ok=True)
            raise
        _LOGGER.debug(f"Wrote {len(self.rows)} rows to {path}")
        return path
