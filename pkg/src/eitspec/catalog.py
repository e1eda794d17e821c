"""Line-list data model, CSV ingestion and bundled datasets.

Line-list CSV format (UTF-8, comma separated, LF endings):

    species,branch,omega_ge_cm1,gamma_cm1,strength

Numeric fields are decimal reals; lines whose first non-blank character
is '#' are comments.  Numbers serialise at 17 significant digits so a
parse/serialize round trip is lossless.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import LinelistParseError
from .lineshape import SpectralLine
from .units import Wavenumber

CSV_COLUMNS = ("species", "branch", "omega_ge_cm1", "gamma_cm1", "strength")

_BUNDLED_CATALOGS = ("cl2_table1", "fig4_model", "fig5_model", "methanol_table2")


def format_float(x: float) -> str:
    """Round-trip-exact text form of a float (17 significant digits)."""
    return format(float(x), ".17g")


@dataclass(frozen=True)
class LineCatalog:
    """An immutable list of spectral lines sharing the cm^-1 unit."""

    lines: tuple[SpectralLine, ...]
    source: str = field(default="", compare=False)
    units_note: str = field(default="cm-1", compare=False)

    def __len__(self) -> int:
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(line.label for line in self.lines)


@dataclass(frozen=True)
class RotorConstants:
    """Rotational constant of one vibrational level plus a fixed offset."""

    b_v: Wavenumber
    const_offset: Wavenumber = 0.0

    def __post_init__(self):
        if not (self.b_v > 0.0):
            raise ValueError(f"rotational constant must be > 0, got {self.b_v}")


def rotational_energy(rc: RotorConstants, j: int) -> Wavenumber:
    """E_rot = B_v J (J + 1) + const; neighbouring spacings grow linearly
    with J, which is why high-J lines sit clear of their neighbours."""
    if j < 0:
        raise ValueError(f"rotational quantum number must be >= 0, got {j}")
    return rc.b_v * j * (j + 1) + rc.const_offset


def parse_linelist(text: str, source: str = "") -> LineCatalog:
    """Parse a line-list CSV into a catalog.

    Raises LinelistParseError naming the offending row and column for a
    bad header, a short row, an unparsable number, a non-positive width,
    a negative strength, or a duplicate label.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parsed = next(csv.reader([raw]))
        rows.append((lineno, [cell.strip() for cell in parsed]))
    if not rows:
        raise LinelistParseError("no header row found")
    header_row, header = rows[0]
    if tuple(header) != CSV_COLUMNS:
        raise LinelistParseError(
            f"header must be exactly {','.join(CSV_COLUMNS)}", row=header_row
        )
    lines = []
    seen = set()
    for lineno, cells in rows[1:]:
        if len(cells) != len(CSV_COLUMNS):
            raise LinelistParseError(
                f"expected {len(CSV_COLUMNS)} fields, got {len(cells)}", row=lineno
            )
        species, branch = cells[0], cells[1]
        numbers = {}
        for column, cell in zip(CSV_COLUMNS[2:], cells[2:]):
            try:
                value = float(cell)
            except ValueError:
                raise LinelistParseError(
                    f"not a number: {cell!r}", row=lineno, column=column
                ) from None
            if not math.isfinite(value):
                raise LinelistParseError(
                    f"not finite: {cell!r}", row=lineno, column=column
                )
            numbers[column] = value
        if numbers["gamma_cm1"] <= 0.0:
            raise LinelistParseError(
                "width must be > 0", row=lineno, column="gamma_cm1"
            )
        if numbers["strength"] < 0.0:
            raise LinelistParseError(
                "strength must be >= 0", row=lineno, column="strength"
            )
        line = SpectralLine(
            omega_ge=numbers["omega_ge_cm1"],
            gamma=numbers["gamma_cm1"],
            strength=numbers["strength"],
            species=species,
            branch=branch,
        )
        if line.label in seen:
            raise LinelistParseError(
                f"duplicate label {line.label!r}", row=lineno, column="branch"
            )
        seen.add(line.label)
        lines.append(line)
    return LineCatalog(lines=tuple(lines), source=source)


def serialize_linelist(cat: LineCatalog) -> str:
    """Inverse of parse_linelist (modulo comments); numbers at 17 digits."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for line in cat.lines:
        writer.writerow(
            [
                line.species,
                line.branch,
                format_float(line.omega_ge),
                format_float(line.gamma),
                format_float(line.strength),
            ]
        )
    return buf.getvalue()


def select_window(
    cat: LineCatalog, center: Wavenumber, halfwidth: Wavenumber
) -> LineCatalog:
    """Lines with |omega_ge - center| <= halfwidth, order preserved."""
    if not (halfwidth > 0.0):
        raise ValueError(f"halfwidth must be > 0, got {halfwidth}")
    kept = tuple(
        line for line in cat.lines if abs(line.omega_ge - center) <= halfwidth
    )
    return LineCatalog(lines=kept, source=cat.source, units_note=cat.units_note)


def bundled_catalog_names() -> tuple[str, ...]:
    return _BUNDLED_CATALOGS


def load_catalog(name_or_path: str) -> LineCatalog:
    """Load a bundled catalog by name, or any line-list CSV by path."""
    if name_or_path in _BUNDLED_CATALOGS:
        text = (
            resources.files("eitspec.data")
            .joinpath(f"catalogs/{name_or_path}.csv")
            .read_text(encoding="utf-8")
        )
        return parse_linelist(text, source=name_or_path)
    path = Path(name_or_path)
    if not path.is_file():
        raise FileNotFoundError(
            f"{name_or_path!r} is neither a bundled catalog "
            f"({', '.join(_BUNDLED_CATALOGS)}) nor an existing file"
        )
    return parse_linelist(path.read_text(encoding="utf-8"), source=str(path))
