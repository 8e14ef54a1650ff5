"""Loader for the bundled transcription of the printed bound tables."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .global_bounds import Profile

SOURCE_LOCAL = "local-table"
SOURCE_GLOBAL = "global-table"


@dataclass(frozen=True)
class GoldenTables:
    # (a, b) -> printed value or None for "*"
    local_cells: dict[tuple[int, int], int | None]
    bold: frozenset[tuple[int, int]]
    # a -> (printed value, printed profile)
    global_rows: dict[int, tuple[int, Profile]]

    def defined_local_cells(self) -> dict[tuple[int, int], int]:
        return {k: v for k, v in self.local_cells.items() if v is not None}


def parse_golden(text: str) -> GoldenTables:
    cells, bold, rows = {}, set(), {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "local":
                a, b = int(parts[1]), int(parts[2])
                cells[(a, b)] = None if parts[3] == "*" else int(parts[3])
                if parts[4:] == ["bold"]:
                    bold.add((a, b))
                elif parts[4:]:
                    raise ValueError(f"unexpected trailing fields {parts[4:]}")
            elif parts[0] == "global":
                a, value, r = int(parts[1]), int(parts[2]), int(parts[3])
                b = [int(x) for x in parts[4].split(",")]
                b += [0] * (r - len(b))
                rows[a] = (value, Profile(tuple(b)))
            else:
                raise ValueError(f"unknown record kind {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"golden data line {lineno}: {raw!r}: {exc}") from exc
    return GoldenTables(cells, frozenset(bold), rows)


def load_golden(path: str | Path | None = None) -> GoldenTables:
    if path is None:
        text = resources.files("rigidbounds").joinpath("data/printed_tables.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse_golden(text)
