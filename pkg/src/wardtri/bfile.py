"""OEIS b-file interchange: parse, render, and triangle linearization.

A b-file is optional leading '#' comment lines followed by one
"index value" pair per line, indices increasing by 1.  Triangles are
linearized by rows n = 1..N, k = 1..n, leaving out the all-zero k = 0
column and the n = 0 row, matching how the OEIS reads these triangles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .triangles import Triangle


class BFileParseError(ValueError):
    """Malformed b-file text (bad line, or indices not contiguous)."""


@dataclass(frozen=True)
class BFile:
    offset: int
    values: tuple[int, ...]
    comments: tuple[str, ...] = field(default=())

    def pairs(self) -> list[tuple[int, int]]:
        return [(self.offset + i, v) for i, v in enumerate(self.values)]


def parse_bfile(text: str) -> BFile:
    comments: list[str] = []
    values: list[int] = []
    offset: int | None = None
    in_header = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if not in_header:
                raise BFileParseError(f"line {lineno}: comment after data lines")
            comments.append(raw)
            continue
        in_header = False
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            index, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(f"line {lineno}: non-integer token in {raw!r}") from None
        if offset is None:
            offset = index
        elif index != offset + len(values):
            raise BFileParseError(
                f"line {lineno}: index {index} not contiguous "
                f"(expected {offset + len(values)})"
            )
        values.append(val)
    if offset is None:
        raise BFileParseError("no data lines")
    return BFile(offset=offset, values=tuple(values), comments=tuple(comments))


def render_bfile(bf: BFile) -> str:
    lines = list(bf.comments)
    lines.extend(f"{i} {v}" for i, v in bf.pairs())
    return "\n".join(lines) + "\n"


def linearize(tri: Triangle) -> list[int]:
    """Row-by-row reading of the triangle, k = 1..n within row n >= 1."""
    out: list[int] = []
    for n in range(1, tri.n_rows + 1):
        out.extend(tri.rows[n][1:])
    return out


def index_to_entry(index: int, offset: int = 1) -> tuple[int, int]:
    """Invert the linearization: b-file index -> (n, k).

    For offset 1 this is the unique (n, k) with n(n-1)/2 + k = index.
    """
    pos = index - offset + 1
    if pos < 1:
        raise ValueError(f"index {index} below offset {offset}")
    n = 1
    while n * (n + 1) // 2 < pos:
        n += 1
    k = pos - n * (n - 1) // 2
    return n, k


def rows_needed(count: int) -> int:
    """Smallest N whose linearization holds at least `count` entries."""
    n = 0
    while n * (n + 1) // 2 < count:
        n += 1
    return n
