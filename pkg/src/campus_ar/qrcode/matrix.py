"""Square module grids and the eight square symmetries used for orientation."""

from __future__ import annotations

from enum import Enum

from ..errors import CampusArError

SUPPORTED_SIZES = (21, 25, 29)


class BadMatrixText(CampusArError):
    pass


class BitMatrix:
    """Square grid of modules; True is a dark module."""

    __slots__ = ("size", "rows")

    def __init__(self, size: int, rows: list[list[bool]] | None = None):
        self.size = size
        self.rows = rows if rows is not None else [[False] * size for _ in range(size)]

    def get(self, r: int, c: int) -> bool:
        return self.rows[r][c]

    def set(self, r: int, c: int, value: bool) -> None:
        self.rows[r][c] = value

    def copy(self) -> "BitMatrix":
        return BitMatrix(self.size, [row[:] for row in self.rows])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.size == other.size
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"BitMatrix(size={self.size})"

    def dark_count(self) -> int:
        return sum(sum(row) for row in self.rows)

    def to_text(self) -> str:
        """First line is the size, then one '#'/'.' line per module row."""
        lines = [str(self.size)]
        lines.extend("".join("#" if v else "." for v in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BitMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise BadMatrixText("empty matrix text")
        try:
            size = int(lines[0].strip())
        except ValueError:
            raise BadMatrixText(f"first line must be the size, got {lines[0]!r}") from None
        if len(lines) != size + 1:
            raise BadMatrixText(f"expected {size} rows, got {len(lines) - 1}")
        rows = []
        for ln in lines[1:]:
            if len(ln) != size or set(ln) - {"#", "."}:
                raise BadMatrixText(f"bad matrix row {ln!r}")
            rows.append([ch == "#" for ch in ln])
        return cls(size, rows)


class Orientation(Enum):
    """The eight symmetries of a square, as applied to the canonical symbol."""

    IDENTITY = "identity"
    ROT90 = "rot90"
    ROT180 = "rot180"
    ROT270 = "rot270"
    FLIP_H = "flip_h"
    FLIP_V = "flip_v"
    TRANSPOSE = "transpose"
    ANTI_TRANSPOSE = "anti_transpose"

    def apply(self, m: BitMatrix) -> BitMatrix:
        n = m.size
        out = BitMatrix(n)
        src = m.rows
        dst = out.rows
        for r in range(n):
            for c in range(n):
                if self is Orientation.IDENTITY:
                    v = src[r][c]
                elif self is Orientation.ROT90:  # clockwise
                    v = src[n - 1 - c][r]
                elif self is Orientation.ROT180:
                    v = src[n - 1 - r][n - 1 - c]
                elif self is Orientation.ROT270:
                    v = src[c][n - 1 - r]
                elif self is Orientation.FLIP_H:
                    v = src[r][n - 1 - c]
                elif self is Orientation.FLIP_V:
                    v = src[n - 1 - r][c]
                elif self is Orientation.TRANSPOSE:
                    v = src[c][r]
                else:
                    v = src[n - 1 - c][n - 1 - r]
                dst[r][c] = v
        return out

    def inverse(self) -> "Orientation":
        if self is Orientation.ROT90:
            return Orientation.ROT270
        if self is Orientation.ROT270:
            return Orientation.ROT90
        return self
