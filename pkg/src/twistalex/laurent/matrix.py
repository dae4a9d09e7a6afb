"""Immutable dense matrices over Z[t^{+-1}] and over Z."""

from __future__ import annotations

from typing import Iterable, Sequence

from .poly import LaurentPoly

_ZERO = LaurentPoly()
_ONE = LaurentPoly.const(1)


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    if isinstance(x, str):
        return LaurentPoly.parse(x)
    raise TypeError(f"cannot use {type(x).__name__} as a matrix entry")


class PolyMatrix:
    """rows x cols matrix of LaurentPoly, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(_as_poly(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> PolyMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> PolyMatrix:
        return cls(rows, cols, [_ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> PolyMatrix:
        return cls(n, n, [_ONE if i == j else _ZERO for i in range(n) for j in range(n)])

    def __getitem__(self, ij) -> LaurentPoly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[LaurentPoly, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[LaurentPoly]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return PolyMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> PolyMatrix:
        c = _as_poly(c)
        return PolyMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        ocols = [[other[k, j] for k in range(other.rows)] for j in range(other.cols)]
        for i in range(self.rows):
            r = self.row(i)
            nz = [(k, a) for k, a in enumerate(r) if a]
            for j in range(other.cols):
                col = ocols[j]
                acc = _ZERO
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = acc + a * b
                out.append(acc)
        return PolyMatrix(self.rows, other.cols, out)

    def transpose(self) -> PolyMatrix:
        return PolyMatrix(self.cols, self.rows,
                          [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> PolyMatrix:
        return PolyMatrix(len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    def delete_columns(self, cols: Iterable[int]) -> PolyMatrix:
        drop = set(cols)
        keep = [j for j in range(self.cols) if j not in drop]
        return self.submatrix(range(self.rows), keep)

    def map(self, f) -> PolyMatrix:
        return PolyMatrix(self.rows, self.cols, [f(a) for a in self.entries])

    def evaluate(self, x) -> list[list]:
        """Entries evaluated at t = x (as int or Fraction)."""
        return [[self[i, j](x) for j in range(self.cols)] for i in range(self.rows)]

    @staticmethod
    def block(blocks: Sequence[Sequence[PolyMatrix]]) -> PolyMatrix:
        """Assemble from a grid of equally-shaped-per-row/column blocks."""
        rows = []
        for brow in blocks:
            h = brow[0].rows
            for i in range(h):
                r = []
                for b in brow:
                    if b.rows != h:
                        raise ValueError("block heights differ within a block row")
                    r.extend(b.row(i))
                rows.append(r)
        return PolyMatrix.from_rows(rows) if rows else PolyMatrix(0, 0, [])

    def __repr__(self):
        body = "; ".join("[" + ", ".join(str(a) for a in self.row(i)) + "]" for i in range(self.rows))
        return f"PolyMatrix({self.rows}x{self.cols}: {body})"


class IntMatrix:
    """rows x cols integer matrix, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        entries = tuple(int(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"IntMatrix({self.to_rows()})"
