"""
Dense matrices over the rationals.
Entries are fractions.Fraction; no floating point anywhere.
"""
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted")
    return Fraction(value)


def format_fraction(value: Fraction) -> str:
    """Exact printable form, e.g. '27' or '-5/2'"""
    return str(to_fraction(value))


class ExactMatrix:
    """Immutable row-major matrix of Fractions"""

    def __init__(self, rows: int, cols: int, entries: Sequence = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if entries is None:
            entries = [0] * (rows * cols)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries: Tuple[Fraction, ...] = tuple(to_fraction(e) for e in entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int = None) -> 'ExactMatrix':
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'ExactMatrix':
        return cls(rows, cols)

    @classmethod
    def identity(cls, size: int) -> 'ExactMatrix':
        return cls(size, size, [1 if i == j else 0 for i in range(size) for j in range(size)])

    @classmethod
    def column(cls, values: Sequence) -> 'ExactMatrix':
        return cls(len(values), 1, list(values))

    def __getitem__(self, index) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List[Fraction]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> List[List[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def column_values(self, j: int = 0) -> List[Fraction]:
        return [self[i, j] for i in range(self.rows)]

    def transpose(self) -> 'ExactMatrix':
        return ExactMatrix(self.cols, self.rows,
                           [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def matmul(self, other: 'ExactMatrix') -> 'ExactMatrix':
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            left = self.row(i)
            for j in range(other.cols):
                out.append(sum((left[k] * other[k, j] for k in range(self.cols) if left[k]), Fraction(0)))
        return ExactMatrix(self.rows, other.cols, out)

    __matmul__ = matmul

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, {[[format_fraction(e) for e in r] for r in self.to_rows()]})"

    def to_dict(self):
        return {
            'rows': self.rows,
            'cols': self.cols,
            'entries': [[format_fraction(e) for e in r] for r in self.to_rows()],
        }
