"""Sparse exact matrices and their bridge to sympy's DomainMatrix."""

import logging
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, Iterator, Tuple, Union

import numpy as np

from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from ..core.errors import ValidationError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class SparseMatrix:
    """A rows x cols matrix of exact rationals stored as a (row, col) -> value map.

    Zeros are never stored and each position appears at most once.
    """

    def __init__(self, rows: int, cols: int, entries: Dict[Tuple[int, int], Scalar] = None):
        if rows < 0 or cols < 0:
            raise ValidationError(f"Negative matrix shape {(rows, cols)}")
        self.rows = rows
        self.cols = cols
        self.entries: Dict[Tuple[int, int], Scalar] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValidationError(f"Entry {(r, c)} outside shape {(rows, cols)}")
            if v:
                self.entries[(r, c)] = v

    @classmethod
    def from_triplets(cls, rows: int, cols: int, triplets: Iterable[Tuple[int, int, Scalar]]) -> "SparseMatrix":
        """Build from (row, col, value) triplets, summing repeated positions."""
        acc: Dict[Tuple[int, int], Scalar] = {}
        for r, c, v in triplets:
            acc[(r, c)] = acc.get((r, c), 0) + v
        return cls(rows, cols, acc)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, size: int) -> "SparseMatrix":
        return cls(size, size, {(i, i): 1 for i in range(size)})

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    @property
    def is_integral(self) -> bool:
        return all(isinstance(v, int) or v.denominator == 1 for v in self.entries.values())

    def triplets(self) -> Iterator[Tuple[int, int, Scalar]]:
        for (r, c) in sorted(self.entries):
            yield r, c, self.entries[(r, c)]

    def column(self, c: int) -> Dict[int, Scalar]:
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def columns(self) -> Dict[int, Dict[int, Scalar]]:
        cols: Dict[int, Dict[int, Scalar]] = {}
        for (r, c), v in self.entries.items():
            cols.setdefault(c, {})[r] = v
        return cols

    def transpose(self) -> "SparseMatrix":
        return type(self)(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValidationError(f"Shape mismatch {self.shape} @ {other.shape}")
        by_row: Dict[int, Dict[int, Scalar]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, {})[c] = v
        acc: Dict[Tuple[int, int], Scalar] = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, {}).items():
                acc[(r, c)] = acc.get((r, c), 0) + v * w
        return SparseMatrix(self.rows, other.cols, acc)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValidationError(f"Shape mismatch {self.shape} + {other.shape}")
        acc = dict(self.entries)
        for key, v in other.entries.items():
            acc[key] = acc.get(key, 0) + v
        return SparseMatrix(self.rows, self.cols, acc)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + other.scaled(-1)

    def scaled(self, factor: Scalar) -> "SparseMatrix":
        return SparseMatrix(self.rows, self.cols, {k: v * factor for k, v in self.entries.items()})

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.rows}x{self.cols}, nnz={self.nnz})"

    def to_domain_matrix(self, domain=None) -> DomainMatrix:
        """Convert to a sparse DomainMatrix over ZZ, QQ or GF(p)."""
        if domain is None:
            domain = ZZ if self.is_integral else QQ
        rows: Dict[int, Dict[int, object]] = {}
        for (r, c), v in self.entries.items():
            x = _convert(v, domain)
            if x:
                rows.setdefault(r, {})[c] = x
        return DomainMatrix(rows, (self.rows, self.cols), domain)

    @classmethod
    def from_domain_matrix(cls, dm: DomainMatrix) -> "SparseMatrix":
        domain = dm.domain
        entries = {}
        for r, row in dm.to_sparse().rep.items():
            for c, v in row.items():
                entries[(r, c)] = _to_python(v, domain)
        return SparseMatrix(dm.shape[0], dm.shape[1], entries)

    def hstack(self, *others: "SparseMatrix") -> "SparseMatrix":
        entries = dict(self.entries)
        offset = self.cols
        for other in others:
            if other.rows != self.rows:
                raise ValidationError("hstack needs equal row counts")
            for (r, c), v in other.entries.items():
                entries[(r, c + offset)] = v
            offset += other.cols
        return SparseMatrix(self.rows, offset, entries)

    def select_columns(self, indices) -> "SparseMatrix":
        """The submatrix on the given columns, in the given order."""
        where = {int(c): j for j, c in enumerate(indices)}
        entries = {(r, where[c]): v for (r, c), v in self.entries.items() if c in where}
        return SparseMatrix(self.rows, len(where), entries)

    def remap(self, rows: int, cols: int, row_map, col_map) -> "SparseMatrix":
        """Re-index entries through integer arrays of new row and column positions."""
        return type(self)(rows, cols, {(int(row_map[r]), int(col_map[c])): v for (r, c), v in self.entries.items()})


class SparseIntMatrix(SparseMatrix):
    """A sparse matrix whose entries are all integers."""

    def __init__(self, rows: int, cols: int, entries: Dict[Tuple[int, int], int] = None):
        super().__init__(rows, cols, entries)
        for key, v in self.entries.items():
            if not isinstance(v, int):
                if isinstance(v, Fraction) and v.denominator == 1:
                    self.entries[key] = int(v)
                else:
                    raise ValidationError(f"Non-integer entry {v!r} at {key}")


def _convert(v: Scalar, domain):
    if domain == ZZ:
        return ZZ(int(v))
    if domain == QQ:
        f = Fraction(v)
        return QQ(f.numerator, f.denominator)
    p = domain.characteristic()
    f = Fraction(v)
    return domain(f.numerator * pow(f.denominator, -1, p) % p)


def _to_python(v, domain) -> Scalar:
    if domain == ZZ:
        return int(v)
    if domain == QQ:
        f = Fraction(int(v.numerator), int(v.denominator))
        return int(f) if f.denominator == 1 else f
    return int(domain.to_int(v)) % domain.characteristic()


def modular_domain(p: int):
    return GF(p)


def dump_triplets(m: SparseMatrix, path: str) -> None:
    """Write the plain-text triplet format: header ``rows cols nnz`` then ``row col value``."""
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(f"{m.rows} {m.cols} {m.nnz}\n")
        for r, c, v in m.triplets():
            f.write(f"{r} {c} {v}\n")


def load_triplets(path: str) -> SparseMatrix:
    """Read a matrix written by dump_triplets."""
    lines = [ln for ln in Path(path).read_text(encoding="utf-8").splitlines() if ln.strip()]
    if not lines:
        raise ValidationError(f"Empty triplet file {path}")
    rows, cols, nnz = (int(x) for x in lines[0].split())
    body = lines[1:]
    if len(body) != nnz:
        raise ValidationError(f"Triplet file {path} declares {nnz} entries but has {len(body)}")
    triplets = []
    for ln in body:
        r, c, v = ln.split()
        triplets.append((int(r), int(c), Fraction(v) if "/" in v else int(v)))
    return SparseMatrix.from_triplets(rows, cols, triplets)


def from_arrays(rows: int, cols: int, r, c, v, integral: bool = True) -> SparseMatrix:
    """Build from parallel numpy arrays of positions and values, summing duplicates."""
    r = np.asarray(r, dtype=np.int64)
    c = np.asarray(c, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if len(r) == 0:
        return SparseIntMatrix(rows, cols) if integral else SparseMatrix(rows, cols)
    keys = r * cols + c
    uniq, inverse = np.unique(keys, return_inverse=True)
    sums = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(sums, inverse, v)
    keep = sums != 0
    entries = {
        (int(key // cols), int(key % cols)): int(val)
        for key, val in zip(uniq[keep].tolist(), sums[keep].tolist())
    }
    return SparseIntMatrix(rows, cols, entries) if integral else SparseMatrix(rows, cols, entries)


def block_diagonal(blocks) -> SparseMatrix:
    """Place matrices along the diagonal."""
    entries = {}
    r0 = c0 = 0
    for b in blocks:
        for (r, c), v in b.entries.items():
            entries[(r0 + r, c0 + c)] = v
        r0 += b.rows
        c0 += b.cols
    return SparseMatrix(r0, c0, entries)
