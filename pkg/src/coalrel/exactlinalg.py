"""Exact rational linear algebra.

Matrices hold :class:`fractions.Fraction` entries and are stored row-wise as
dictionaries of nonzero entries.  Every linear map in the package is a
``RatMatrix`` acting on column vectors with respect to fixed ordered bases.

Tensor products follow one global index convention: the basis vector
``e_i (x) e_j`` of ``V (x) W`` has index ``i * dim(W) + j`` (0-based), which is
exactly the row/column layout produced by :func:`kron`.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Sequence

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse a literal such as ``7``, ``-3/2`` or ``+1/4``."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floating point entries are not accepted; use int, str or Fraction")
    return Fraction(value)


class RatMatrix:
    """Immutable matrix of exact rationals.

    Construct with :meth:`from_rows`, :meth:`from_columns`,
    :meth:`from_entries`, :meth:`zeros` or :meth:`identity`.
    """

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, rows: int, cols: int, data: Sequence[dict] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimension")
        self.rows = rows
        self.cols = cols
        if data is None:
            self._data = tuple({} for _ in range(rows))
        else:
            if len(data) != rows:
                raise ValueError("row count does not match data")
            clean = []
            for row in data:
                d = {}
                for j, v in row.items():
                    if not 0 <= j < cols:
                        raise IndexError(f"column index {j} out of range for {cols} columns")
                    q = as_rational(v)
                    if q:
                        d[j] = q
                clean.append(d)
            self._data = tuple(clean)
        self._hash = None

    @classmethod
    def _wrap(cls, rows: int, cols: int, data: list[dict]) -> RatMatrix:
        # trusted path: data already holds nonzero Fractions only
        m = cls.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._data = tuple(data)
        m._hash = None
        return m

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> RatMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        data = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            data.append({j: v for j, v in enumerate(r)})
        return cls(len(rows), cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> RatMatrix:
        columns = [list(c) for c in columns]
        if rows is None:
            if not columns:
                raise ValueError("rows must be given for a matrix with no columns")
            rows = len(columns[0])
        data = [{} for _ in range(rows)]
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise ValueError("ragged columns")
            for i, v in enumerate(col):
                data[i][j] = v
        return cls(rows, len(columns), data)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: dict) -> RatMatrix:
        data = [{} for _ in range(rows)]
        for (i, j), v in entries.items():
            data[i][j] = v
        return cls(rows, cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        return cls._wrap(rows, cols, [{} for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        one = Fraction(1)
        return cls._wrap(n, n, [{i: one} for i in range(n)])

    @classmethod
    def unit_vector(cls, n: int, i: int) -> RatMatrix:
        """Column vector ``e_i`` of length ``n``."""
        data = [{} for _ in range(n)]
        data[i][0] = Fraction(1)
        return cls._wrap(n, 1, data)

    @classmethod
    def column_vector(cls, values: Sequence) -> RatMatrix:
        return cls.from_columns([values], rows=len(values))

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {key} out of range for shape {self.shape}")
        return self._data[i].get(j, Fraction(0))

    def row_dict(self, i: int) -> dict:
        """Nonzero entries of row ``i`` as a fresh ``{col: value}`` dict."""
        return dict(self._data[i])

    def row(self, i: int) -> list[Fraction]:
        d = self._data[i]
        return [d.get(j, Fraction(0)) for j in range(self.cols)]

    def column(self, j: int) -> list[Fraction]:
        zero = Fraction(0)
        return [d.get(j, zero) for d in self._data]

    def column_dict(self, j: int) -> dict:
        return {i: d[j] for i, d in enumerate(self._data) if j in d}

    def columns(self) -> list[list[Fraction]]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def to_strings(self) -> list[list[str]]:
        """Row-major nested lists of rational literals, e.g. ``"3/2"``."""
        return [[str(v) for v in row] for row in self.tolist()]

    def entries(self) -> Iterable[tuple[int, int, Fraction]]:
        for i, d in enumerate(self._data):
            for j in sorted(d):
                yield i, j, d[j]

    @property
    def nnz(self) -> int:
        return sum(len(d) for d in self._data)

    def is_zero(self) -> bool:
        return not any(self._data)

    # -- algebra ------------------------------------------------------------

    @property
    def T(self) -> RatMatrix:
        data = [{} for _ in range(self.cols)]
        for i, d in enumerate(self._data):
            for j, v in d.items():
                data[j][i] = v
        return RatMatrix._wrap(self.cols, self.rows, data)

    def transpose(self) -> RatMatrix:
        return self.T

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        odata = other._data
        out = []
        for d in self._data:
            acc: dict = {}
            for k, a in d.items():
                for j, b in odata[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            out.append({j: v for j, v in acc.items() if v})
        return RatMatrix._wrap(self.rows, other.cols, out)

    def _combine(self, other: RatMatrix, sign: int) -> RatMatrix:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        out = []
        for a, b in zip(self._data, other._data):
            d = dict(a)
            for j, v in b.items():
                nv = d.get(j, 0) + sign * v
                if nv:
                    d[j] = nv
                else:
                    d.pop(j, None)
            out.append(d)
        return RatMatrix._wrap(self.rows, self.cols, out)

    def __add__(self, other: RatMatrix) -> RatMatrix:
        return self._combine(other, 1)

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        return self._combine(other, -1)

    def __neg__(self) -> RatMatrix:
        return RatMatrix._wrap(self.rows, self.cols, [{j: -v for j, v in d.items()} for d in self._data])

    def scale(self, q) -> RatMatrix:
        q = as_rational(q)
        if not q:
            return RatMatrix.zeros(self.rows, self.cols)
        return RatMatrix._wrap(self.rows, self.cols, [{j: q * v for j, v in d.items()} for d in self._data])

    def __mul__(self, q) -> RatMatrix:
        if isinstance(q, RatMatrix):
            raise TypeError("use @ for matrix products")
        return self.scale(q)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, tuple(self.entries())))
        return self._hash

    def __repr__(self) -> str:
        if self.rows * self.cols <= 400:
            body = "[" + ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in self.tolist()) + "]"
            return f"RatMatrix({body})"
        return f"RatMatrix(<{self.rows}x{self.cols}, nnz={self.nnz}>)"

    # -- slicing ------------------------------------------------------------

    def take_rows(self, indices: Sequence[int]) -> RatMatrix:
        return RatMatrix._wrap(len(indices), self.cols, [dict(self._data[i]) for i in indices])

    def take_columns(self, indices: Sequence[int]) -> RatMatrix:
        pos = {j: k for k, j in enumerate(indices)}
        if len(pos) != len(indices):
            # repeated columns: fall back to the general path
            return RatMatrix.from_columns([self.column(j) for j in indices], rows=self.rows)
        out = [{pos[j]: v for j, v in d.items() if j in pos} for d in self._data]
        return RatMatrix._wrap(self.rows, len(indices), out)


def hstack(*blocks: RatMatrix) -> RatMatrix:
    if not blocks:
        raise ValueError("nothing to stack")
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise ValueError("hstack needs equal row counts")
    out = [{} for _ in range(rows)]
    offset = 0
    for b in blocks:
        for i, d in enumerate(b._data):
            for j, v in d.items():
                out[i][offset + j] = v
        offset += b.cols
    return RatMatrix._wrap(rows, offset, out)


def vstack(*blocks: RatMatrix) -> RatMatrix:
    if not blocks:
        raise ValueError("nothing to stack")
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise ValueError("vstack needs equal column counts")
    out = [dict(d) for b in blocks for d in b._data]
    return RatMatrix._wrap(len(out), cols, out)


def kron(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Matrix of ``a (x) b`` under the ``i * dim + j`` index convention."""
    out = []
    for da in a._data:
        for db in b._data:
            row = {}
            for j, va in da.items():
                base = j * b.cols
                for l, vb in db.items():
                    row[base + l] = va * vb
            out.append(row)
    return RatMatrix._wrap(a.rows * b.rows, a.cols * b.cols, out)


# -- row reduction -------------------------------------------------------------


def _reduce_rows(rowdicts: Iterable[dict], ncols: int) -> list[tuple[int, dict]]:
    """Gauss-Jordan elimination on sparse rows.

    Returns ``(pivot_column, row)`` pairs in increasing pivot order; each row is
    normalised to 1 at its pivot and zero at every other pivot column.
    """
    rows = {i: dict(r) for i, r in enumerate(rowdicts) if r}
    colidx: dict[int, set] = defaultdict(set)
    for i, r in rows.items():
        for c in r:
            colidx[c].add(i)
    done: list[tuple[int, dict]] = []
    for c in range(ncols):
        if not rows:
            break
        cand = colidx.get(c)
        if not cand:
            continue
        pid = min(cand, key=lambda i: (len(rows[i]), i))
        prow = rows.pop(pid)
        for j in prow:
            colidx[j].discard(pid)
        inv = 1 / prow[c]
        if inv != 1:
            prow = {j: v * inv for j, v in prow.items()}
        for i in list(colidx[c]):
            row = rows[i]
            f = row[c]
            for j, v in prow.items():
                nv = row.get(j, 0) - f * v
                if nv:
                    if j not in row:
                        colidx[j].add(i)
                    row[j] = nv
                else:
                    if row.pop(j, None) is not None:
                        colidx[j].discard(i)
            if not row:
                del rows[i]
        for _, q in done:
            f = q.get(c)
            if f is None:
                continue
            for j, v in prow.items():
                nv = q.get(j, 0) - f * v
                if nv:
                    q[j] = nv
                else:
                    q.pop(j, None)
        done.append((c, prow))
    return done


def rref(m: RatMatrix) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form of ``m`` and its pivot columns."""
    done = _reduce_rows(m._data, m.cols)
    data = [row for _, row in done]
    data.extend({} for _ in range(m.rows - len(data)))
    return RatMatrix._wrap(m.rows, m.cols, data), [c for c, _ in done]


def rank(m: RatMatrix) -> int:
    return len(_reduce_rows(m._data, m.cols))


# -- subspaces -------------------------------------------------------------


@dataclass(frozen=True, eq=True)
class Subspace:
    """A linear subspace of Q^n given by a canonical basis.

    ``basis`` holds the basis vectors as columns in reduced column echelon
    form: column ``t`` has a 1 at coordinate ``pivots[t]`` and every other
    basis column vanishes there.  Two subspaces are equal exactly when their
    bases are identical matrices.
    """

    ambient_dim: int
    basis: RatMatrix

    def __post_init__(self):
        if self.basis.rows != self.ambient_dim:
            raise ValueError("basis rows must equal ambient dimension")

    @classmethod
    def span(cls, vectors: RatMatrix) -> Subspace:
        """Span of the columns of ``vectors``."""
        done = _reduce_rows(vectors.T._data, vectors.rows)
        cols = RatMatrix._wrap(len(done), vectors.rows, [row for _, row in done]).T
        return cls(vectors.rows, cols)

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, RatMatrix.zeros(n, 0))

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, RatMatrix.identity(n))

    @property
    def dim(self) -> int:
        return self.basis.cols

    @cached_property
    def _columns(self) -> list[dict]:
        return [self.basis.column_dict(j) for j in range(self.basis.cols)]

    @cached_property
    def pivots(self) -> list[int]:
        return [min(col) for col in self._columns]

    def residue(self, v: RatMatrix | dict) -> dict:
        """Reduce a vector modulo the subspace; zero iff ``v`` is a member.

        The residue vanishes on every pivot coordinate, so it doubles as the
        coordinate vector of the coset ``v + self`` on the complementary
        coordinates.
        """
        if isinstance(v, RatMatrix):
            if v.shape != (self.ambient_dim, 1):
                raise ValueError(f"expected a column vector of length {self.ambient_dim}")
            vec = v.column_dict(0)
        else:
            vec = dict(v)
        for t, p in enumerate(self.pivots):
            f = vec.get(p)
            if not f:
                continue
            for i, b in self._columns[t].items():
                nv = vec.get(i, 0) - f * b
                if nv:
                    vec[i] = nv
                else:
                    vec.pop(i, None)
        return vec

    def contains(self, v: RatMatrix | dict) -> bool:
        return not self.residue(v)

    __contains__ = contains

    def __le__(self, other: Subspace) -> bool:
        return subspace_leq(self, other)

    def __add__(self, other: Subspace) -> Subspace:
        return subspace_sum(self, other)


def _check_ambient(s: Subspace, t: Subspace) -> None:
    if s.ambient_dim != t.ambient_dim:
        raise ValueError(f"ambient dimensions differ: {s.ambient_dim} vs {t.ambient_dim}")


def subspace_leq(s: Subspace, t: Subspace) -> bool:
    _check_ambient(s, t)
    return all(not t.residue(col) for col in s._columns)


def subspace_sum(s: Subspace, t: Subspace) -> Subspace:
    _check_ambient(s, t)
    return Subspace.span(hstack(s.basis, t.basis))


def member(v: RatMatrix, s: Subspace) -> bool:
    return s.contains(v)


def image_basis(m: RatMatrix) -> Subspace:
    return Subspace.span(m)


def kernel_basis(m: RatMatrix) -> Subspace:
    """Null space of ``m`` as a subspace of Q^cols."""
    done = _reduce_rows(m._data, m.cols)
    pivots = {c for c, _ in done}
    vectors = []
    for f in range(m.cols):
        if f in pivots:
            continue
        vec = {f: Fraction(1)}
        for c, row in done:
            v = row.get(f)
            if v:
                vec[c] = -v
        vectors.append(vec)
    basis = RatMatrix._wrap(len(vectors), m.cols, vectors).T
    return Subspace.span(basis)


def solve_right(a: RatMatrix, b: RatMatrix) -> RatMatrix | None:
    """Return some ``x`` with ``a @ x == b``, or ``None`` if there is none.

    Free variables are set to zero, so the answer is deterministic.
    """
    if a.rows != b.rows:
        raise ValueError(f"row mismatch: {a.shape} vs {b.shape}")
    n = a.cols
    done = _reduce_rows(hstack(a, b)._data, n + b.cols)
    out = [{} for _ in range(n)]
    for c, row in done:
        if c >= n:
            return None
        out[c] = {j - n: v for j, v in row.items() if j >= n}
    return RatMatrix._wrap(n, b.cols, out)


def first_column_outside(a: RatMatrix, b: RatMatrix) -> int | None:
    """Index of the first column of ``b`` not in the column space of ``a``."""
    img = image_basis(a)
    for j in range(b.cols):
        if img.residue(b.column_dict(j)):
            return j
    return None
