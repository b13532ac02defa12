"""Finite-dimensional coalgebras over Q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .exactlinalg import RatMatrix, as_rational, kron
from .validation import MalformedError, ValidationReport


def tensor_names(left: Sequence[str], right: Sequence[str]) -> list[str]:
    """Basis labels of a tensor product, in index order."""
    return [f"{a}*{b}" for a in left for b in right]


def format_vector(vec: RatMatrix | dict, names: Sequence[str]) -> str:
    """Render a column vector as ``2 x*y - 1/2 z`` style text."""
    if isinstance(vec, RatMatrix):
        vec = vec.column_dict(0)
    if not vec:
        return "0"
    out = ""
    for i in sorted(vec):
        q = vec[i]
        sign = "-" if q < 0 else "+"
        mag = abs(q)
        term = names[i] if mag == 1 else f"{mag} {names[i]}"
        if not out:
            out = f"-{term}" if sign == "-" else term
        else:
            out += f" {sign} {term}"
    return out


def flip(n: int, m: int) -> RatMatrix:
    """Permutation matrix of ``v (x) w -> w (x) v`` for ``dim V = n``, ``dim W = m``."""
    one = Fraction(1)
    data = [{} for _ in range(n * m)]
    for i in range(n):
        for j in range(m):
            data[j * n + i][i * m + j] = one
    return RatMatrix._wrap(n * m, n * m, data)


@dataclass(frozen=True)
class Coalgebra:
    """Coalgebra with comultiplication ``delta`` (n^2 x n) and counit ``eps`` (1 x n).

    Column ``j`` of ``delta`` is the coproduct of the ``j``-th basis element.
    Basis names are labels only.
    """

    basis_names: tuple[str, ...]
    delta: RatMatrix
    eps: RatMatrix

    def __post_init__(self):
        object.__setattr__(self, "basis_names", tuple(self.basis_names))
        n = len(self.basis_names)
        if n == 0:
            raise MalformedError("a coalgebra needs at least one basis element")
        if len(set(self.basis_names)) != n:
            raise MalformedError("duplicate basis names")
        if self.delta.shape != (n * n, n):
            raise MalformedError(f"delta must be {n * n}x{n}, got {self.delta.rows}x{self.delta.cols}")
        if self.eps.shape != (1, n):
            raise MalformedError(f"eps must be 1x{n}, got {self.eps.rows}x{self.eps.cols}")

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def index(self, name: str) -> int:
        return self.basis_names.index(name)

    def identity(self) -> RatMatrix:
        return RatMatrix.identity(self.dim)

    @classmethod
    def from_tables(
        cls,
        names: Sequence[str],
        coproducts: Mapping[str, Sequence[tuple]],
        counits: Mapping[str, object],
    ) -> Coalgebra:
        """Build from ``{name: [(coef, left, right), ...]}`` and ``{name: value}``.

        >>> c = Coalgebra.from_tables("ab", {"a": [(1, "a", "a")], "b": [(1, "b", "b")]},
        ...                           {"a": 1, "b": 1})
        >>> c.dim
        2
        """
        names = list(names)
        n = len(names)
        pos = {x: i for i, x in enumerate(names)}
        entries: dict = {}
        for x in names:
            if x not in coproducts:
                raise MalformedError(f"no coproduct given for {x!r}")
            for coef, a, b in coproducts[x]:
                key = (pos[a] * n + pos[b], pos[x])
                entries[key] = entries.get(key, 0) + as_rational(coef)
        missing = [x for x in names if x not in counits]
        if missing:
            raise MalformedError(f"no counit given for {missing[0]!r}")
        eps = RatMatrix.from_rows([[counits[x] for x in names]])
        return cls(tuple(names), RatMatrix.from_entries(n * n, n, entries), eps)


def validate_coalgebra(c: Coalgebra) -> ValidationReport:
    n = c.dim
    ident = RatMatrix.identity(n)
    report = ValidationReport(f"coalgebra of dim {n}")
    lhs = kron(c.delta, ident) @ c.delta
    rhs = kron(ident, c.delta) @ c.delta
    report.checks["coassociativity"] = lhs == rhs
    left = kron(c.eps, ident) @ c.delta
    right = kron(ident, c.eps) @ c.delta
    report.checks["left_counit"] = left == ident
    report.checks["right_counit"] = right == ident
    for key, mat in (("left_counit", left), ("right_counit", right)):
        if not report.checks[key]:
            j = next(j for j in range(n) if mat.column(j) != ident.column(j))
            report.notes[key] = (
                f"on {c.basis_names[j]}: got {format_vector(mat.column_dict(j), c.basis_names)}"
            )
    if not report.checks["coassociativity"]:
        diff = lhs - rhs
        j = next(j for j in range(n) if diff.column_dict(j))
        report.notes["coassociativity"] = f"fails on {c.basis_names[j]}"
    return report


def is_cocommutative(c: Coalgebra) -> bool:
    return flip(c.dim, c.dim) @ c.delta == c.delta


def grouplike_coalgebra(names: Sequence[str]) -> Coalgebra:
    """Coalgebra spanned by grouplikes: ``delta(x) = x*x``, ``eps(x) = 1``."""
    names = [str(x) for x in names]
    return Coalgebra.from_tables(
        names, {x: [(1, x, x)] for x in names}, {x: 1 for x in names}
    )


def matrix_coalgebra(k: int) -> Coalgebra:
    """Dual of the k x k matrix algebra: ``delta(e_ij) = sum_l e_il * e_lj``."""
    names = [f"e{i}{j}" for i in range(k) for j in range(k)]
    coproducts = {
        f"e{i}{j}": [(1, f"e{i}{l}", f"e{l}{j}") for l in range(k)]
        for i in range(k)
        for j in range(k)
    }
    counits = {f"e{i}{j}": int(i == j) for i in range(k) for j in range(k)}
    return Coalgebra.from_tables(names, coproducts, counits)


def divided_power_coalgebra(k: int) -> Coalgebra:
    """Truncated divided powers ``d0..d{k-1}``: ``delta(d_n) = sum d_i * d_{n-i}``."""
    names = [f"d{i}" for i in range(k)]
    coproducts = {f"d{n}": [(1, f"d{i}", f"d{n - i}") for i in range(n + 1)] for n in range(k)}
    counits = {f"d{n}": int(n == 0) for n in range(k)}
    return Coalgebra.from_tables(names, coproducts, counits)
