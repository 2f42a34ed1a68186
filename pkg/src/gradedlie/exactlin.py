"""Exact linear algebra over the rationals.

Everything here works with :class:`fractions.Fraction` entries.  Matrices are
dense and immutable; subspaces are stored by their reduced row echelon basis,
so two subspaces are equal exactly when their bases are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "Matrix",
    "Subspace",
    "InconsistentSystemError",
    "Echelon",
    "rref",
    "kernel_basis",
    "solve",
    "rational_to_str",
    "rational_from_str",
]


class InconsistentSystemError(ValueError):
    """Raised by :func:`solve` when ``rank([m|rhs]) > rank(m)``."""


def rational_to_str(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    return Fraction(str(s).strip())


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(Fraction(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        out = []
        ocols = [other.column(j) for j in range(other.cols)]
        for i in range(self.rows):
            r = self.row(i)
            out.append([sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in ocols])
        return Matrix.from_rows(out, other.cols)

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return tuple(
            sum((a * b for a, b in zip(self.row(i), v) if a and b), Fraction(0))
            for i in range(self.rows)
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def rank(self) -> int:
        return rref(self)[1]


class Echelon:
    """Incrementally maintained reduced row echelon form of sparse rows.

    Rows are dicts ``{column: Fraction}``.  After every :meth:`add` the stored
    rows are fully reduced, so the final state is the unique RREF of the span
    of everything added.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivot_rows: dict[int, dict[int, Fraction]] = {}

    def __len__(self):
        return len(self.pivot_rows)

    def reduce(self, row: dict) -> dict:
        # stored rows vanish on each other's pivots, so one pass suffices
        row = {c: Fraction(v) for c, v in row.items() if v}
        for c in sorted(set(row) & self.pivot_rows.keys()):
            coef = row.get(c)
            if not coef:
                continue
            for cc, vv in self.pivot_rows[c].items():
                nv = row.get(cc, 0) - coef * vv
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        return row

    def add(self, row: dict) -> bool:
        """Add a row; return True when it enlarged the row space."""
        row = self.reduce(row)
        if not row:
            return False
        piv = min(row)
        inv = 1 / row[piv]
        row = {c: v * inv for c, v in row.items()}
        for other in self.pivot_rows.values():
            coef = other.get(piv)
            if coef:
                for cc, vv in row.items():
                    nv = other.get(cc, 0) - coef * vv
                    if nv:
                        other[cc] = nv
                    else:
                        other.pop(cc, None)
        self.pivot_rows[piv] = row
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.pivot_rows)

    def dense_rows(self) -> list[list[Fraction]]:
        out = []
        for p in self.pivots:
            r = [Fraction(0)] * self.ncols
            for c, v in self.pivot_rows[p].items():
                r[c] = v
            out.append(r)
        return out

    def kernel_vectors(self) -> list[dict[int, Fraction]]:
        """Basis of the null space of the stored rows, one vector per free column."""
        free = [c for c in range(self.ncols) if c not in self.pivot_rows]
        free_set = set(free)
        basis = {f: {f: Fraction(1)} for f in free}
        for p, row in self.pivot_rows.items():
            for c, v in row.items():
                if c in free_set:
                    basis[c][p] = -v
        return [basis[f] for f in free]


def _sparse(row: Iterable) -> dict:
    return {j: Fraction(v) for j, v in enumerate(row) if v}


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Return ``(R, rank, pivots)`` with ``R`` the reduced row echelon form of ``m``.

    ``R`` has the same shape as ``m``; zero rows are at the bottom.
    """
    ech = Echelon(m.cols)
    for i in range(m.rows):
        ech.add(_sparse(m.row(i)))
    rows = ech.dense_rows()
    rank = len(rows)
    rows += [[Fraction(0)] * m.cols for _ in range(m.rows - rank)]
    return Matrix.from_rows(rows, m.cols), rank, ech.pivots


def kernel_basis(m: Matrix) -> "Subspace":
    ech = Echelon(m.cols)
    for i in range(m.rows):
        ech.add(_sparse(m.row(i)))
    return Subspace.from_sparse(ech.kernel_vectors(), m.cols)


def solve(m: Matrix, rhs: Sequence) -> tuple:
    """One exact solution of ``m x = rhs`` with every free variable set to zero."""
    if len(rhs) != m.rows:
        raise ValueError("rhs length must equal the number of rows")
    n = m.cols
    ech = Echelon(n + 1)
    for i in range(m.rows):
        row = _sparse(m.row(i))
        if rhs[i]:
            row[n] = Fraction(rhs[i])
        ech.add(row)
    if n in ech.pivot_rows:
        raise InconsistentSystemError("system is inconsistent")
    x = [Fraction(0)] * n
    for p, row in ech.pivot_rows.items():
        x[p] = row.get(n, Fraction(0))
    x = tuple(x)
    if m.apply(x) != tuple(Fraction(v) for v in rhs):
        raise ArithmeticError("back substitution failed")  # pragma: no cover
    return x


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim, stored by its RREF basis."""

    ambient_dim: int
    basis: Matrix

    def __post_init__(self):
        if self.basis.cols != self.ambient_dim:
            raise ValueError("basis width must equal ambient_dim")

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        ech = Echelon(ambient_dim)
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("vector length differs from ambient_dim")
            ech.add(_sparse(v))
        return cls._from_echelon(ech)

    @classmethod
    def from_sparse(cls, vectors: Iterable[dict], ambient_dim: int) -> "Subspace":
        ech = Echelon(ambient_dim)
        for v in vectors:
            ech.add(v)
        return cls._from_echelon(ech)

    @classmethod
    def _from_echelon(cls, ech: Echelon) -> "Subspace":
        rows = ech.dense_rows()
        return cls(ech.ncols, Matrix.from_rows(rows, ech.ncols) if rows else Matrix.zeros(0, ech.ncols))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, Matrix.zeros(0, n))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n))

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def vectors(self) -> list[tuple]:
        return [self.basis.row(i) for i in range(self.dim)]

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(r) if x) for r in self.vectors]

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(
                f"ambient dimension mismatch: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise ValueError("vector length differs from ambient_dim")
        ech = Echelon(self.ambient_dim)
        for r in self.vectors:
            ech.add(_sparse(r))
        return ech.contains(_sparse(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains(v) for v in other.vectors)

    def coordinates(self, v: Sequence) -> tuple:
        """Coordinates of ``v`` in the RREF basis; raises if ``v`` is outside."""
        piv = self.pivots
        coords = tuple(Fraction(v[p]) for p in piv)
        recon = [Fraction(0)] * self.ambient_dim
        for c, r in zip(coords, self.vectors):
            if c:
                for j, x in enumerate(r):
                    if x:
                        recon[j] += c * x
        if tuple(recon) != tuple(Fraction(x) for x in v):
            raise ValueError("vector is not in the subspace")
        return coords

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.vectors + other.vectors, self.ambient_dim)

    def annihilator(self) -> "Subspace":
        """Linear functionals (as row vectors) vanishing on this subspace."""
        if self.dim == 0:
            return Subspace.full(self.ambient_dim)
        return kernel_basis(self.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        rows = self.annihilator().vectors + other.annihilator().vectors
        if not rows:
            return Subspace.full(self.ambient_dim)
        return kernel_basis(Matrix.from_rows(rows, self.ambient_dim))

    def quotient_map(self) -> tuple[Matrix, "Subspace"]:
        """Projection ``Q^n -> Q^n / self`` and the complement spanned by non-pivot unit vectors.

        Coordinates in the quotient are taken with respect to the images of the
        complement basis.
        """
        n = self.ambient_dim
        piv = self.pivots
        pset = set(piv)
        free = [c for c in range(n) if c not in pset]
        rows = []
        for c in free:
            r = [Fraction(0)] * n
            r[c] = Fraction(1)
            for p, br in zip(piv, self.vectors):
                r[p] = -br[c]
            rows.append(r)
        proj = Matrix.from_rows(rows, n) if rows else Matrix.zeros(0, n)
        comp = Subspace.span(
            [[Fraction(int(j == c)) for j in range(n)] for c in free], n
        )
        return proj, comp

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis.entries))
