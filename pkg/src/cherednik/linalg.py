"""Exact linear algebra over the rationals.

Matrices are lists of rows of ``Fraction``.  Vectors are lists.  A matrix of
shape (p, q) acts on column vectors of length q.  :class:`Subspace` keeps a
row space in reduced row echelon form, so equality of subspaces is equality
of their stored rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

import flint

Vector = List[Fraction]
Matrix = List[List[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)

# above these sizes the work is handed to FLINT
_FLINT_RREF_CELLS = 400
_FLINT_MATMUL_OPS = 20000


def to_flint(a: Sequence[Sequence[Fraction]], ncols: int) -> "flint.fmpq_mat":
    flat = []
    for row in a:
        for x in row:
            flat.append(flint.fmpq(x.numerator, x.denominator) if x else 0)
    return flint.fmpq_mat(len(a), ncols, flat)


def from_flint(m: "flint.fmpq_mat", nrows: int | None = None) -> Matrix:
    rows = m.nrows() if nrows is None else nrows
    cols = m.ncols()
    entries = m.entries()
    out = []
    for i in range(rows):
        row = []
        for x in entries[i * cols:(i + 1) * cols]:
            p = int(x.p)
            row.append(Fraction(p, int(x.q)) if p else ZERO)
        out.append(row)
    return out


def zeros(p: int, q: int) -> Matrix:
    return [[ZERO] * q for _ in range(p)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def to_fraction_matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[x if isinstance(x, Fraction) else Fraction(x) for x in row] for row in rows]


def transpose(a: Matrix, ncols: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def matmul(a: Matrix, b: Matrix, inner: int | None = None, cols: int | None = None) -> Matrix:
    """Product a*b; ``cols`` is needed only when b has no rows."""
    if not b:
        q = cols or 0
        return [[ZERO] * q for _ in a]
    q = len(b[0])
    if a and len(a) * len(b) * q >= _FLINT_MATMUL_OPS:
        return from_flint(to_flint(a, len(b)) * to_flint(b, q))
    out = []
    for row in a:
        acc = [ZERO] * q
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j in range(q):
                    y = brow[j]
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def matvec(a: Matrix, v: Sequence[Fraction]) -> Vector:
    nz = [(k, x) for k, x in enumerate(v) if x]
    out = []
    for row in a:
        s = ZERO
        for k, x in nz:
            y = row[k]
            if y:
                s += y * x
        out.append(s)
    return out


def vecmat(v: Sequence[Fraction], a: Matrix, cols: int) -> Vector:
    acc = [ZERO] * cols
    for k, x in enumerate(v):
        if x:
            row = a[k]
            for j in range(cols):
                y = row[j]
                if y:
                    acc[j] += x * y
    return acc


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matscale(a: Matrix, c) -> Matrix:
    c = Fraction(c)
    return [[x * c for x in row] for row in a]


def is_zero_matrix(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form of the row space; zero rows are dropped."""
    work = [list(r) for r in rows if any(r)]
    if len(work) * ncols >= _FLINT_RREF_CELLS:
        red, rk = to_flint(work, ncols).rref()
        out = from_flint(red, rk)
        return out, [next(j for j, x in enumerate(r) if x) for r in out]
    pivots: List[int] = []
    out: Matrix = []
    col = 0
    for col in range(ncols):
        if not work:
            break
        pr = None
        for idx, r in enumerate(work):
            if r[col]:
                pr = idx
                break
        if pr is None:
            continue
        prow = work.pop(pr)
        inv = ONE / prow[col]
        prow = [x * inv if x else ZERO for x in prow]
        nzp = [j for j in range(col, ncols) if prow[j]]
        for r in work:
            f = r[col]
            if f:
                for j in nzp:
                    r[j] -= f * prow[j]
        for r in out:
            f = r[col]
            if f:
                for j in nzp:
                    r[j] -= f * prow[j]
        work = [r for r in work if any(r)]
        out.append(prow)
        pivots.append(col)
    return out, pivots


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    return len(rref(rows, ncols)[0])


def nullspace(a: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    """Basis (as rows) of {v : a v = 0}."""
    r, piv = rref(a, ncols)
    free = [j for j in range(ncols) if j not in set(piv)]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(r, piv):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis


def solve_left(basis: Matrix, v: Sequence[Fraction], ncols: int):
    """Coefficients a with sum a_i basis_i = v, or None."""
    k = len(basis)
    aug = [list(basis[i]) + [ONE if j == i else ZERO for j in range(k)] for i in range(k)]
    red, piv = rref(aug, ncols + k)
    vv = list(v) + [ZERO] * k
    for row, p in zip(red, piv):
        if p >= ncols:
            break
        f = vv[p]
        if f:
            for j in range(ncols + k):
                if row[j]:
                    vv[j] -= f * row[j]
    if any(vv[:ncols]):
        return None
    return [-x for x in vv[ncols:]]


class Subspace:
    """A subspace of Q^dim held as canonical RREF rows."""

    __slots__ = ("dim", "rows", "pivots")

    def __init__(self, dim: int, rows: Iterable[Sequence[Fraction]] = (), *, reduced: bool = False):
        self.dim = dim
        if reduced:
            self.rows = [list(r) for r in rows]
            self.pivots = [next(j for j, x in enumerate(r) if x) for r in self.rows]
        else:
            self.rows, self.pivots = rref(list(rows), dim)

    @classmethod
    def zero(cls, dim: int) -> "Subspace":
        return cls(dim, [], reduced=True)

    @classmethod
    def full(cls, dim: int) -> "Subspace":
        return cls(dim, identity(dim), reduced=True)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """Remainder of v after eliminating pivot coordinates."""
        w = list(v)
        for row, p in zip(self.rows, self.pivots):
            f = w[p]
            if f:
                for j in range(p, self.dim):
                    if row[j]:
                        w[j] -= f * row[j]
        return w

    def contains(self, v: Sequence[Fraction]) -> bool:
        return not any(self.reduce(v))

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.dim == other.dim and self.rows == other.rows

    def __hash__(self):
        return hash((self.dim, tuple(tuple(r) for r in self.rows)))

    def __add__(self, other: "Subspace") -> "Subspace":
        if not other.rows:
            return self
        if not self.rows:
            return other
        extra = [self.reduce(r) for r in other.rows]
        extra = [r for r in extra if any(r)]
        if not extra:
            return self
        return Subspace(self.dim, self.rows + extra)

    def annihilator(self) -> Matrix:
        """Rows k spanning {k : r.k = 0 for all rows r}."""
        return nullspace(self.rows, self.dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        if not self.rows or not other.rows:
            return Subspace.zero(self.dim)
        if len(other.rows) == self.dim:
            return self
        if len(self.rows) == self.dim:
            return other
        ann = other.annihilator()
        # combinations a of self.rows with (a . rows) . ann = 0
        m = matmul(self.rows, transpose(ann))  # dimS x codim
        coeffs = nullspace(transpose(m), len(self.rows))
        vecs = [vecmat(a, self.rows, self.dim) for a in coeffs]
        return Subspace(self.dim, vecs)

    def complement_in(self, other: "Subspace") -> List[Vector]:
        """Rows of ``other`` that extend self to self + other."""
        out = []
        acc = self
        for r in other.rows:
            if not acc.contains(r):
                out.append(r)
                acc = acc + Subspace(self.dim, [r])
        return out

    def image(self, mat: Matrix, target_dim: int) -> "Subspace":
        return Subspace(target_dim, [matvec(mat, r) for r in self.rows])

    def preimage(self, mat: Matrix) -> "Subspace":
        """{v : mat v in self}; mat has shape (self.dim, source_dim)."""
        src = len(mat[0]) if mat else 0
        if not mat:
            return Subspace.full(src)
        ann = self.annihilator()
        if not ann:
            return Subspace.full(src)
        cond = matmul(ann, mat)
        return Subspace(src, nullspace(cond, src))

    def orthogonal(self, gram: Matrix) -> "Subspace":
        """{w : s^T G w = 0 for s in self}."""
        if not self.rows:
            return Subspace.full(self.dim)
        cond = [vecmat(r, gram, self.dim) for r in self.rows]
        return Subspace(self.dim, nullspace(cond, self.dim))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, rank={self.rank})"


def span(dim: int, vectors: Iterable[Sequence[Fraction]]) -> Subspace:
    return Subspace(dim, list(vectors))


def kernel(mat: Matrix, ncols: int) -> Subspace:
    return Subspace(ncols, nullspace(mat, ncols))


def column_space(mat: Matrix, nrows: int) -> Subspace:
    return Subspace(nrows, transpose(mat) if mat and mat[0] else [])
