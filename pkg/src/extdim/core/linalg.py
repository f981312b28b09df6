"""Dense exact matrices over a :class:`~extdim.core.field.Field`.

Shapes are explicit so that 0 x n and n x 0 matrices (zero vector spaces at a
vertex) behave.  Matrices are treated as immutable values.
"""
from __future__ import annotations

from typing import Iterable, Sequence


class Matrix:
    __slots__ = ("F", "nrows", "ncols", "rows")

    def __init__(self, F, nrows: int, ncols: int, rows=None):
        self.F = F
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            z = F.zero
            rows = [[z] * ncols for _ in range(nrows)]
        self.rows = rows

    # -- constructors ---------------------------------------------------------
    @classmethod
    def from_rows(cls, F, rows: Sequence[Sequence], ncols: int | None = None):
        rows = [[F(x) for x in r] for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix rows")
        return cls(F, len(rows), ncols, rows)

    @classmethod
    def zeros(cls, F, nrows, ncols):
        return cls(F, nrows, ncols)

    @classmethod
    def identity(cls, F, n):
        m = cls(F, n, n)
        for i in range(n):
            m.rows[i][i] = F.one
        return m

    @classmethod
    def from_columns(cls, F, cols: Sequence[Sequence], nrows: int):
        rows = [[c[i] for c in cols] for i in range(nrows)]
        return cls(F, nrows, len(cols), rows)

    # -- basic access ---------------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self.rows]

    def columns(self):
        return [[r[j] for r in self.rows] for j in range(self.ncols)]

    def copy(self):
        return Matrix(self.F, self.nrows, self.ncols, [list(r) for r in self.rows])

    def __repr__(self):
        body = "; ".join(" ".join(self.F.to_str(x) for x in r) for r in self.rows)
        return f"Matrix{self.shape}[{body}]"

    def __eq__(self, other):
        if not isinstance(other, Matrix) or self.shape != other.shape:
            return NotImplemented if not isinstance(other, Matrix) else False
        return all(a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def is_identity(self) -> bool:
        if self.nrows != self.ncols:
            return False
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if (x != 1) if i == j else x:
                    return False
        return True

    # -- arithmetic -----------------------------------------------------------
    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        F = self.F
        z = F.zero
        cols = other.columns()
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            if not nz:
                out.append([z] * other.ncols)
                continue
            row = []
            for c in cols:
                s = z
                for k, a in nz:
                    b = c[k]
                    if b:
                        s = s + a * b
                row.append(s)
            out.append(row)
        return Matrix(F, self.nrows, other.ncols, out)

    def __add__(self, other):
        self._same(other)
        return Matrix(self.F, self.nrows, self.ncols,
                      [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._same(other)
        return Matrix(self.F, self.nrows, self.ncols,
                      [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix(self.F, self.nrows, self.ncols, [[-a for a in r] for r in self.rows])

    def scale(self, c):
        return Matrix(self.F, self.nrows, self.ncols, [[c * a for a in r] for r in self.rows])

    def _same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    @property
    def T(self):
        return Matrix(self.F, self.ncols, self.nrows,
                      [[r[j] for r in self.rows] for j in range(self.ncols)])

    def apply(self, v: Sequence):
        z = self.F.zero
        out = []
        for r in self.rows:
            s = z
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return out

    def flat(self):
        return [x for r in self.rows for x in r]

    # -- slicing / stacking ---------------------------------------------------
    def submatrix(self, rows: Iterable[int], cols: Iterable[int]):
        rows = list(rows)
        cols = list(cols)
        return Matrix(self.F, len(rows), len(cols), [[self.rows[i][j] for j in cols] for i in rows])

    def select_columns(self, cols):
        return self.submatrix(range(self.nrows), cols)

    def select_rows(self, rows):
        return self.submatrix(rows, range(self.ncols))

    @staticmethod
    def hstack(F, nrows, mats):
        rows = [[] for _ in range(nrows)]
        ncols = 0
        for m in mats:
            if m.nrows != nrows:
                raise ValueError("hstack row mismatch")
            for r, mr in zip(rows, m.rows):
                r.extend(mr)
            ncols += m.ncols
        return Matrix(F, nrows, ncols, rows)

    @staticmethod
    def vstack(F, ncols, mats):
        rows = []
        for m in mats:
            if m.ncols != ncols:
                raise ValueError("vstack column mismatch")
            rows.extend(list(r) for r in m.rows)
        return Matrix(F, len(rows), ncols, rows)

    @staticmethod
    def block_diag(F, mats):
        nr = sum(m.nrows for m in mats)
        nc = sum(m.ncols for m in mats)
        out = Matrix(F, nr, nc)
        r0 = c0 = 0
        for m in mats:
            for i, row in enumerate(m.rows):
                out.rows[r0 + i][c0:c0 + m.ncols] = row
            r0 += m.nrows
            c0 += m.ncols
        return out

    # -- elimination ----------------------------------------------------------
    def rref(self):
        """Reduced row echelon form; returns ``(R, pivot_columns)``."""
        rows, piv = rref_rows([list(r) for r in self.rows], self.ncols)
        return Matrix(self.F, len(rows), self.ncols, rows), piv

    def rank(self) -> int:
        return len(rref_rows([list(r) for r in self.rows], self.ncols)[1])

    def nullspace(self):
        """Basis (list of column vectors) of ``{x : self @ x = 0}``."""
        return nullspace_rows(self.F, self.rows, self.ncols)

    def left_nullspace(self):
        return nullspace_rows(self.F, self.T.rows, self.nrows)

    def column_space(self):
        """A basis of the column space, chosen among the columns themselves."""
        _, piv = self.rref()
        return [self.column(j) for j in piv]

    def solve(self, B: "Matrix"):
        """Some ``X`` with ``self @ X == B``, or ``None`` when inconsistent."""
        if B.nrows != self.nrows:
            raise ValueError("solve shape mismatch")
        F = self.F
        n = self.ncols
        aug = [list(a) + list(b) for a, b in zip(self.rows, B.rows)]
        rows, piv = rref_rows(aug, n + B.ncols, stop=n)
        X = Matrix(F, n, B.ncols)
        for r, p in zip(rows, piv):
            if p >= n:
                return None
            X.rows[p] = r[n:]
        for r in rows[len(piv):]:
            if any(r[n:]):
                return None
        return X

    def inverse(self):
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        X = self.solve(Matrix.identity(self.F, self.nrows))
        if X is None or self.rank() < self.nrows:
            raise ZeroDivisionError("singular matrix")
        return X

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def power(self, k: int):
        out = Matrix.identity(self.F, self.nrows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out


def rref_rows(rows: list, ncols: int, stop: int | None = None):
    """In-place Gauss-Jordan on a list of row lists.

    Only columns ``< stop`` are used as pivots.  Returns ``(nonzero_rows_first,
    pivots)``: the first ``len(pivots)`` rows are the pivot rows.
    """
    if stop is None:
        stop = ncols
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(stop):
        if r >= nrows:
            break
        p = None
        for i in range(r, nrows):
            if rows[i][c]:
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        inv = 1 / pr[c]
        if pr[c] != 1:
            pr = [x * inv if x else x for x in pr]
            rows[r] = pr
        nzc = [j for j in range(c, ncols) if pr[j]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for j in nzc:
                        ri[j] = ri[j] - f * pr[j]
        pivots.append(c)
        r += 1
    return rows, pivots


def nullspace_rows(F, rows, ncols):
    R, piv = rref_rows([list(r) for r in rows], ncols)
    pivset = set(piv)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for f in free:
        v = [F.zero] * ncols
        v[f] = F.one
        for i, p in enumerate(piv):
            x = R[i][f]
            if x:
                v[p] = -x
        basis.append(v)
    return basis


def span_basis(F, vectors, dim):
    """Row-reduced basis of the span of ``vectors`` (each of length ``dim``)."""
    rows, piv = rref_rows([list(v) for v in vectors], dim)
    return rows[:len(piv)], piv


def coordinates_in(F, basis_rows, pivots, v):
    """Coordinates of ``v`` in an RREF basis, or ``None`` if ``v`` is outside the span."""
    coeffs = [v[p] for p in pivots]
    w = list(v)
    for c, row in zip(coeffs, basis_rows):
        if c:
            for j, x in enumerate(row):
                if x:
                    w[j] = w[j] - c * x
    if any(w):
        return None
    return coeffs


def complement_basis(F, sub_vectors, dim):
    """Unit vectors completing a basis of span(sub_vectors) to the whole space."""
    _, piv = span_basis(F, sub_vectors, dim)
    ps = set(piv)
    out = []
    for j in range(dim):
        if j not in ps:
            v = [F.zero] * dim
            v[j] = F.one
            out.append(v)
    return out


def extend_to_basis(F, sub_vectors, ambient_vectors, dim):
    """Pick vectors of ``ambient_vectors`` completing a basis of sub -> ambient span."""
    rows = [list(v) for v in sub_vectors]
    _, piv = rref_rows([list(v) for v in rows], dim)
    base = len(piv)
    chosen = []
    cur = [list(v) for v in sub_vectors]
    for v in ambient_vectors:
        trial = cur + [list(v)]
        _, p = rref_rows([list(x) for x in trial], dim)
        if len(p) > base:
            cur = trial
            base = len(p)
            chosen.append(list(v))
    return chosen


class CoordinateSolver:
    """Coordinates with respect to linearly independent column vectors.

    ``coords(v)`` returns ``c`` with ``sum c_i * cols[i] == v`` or ``None`` when
    ``v`` is outside the span.
    """

    def __init__(self, F, cols, dim):
        self.F = F
        self.cols = [list(c) for c in cols]
        self.dim = dim
        k = len(self.cols)
        # rows of the n x k matrix; pick k independent rows
        _, rows_sel = rref_rows([list(c) for c in self.cols], dim)
        if len(rows_sel) != k:
            raise ValueError("columns are linearly dependent")
        self.sel = rows_sel
        sub = Matrix(F, k, k, [[self.cols[j][i] for j in range(k)] for i in rows_sel])
        self.inv = sub.inverse() if k else Matrix(F, 0, 0)

    def coords(self, v, check=True):
        c = self.inv.apply([v[i] for i in self.sel])
        if check:
            w = list(v)
            for a, col in zip(c, self.cols):
                if a:
                    for i, x in enumerate(col):
                        if x:
                            w[i] = w[i] - a * x
            if any(w):
                return None
        return c
