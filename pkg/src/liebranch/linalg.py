"""Exact rational and integer linear algebra helpers.

Everything here works over Fraction or Python int; nothing ever touches
floating point.  The sparse routines use dict-of-keys storage because the
matrices they meet (representation matrices, invariance constraints) carry
a handful of nonzero entries per row.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import InternalConsistencyError


def invert_rational_matrix(rows):
    """Invert a square matrix given as a sequence of rows of ints/Fractions.

    Gauss-Jordan with exact pivots; raises if the matrix is singular.
    """
    n = len(rows)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise InternalConsistencyError("singular matrix has no inverse")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def solve_rational_system(rows, rhs):
    """Solve M x = rhs exactly for square nonsingular M; returns a tuple."""
    n = len(rows)
    aug = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise InternalConsistencyError("singular system in exact solve")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(aug[i][n] for i in range(n))


def rational_matrix_rank(rows):
    """Rank of a dense matrix of ints/Fractions via exact elimination."""
    work = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    row_at = 0
    for col in range(ncols):
        pivot = next((r for r in range(row_at, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[row_at], work[pivot] = work[pivot], work[row_at]
        inv = 1 / work[row_at][col]
        work[row_at] = [v * inv for v in work[row_at]]
        for r in range(len(work)):
            if r != row_at and work[r][col]:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[row_at])]
        rank += 1
        row_at += 1
        if row_at == len(work):
            break
    return rank


def _primitive(row):
    """Scale a sparse integer row so its entries are coprime, pivot positive."""
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


class SparseIntegerEliminator:
    """Incremental fraction-free Gaussian elimination over the integers.

    Rows are dicts mapping column index to a nonzero int.  The echelon
    basis keeps one primitive row per pivot column, so adding rows never
    grows entries beyond what cross-multiplication of two primitive rows
    produces.  Used both for rank computation and for nullspace extraction.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivot_rows = {}  # pivot column -> primitive integer row

    @property
    def rank(self):
        return len(self.pivot_rows)

    def add_row(self, row):
        """Reduce one sparse integer row; absorb it if independent."""
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            basis = self.pivot_rows.get(col)
            if basis is None:
                row = _primitive(row)
                if row[col] < 0:
                    row = {c: -v for c, v in row.items()}
                self.pivot_rows[col] = row
                return True
            a, b = basis[col], row[col]
            new = {}
            for c in set(row) | set(basis):
                v = a * row.get(c, 0) - b * basis.get(c, 0)
                if v:
                    new[c] = v
            row = _primitive(new)
        return False

    def nullspace(self):
        """Basis of the right nullspace, one Fraction vector per free column."""
        pivots = sorted(self.pivot_rows)
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for f in free:
            vec = {f: Fraction(1)}
            for p in reversed(pivots):
                row = self.pivot_rows[p]
                s = sum(row[c] * vec[c] for c in row if c != p and c in vec)
                if s:
                    vec[p] = Fraction(-s, row[p])
            basis.append(vec)
        return basis


def sparse_nullspace(rows, ncols):
    """Nullspace basis for a list of sparse integer rows."""
    elim = SparseIntegerEliminator(ncols)
    for row in rows:
        elim.add_row(row)
    return elim.nullspace()


def primitive_integer_vector(vec, ncols):
    """Clear denominators and common factors; first nonzero entry positive."""
    entries = sorted((c, v) for c, v in vec.items() if v)
    if not entries:
        raise InternalConsistencyError("cannot normalize the zero vector")
    lcm = 1
    for _, v in entries:
        d = Fraction(v).denominator
        lcm = lcm * d // gcd(lcm, d)
    ints = [(c, int(v * lcm)) for c, v in entries]
    g = 0
    for _, v in ints:
        g = gcd(g, v)
    ints = [(c, v // g) for c, v in ints]
    if ints[0][1] < 0:
        ints = [(c, -v) for c, v in ints]
    return dict(ints)


class RationalMatrix:
    """Immutable-by-convention sparse matrix over Fraction.

    Supports exactly the operations the representation code needs:
    addition, scaling, products, transpose, commutators, equality.
    """

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows, ncols, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                v = Fraction(v)
                if v:
                    self.entries[(i, j)] = v

    @classmethod
    def diagonal(cls, values):
        n = len(values)
        return cls(n, n, {(i, i): v for i, v in enumerate(values)})

    def __eq__(self, other):
        return (isinstance(other, RationalMatrix)
                and (self.nrows, self.ncols) == (other.nrows, other.ncols)
                and self.entries == other.entries)

    def __hash__(self):
        raise TypeError("RationalMatrix is unhashable")

    def is_zero(self):
        return not self.entries

    def nnz(self):
        return len(self.entries)

    def __add__(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return RationalMatrix(self.nrows, self.ncols, out)

    def __sub__(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k, 0) - v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return RationalMatrix(self.nrows, self.ncols, out)

    def scaled(self, factor):
        factor = Fraction(factor)
        return RationalMatrix(self.nrows, self.ncols,
                              {k: factor * v for k, v in self.entries.items()})

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in sparse product")
        by_row = {}
        for (i, j), v in other.entries.items():
            by_row.setdefault(i, []).append((j, v))
        out = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                key = (i, j)
                s = out.get(key, 0) + a * b
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return RationalMatrix(self.nrows, other.ncols, out)

    def transpose(self):
        return RationalMatrix(self.ncols, self.nrows,
                              {(j, i): v for (i, j), v in self.entries.items()})

    def row(self, i):
        return {j: v for (r, j), v in self.entries.items() if r == i}

    def to_dense(self):
        dense = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            dense[i][j] = v
        return dense


def commutator(a, b):
    return a @ b - b @ a
