"""Exact integer and rational linear algebra.

Sparse integer matrices, integer/rational rank, exact solving, Smith normal
form, and lattice annihilator exponents.  No floating point anywhere: every
verification path in this package runs through here or through plain ints.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


class BudgetExceeded(Exception):
    """Internal: a sparse product grew past its nnz budget."""


class SparseIntMatrix:
    """Square sparse integer matrix stored as one {col: value} dict per row.

    Zero entries are never stored, so dict equality is matrix equality.
    """

    __slots__ = ("size", "rows")

    def __init__(self, size, rows=None):
        self.size = size
        self.rows = [dict() for _ in range(size)] if rows is None else rows

    @classmethod
    def identity(cls, size):
        return cls(size, [{i: 1} for i in range(size)])

    @classmethod
    def from_dense(cls, dense):
        rows = [{j: v for j, v in enumerate(row) if v} for row in dense]
        return cls(len(rows), rows)

    def copy(self):
        return SparseIntMatrix(self.size, [dict(r) for r in self.rows])

    def entry(self, i, j):
        return self.rows[i].get(j, 0)

    def nnz(self):
        return sum(len(r) for r in self.rows)

    def is_zero(self):
        return all(not r for r in self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, SparseIntMatrix)
            and self.size == other.size
            and self.rows == other.rows
        )

    def __add__(self, other):
        if self.size != other.size:
            raise ValueError("size mismatch")
        rows = []
        for ra, rb in zip(self.rows, other.rows):
            acc = dict(ra)
            for j, v in rb.items():
                w = acc.get(j, 0) + v
                if w:
                    acc[j] = w
                elif j in acc:
                    del acc[j]
            rows.append(acc)
        return SparseIntMatrix(self.size, rows)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        if c == 0:
            return SparseIntMatrix(self.size)
        return SparseIntMatrix(self.size, [{j: c * v for j, v in r.items()} for r in self.rows])

    def shifted(self, c):
        """self + c * identity."""
        out = self.copy()
        if c:
            for i, row in enumerate(out.rows):
                w = row.get(i, 0) + c
                if w:
                    row[i] = w
                elif i in row:
                    del row[i]
        return out

    def matmul(self, other, nnz_budget=None):
        if self.size != other.size:
            raise ValueError("size mismatch")
        brows = other.rows
        out = []
        total = 0
        for row in self.rows:
            acc = {}
            for k, a in row.items():
                for j, b in brows[k].items():
                    w = acc.get(j, 0) + a * b
                    if w:
                        acc[j] = w
                    elif j in acc:
                        del acc[j]
            total += len(acc)
            if nnz_budget is not None and total > nnz_budget:
                raise BudgetExceeded
            out.append(acc)
        return SparseIntMatrix(self.size, out)

    def __matmul__(self, other):
        return self.matmul(other)

    def row_apply(self, vec):
        """Sparse row-vector product v^T M for a {index: value} vector."""
        out = {}
        for i, v in vec.items():
            for j, a in self.rows[i].items():
                w = out.get(j, 0) + v * a
                if w:
                    out[j] = w
                elif j in out:
                    del out[j]
        return out

    def transpose(self):
        rows = [dict() for _ in range(self.size)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                rows[j][i] = v
        return SparseIntMatrix(self.size, rows)

    def is_symmetric(self):
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                if self.rows[j].get(i, 0) != v:
                    return False
        return True

    def trace(self):
        return sum(r.get(i, 0) for i, r in enumerate(self.rows))

    def row_sums(self):
        return [sum(r.values()) for r in self.rows]

    def diagonal(self):
        return [r.get(i, 0) for i, r in enumerate(self.rows)]

    def permuted(self, images0):
        """Conjugate by the permutation i -> images0[i] (0-based image array)."""
        rows = [dict() for _ in range(self.size)]
        for i, row in enumerate(self.rows):
            target = rows[images0[i]]
            for j, v in row.items():
                target[images0[j]] = v
        return SparseIntMatrix(self.size, rows)

    def to_dense(self):
        return [[row.get(j, 0) for j in range(self.size)] for row in self.rows]


def int_rank(rows):
    """Rank over Q of a dense integer matrix, by fraction-free elimination."""
    m = [list(map(int, r)) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        p = prow[col]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            if not f:
                continue
            row = [p * a - f * b for a, b in zip(m[r], prow)]
            g = 0
            for x in row:
                g = gcd(g, x)
                if g == 1:
                    break
            m[r] = [x // g for x in row] if g > 1 else row
        rank += 1
        if rank == len(m):
            break
    return rank


def frac_rank(rows):
    """Rank over Q of a dense matrix with int or Fraction entries."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        inv = 1 / prow[col]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            if f:
                f *= inv
                m[r] = [a - f * b for a, b in zip(m[r], prow)]
        rank += 1
        if rank == len(m):
            break
    return rank


def solve_exact(a_rows, b_rows):
    """Solve A X = B over Q, columnwise; None if inconsistent.

    A must have full column rank (every column gets a pivot); raises
    ValueError otherwise.
    """
    nrows = len(a_rows)
    ncols = len(a_rows[0]) if nrows else 0
    width = len(b_rows[0]) if b_rows and b_rows[0] else 0
    aug = [
        [Fraction(x) for x in ar] + [Fraction(x) for x in br]
        for ar, br in zip(a_rows, b_rows)
    ]
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if aug[r][col]), None)
        if piv is None:
            raise ValueError("matrix does not have full column rank")
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [v * inv for v in aug[row]]
        prow = aug[row]
        for r in range(nrows):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], prow)]
        row += 1
    for r in range(row, nrows):
        if any(aug[r][ncols:]):
            return None
    return [aug[r][ncols : ncols + width] for r in range(ncols)]


def column_space_basis(dense):
    """A basis of the column space as primitive integer vectors.

    Deterministic: rows of the reduced transpose in pivot order.
    """
    if not dense:
        return []
    cols = [list(map(int, col)) for col in zip(*dense)]
    ncols = len(cols[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(cols)) if cols[r][col]), None)
        if piv is None:
            continue
        cols[rank], cols[piv] = cols[piv], cols[rank]
        prow = cols[rank]
        p = prow[col]
        for r in range(rank + 1, len(cols)):
            f = cols[r][col]
            if not f:
                continue
            row = [p * a - f * b for a, b in zip(cols[r], prow)]
            g = 0
            for x in row:
                g = gcd(g, x)
                if g == 1:
                    break
            cols[r] = [x // g for x in row] if g > 1 else row
        rank += 1
        if rank == len(cols):
            break
    basis = []
    for r in range(rank):
        row = cols[r]
        g = 0
        for x in row:
            g = gcd(g, x)
            if g == 1:
                break
        if g > 1:
            row = [x // g for x in row]
        lead = next(x for x in row if x)
        if lead < 0:
            row = [-x for x in row]
        basis.append(row)
    return basis


def smith_normal_form(mat):
    """(S, U, V) with U * mat * V = S, U and V unimodular, d1 | d2 | ...

    S has the invariant factors on the diagonal, nonnegative.
    """
    a = [list(map(int, row)) for row in mat]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def addmul_row(dst, src, q):
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def addmul_col(dst, src, q):
        for row in a:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    for t in range(min(nrows, ncols)):
        # move the smallest nonzero entry of the trailing block to (t, t)
        piv = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                val = abs(a[i][j])
                if val and (best is None or val < best):
                    best = val
                    piv = (i, j)
        if piv is None:
            break
        if piv[0] != t:
            swap_rows(t, piv[0])
        if piv[1] != t:
            swap_cols(t, piv[1])
        if a[t][t] < 0:
            negate_row(t)

        while True:
            dirty = True
            while dirty:
                dirty = False
                for i in range(t + 1, nrows):
                    if a[i][t]:
                        addmul_row(i, t, a[i][t] // a[t][t])
                        if a[i][t]:
                            swap_rows(t, i)
                            if a[t][t] < 0:
                                negate_row(t)
                            dirty = True
                for j in range(t + 1, ncols):
                    if a[t][j]:
                        addmul_col(j, t, a[t][j] // a[t][t])
                        if a[t][j]:
                            swap_cols(t, j)
                            dirty = True
            # enforce the divisibility chain: a[t][t] must divide the block
            viol = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % a[t][t]:
                        viol = i
                        break
                if viol is not None:
                    break
            if viol is None:
                break
            addmul_row(t, viol, -1)

    return a, u, v


def lattice_unit_exponent(mat, index):
    """Minimal e > 0 with e * (unit vector `index`) in the integer row span.

    Returns None when no multiple of the unit vector lies in the lattice.
    """
    s, _u, v = smith_normal_form(mat)
    nrows = len(s)
    ncols = len(v)
    # the column transform carries the question into the diagonal lattice
    y = v[index]
    e = 1
    for j in range(ncols):
        d = s[j][j] if j < nrows else 0
        if d:
            e = lcm(e, d // gcd(d, y[j]))
        elif y[j]:
            return None
    return e


def dense_identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def dense_mul(a, b):
    """Dense product over exact scalars (int or Fraction)."""
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def dense_is_identity(a):
    return all(v == (i == j) for i, row in enumerate(a) for j, v in enumerate(row))


def dense_inverse(a):
    """Exact inverse over Q; ValueError if singular."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        prow = aug[col]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], prow)]
    return [row[n:] for row in aug]
