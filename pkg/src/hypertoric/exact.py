"""Exact integer linear algebra.

Matrices over the integers, Smith normal form with transforming matrices,
exact rational linear solving, and enumeration of the torsion points of a
finite cokernel.  Every number is a Python ``int`` or ``fractions.Fraction``;
no fixed-width arithmetic or floating point appears anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm


def as_fraction_vector(values) -> tuple[Fraction, ...]:
    """Coerce a sequence of ints/Fractions/strings like '2/3' to Fractions."""
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, stored row-major as nested tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ValueError("rows have inconsistent lengths")
        for row in self.entries:
            for e in row:
                if not isinstance(e, int) or isinstance(e, bool):
                    raise TypeError("matrix entries must be plain ints, got %r" % (e,))

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(e) for e in row) for row in rows))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def diagonal(values) -> "IntMatrix":
        vals = list(values)
        n = len(vals)
        return IntMatrix(tuple(tuple(vals[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries))) if self.entries else IntMatrix(())

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        cols = other.transpose().entries
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    def mul_vector(self, vec) -> tuple[Fraction, ...]:
        """Matrix times a rational column vector, exactly."""
        v = as_fraction_vector(vec)
        if self.cols != len(v):
            raise ValueError("dimension mismatch in matrix-vector product")
        return tuple(sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in self.entries)

    def submatrix_columns(self, col_indices) -> "IntMatrix":
        """Submatrix of the given 0-based columns, in the order given."""
        idx = list(col_indices)
        return IntMatrix(tuple(tuple(row[j] for j in idx) for row in self.entries))

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        n = self.rows
        if n != self.cols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def rank(self) -> int:
        """Rank over the rationals (exact Gaussian elimination)."""
        a = [[Fraction(e) for e in row] for row in self.entries]
        rank = 0
        col = 0
        while rank < len(a) and col < self.cols:
            pivot = next((i for i in range(rank, len(a)) if a[i][col] != 0), None)
            if pivot is None:
                col += 1
                continue
            a[rank], a[pivot] = a[pivot], a[rank]
            pv = a[rank][col]
            for i in range(rank + 1, len(a)):
                if a[i][col]:
                    f = a[i][col] / pv
                    a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
            rank += 1
            col += 1
        return rank

    def inverse_unimodular(self) -> "IntMatrix":
        """Exact inverse of a matrix with determinant +-1."""
        n = self.rows
        if abs(self.det()) != 1:
            raise ValueError("matrix is not unimodular")
        cols = []
        for j in range(n):
            e = [Fraction(1 if i == j else 0) for i in range(n)]
            x = solve_rational(self, e)
            assert x is not None
            cols.append([int(c) for c in x])
        return IntMatrix.from_rows(list(zip(*cols)))


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form data: U * M * V = D with U, V unimodular and the
    diagonal of D a divisibility chain d1 | d2 | ..."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    def diagonal(self) -> tuple[int, ...]:
        n = min(self.D.rows, self.D.cols)
        return tuple(self.D[i, i] for i in range(n))


def snf(m: IntMatrix) -> SnfResult:
    """Smith normal form of an arbitrary integer matrix.

    Pivots are chosen by smallest absolute value; only the output identities
    (U*M*V = D, unimodularity, divisibility chain, D diagonal) are contractual.
    """
    rows, cols = m.rows, m.cols
    a = [list(r) for r in m.entries]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src], applied to a and u
        if q:
            a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
            u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        if q:
            for row in a:
                row[dst] += q * row[src]
            for row in v:
                row[dst] += q * row[src]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                e = abs(a[i][j])
                if e and (best is None or e < best):
                    best = e
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        swap_rows(i, t)
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        swap_cols(j, t)
                        dirty = True
            if not dirty and all(a[i][t] == 0 for i in range(t + 1, rows)) and all(
                a[t][j] == 0 for j in range(t + 1, cols)
            ):
                break
        d = a[t][t]
        fix = next(
            ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % d),
            None,
        )
        if fix is not None:
            # pull a non-multiple into the pivot row and redo the elimination
            add_row(t, fix[0], 1)
            continue
        t += 1

    for i in range(limit):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]

    return SnfResult(U=IntMatrix.from_rows(u), D=IntMatrix.from_rows(a), V=IntMatrix.from_rows(v))


def solve_rational(m: IntMatrix, b) -> tuple[Fraction, ...] | None:
    """Exact solution x of M*x = b, or None when the system is inconsistent.

    Free variables (if any) are set to zero, so for square nonsingular M the
    unique solution is returned.
    """
    rhs = as_fraction_vector(b)
    if len(rhs) != m.rows:
        raise ValueError("right-hand side length %d does not match %d rows" % (len(rhs), m.rows))
    rows, cols = m.rows, m.cols
    a = [[Fraction(e) for e in m.entries[i]] + [rhs[i]] for i in range(rows)]
    pivots = []
    r = 0
    for col in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pv = a[r][col]
        a[r] = [x / pv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if a[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for i, col in enumerate(pivots):
        x[col] = a[i][cols]
    return tuple(x)


def cokernel_torsion_elements(m: IntMatrix) -> set[tuple[Fraction, ...]]:
    """All v in (Q/Z)^d with M^T * v integral, for a nonsingular square M.

    Each element is returned in canonical form: entries are Fractions in
    [0, 1) in lowest terms.  The result has exactly |det M| elements.
    """
    if m.rows != m.cols:
        raise ValueError("cokernel enumeration requires a square matrix")
    d = m.rows
    res = snf(m.transpose())
    diag = res.diagonal()
    if any(e == 0 for e in diag):
        raise ValueError("matrix is singular")
    # M^T v integral  <=>  D w integral with w = V^{-1} v, so w_i runs over
    # k_i/d_i and v = V w mod Z^d.  The grid is walked with a mixed-radix
    # counter so each step is d integer additions.
    big = lcm(*diag) if diag else 1
    vrows = res.V.entries
    # bumping k_i by one adds V[:, i] * (big / d_i) to the common-denominator
    # numerators
    inc = [[vrows[j][i] * (big // diag[i]) % big for j in range(d)] for i in range(d)]
    out = set()
    nums = [0] * d
    ks = [0] * d
    while True:
        out.add(tuple(Fraction(x % big, big) for x in nums))
        i = d - 1
        while i >= 0:
            ks[i] += 1
            if ks[i] < diag[i]:
                step = inc[i]
                for j in range(d):
                    nums[j] += step[j]
                break
            ks[i] = 0
            step = inc[i]
            back = diag[i] - 1
            for j in range(d):
                nums[j] -= back * step[j]
            i -= 1
        if i < 0:
            break
    return out
