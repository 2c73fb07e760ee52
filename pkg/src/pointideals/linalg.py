"""Exact dense linear algebra over the rationals.

Everything here works on Fraction entries; there is no floating point, so
rank and solvability are exact predicates.  Pivoting picks the first nonzero
entry in column order, which is deterministic and sufficient over Q.
"""

from __future__ import annotations

from fractions import Fraction


class Matrix:
    """Immutable dense matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(Fraction(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(
                "expected %d entries for a %dx%d matrix, got %d"
                % (rows * cols, rows, cols, len(entries))
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("rows have unequal lengths")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "Matrix(%d, %d, %r)" % (self.rows, self.cols, list(self.entries))


def rref(m):
    """Reduced row echelon form of m.

    Returns (echelon matrix, ordered list of pivot columns).
    """
    a = [list(m.row(i)) for i in range(m.rows)]
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pr = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return Matrix(m.rows, m.cols, [x for row in a for x in row]), tuple(pivots)


def rank(m):
    """Exact rank over Q."""
    return len(rref(m)[1])


def solve(a, b):
    """Solve a x = b exactly.

    Returns (solution, unique) where solution is a tuple of Fractions and
    unique says whether a has full column rank, or None if the system is
    inconsistent.  Free variables are set to zero.
    """
    b = [Fraction(x) for x in b]
    if a.rows != len(b):
        raise ValueError("right-hand side has length %d, expected %d" % (len(b), a.rows))
    aug_entries = []
    for i in range(a.rows):
        aug_entries.extend(a.row(i))
        aug_entries.append(b[i])
    aug = Matrix(a.rows, a.cols + 1, aug_entries)
    red, pivots = rref(aug)
    if a.cols in pivots:
        return None
    x = [Fraction(0)] * a.cols
    for i, c in enumerate(pivots):
        x[c] = red[i, a.cols]
    return tuple(x), len(pivots) == a.cols
