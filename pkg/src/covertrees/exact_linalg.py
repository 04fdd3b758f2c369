"""
Dense integer matrices and exact determinants.

Everything is Python ``int``; there is no floating point anywhere.
Determinants use fraction-free (Bareiss) elimination, so every
intermediate value is an integer and each division is exact.
"""

from .errors import DimensionError


class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(entries)
        if rows < 0 or cols < 0:
            raise DimensionError("negative dimension %dx%d" % (rows, cols))
        if len(entries) != rows * cols:
            raise DimensionError(
                "expected %d entries for %dx%d, got %d"
                % (rows * cols, rows, cols, len(entries)))
        for x in entries:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError("entries must be int, got %r" % (x,))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionError("ragged rows")
        return cls(nrows, ncols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("index (%d, %d) out of range for %dx%d"
                             % (i, j, self.rows, self.cols))
        return self.entries[i * self.cols + j]

    def row(self, i):
        c = self.cols
        return list(self.entries[i * c:(i + 1) * c])

    def to_rows(self):
        """Fresh list-of-lists copy; safe to mutate."""
        return [self.row(i) for i in range(self.rows)]

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def is_symmetric(self):
        return self.is_square and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i))

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionError("cannot multiply %dx%d by %dx%d"
                                 % (self.rows, self.cols, other.rows, other.cols))
        A = self.to_rows()
        Bt = other.transpose().to_rows()
        return IntMatrix(self.rows, other.cols,
                         [sum(x * y for x, y in zip(a, b)) for a in A for b in Bt])

    def delete(self, i, j):
        """Copy with row i and column j removed."""
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("index (%d, %d) out of range for %dx%d"
                             % (i, j, self.rows, self.cols))
        rows = self.to_rows()
        del rows[i]
        for r in rows:
            del r[j]
        return IntMatrix(self.rows - 1, self.cols - 1, [x for r in rows for x in r])

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "IntMatrix.from_rows(%r)" % (self.to_rows(),)


def _bareiss(a):
    # a: list of row lists, destroyed in place
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k]
        pivot = pk[k]
        tail = pk[k + 1:]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            if f == 0:
                if prev == 1:
                    ri[k + 1:] = [pivot * x for x in ri[k + 1:]]
                else:
                    ri[k + 1:] = [pivot * x // prev for x in ri[k + 1:]]
            else:
                ri[k + 1:] = [(pivot * x - f * y) // prev
                              for x, y in zip(ri[k + 1:], tail)]
        prev = pivot
    return sign * a[n - 1][n - 1]


def determinant(M):
    """Exact determinant of a square IntMatrix. The 0x0 determinant is 1."""
    if not M.is_square:
        raise DimensionError("determinant of non-square %dx%d matrix" % M.shape)
    return _bareiss(M.to_rows())


def first_cofactor(M, i, j):
    """(-1)**(i+j) times the determinant of M with row i and column j deleted."""
    if not M.is_square:
        raise DimensionError("cofactor of non-square %dx%d matrix" % M.shape)
    minor = M.delete(i, j)
    d = determinant(minor)
    return -d if (i + j) % 2 else d
