"""Exact rational linear and multilinear algebra.

Everything is dense, immutable, and exact: scalars are fractions.Fraction,
vectors are tuples, matrices act on column vectors, and composite indices are
lexicographic with the left factor major. No floats anywhere.
"""

from fractions import Fraction

from .errors import DimensionMismatch, SingularMap

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(value):
    """Coerce an int, string, or Fraction to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError("not an exact scalar: %r" % (value,))


def vector(values):
    return tuple(frac(v) for v in values)


def zero_vector(n):
    return (ZERO,) * n


def basis_vector(n, i):
    return tuple(ONE if k == i else ZERO for k in range(n))


def add_vectors(u, v):
    if len(u) != len(v):
        raise DimensionMismatch("vector lengths %d and %d" % (len(u), len(v)))
    return tuple(a + b for a, b in zip(u, v))


def sub_vectors(u, v):
    if len(u) != len(v):
        raise DimensionMismatch("vector lengths %d and %d" % (len(u), len(v)))
    return tuple(a - b for a, b in zip(u, v))


def scale_vector(c, u):
    c = frac(c)
    return tuple(c * a for a in u)


def is_zero_vector(u):
    return all(a == 0 for a in u)


def dot(u, v):
    if len(u) != len(v):
        raise DimensionMismatch("vector lengths %d and %d" % (len(u), len(v)))
    return sum((a * b for a, b in zip(u, v)), ZERO)


class LinearMap:
    """A rows x cols matrix over the rationals, acting on column vectors.

    Explicit shape arguments are only needed when entries are empty, so that
    zero-dimensional spaces stay representable.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, rows=None, cols=None):
        table = tuple(tuple(frac(x) for x in row) for row in entries)
        if table:
            width = len(table[0])
            for row in table:
                if len(row) != width:
                    raise DimensionMismatch("ragged matrix rows")
            self_rows = len(table)
            self_cols = width
        else:
            self_rows = 0 if rows is None else rows
            self_cols = 0 if cols is None else cols
            table = tuple(() for _ in range(self_rows))
            if self_rows and self_cols:
                raise DimensionMismatch("missing entries for nonempty matrix")
        if rows is not None and rows != self_rows:
            raise DimensionMismatch("declared %d rows, got %d" % (rows, self_rows))
        if cols is not None and cols != self_cols:
            raise DimensionMismatch("declared %d cols, got %d" % (cols, self_cols))
        self.rows = self_rows
        self.cols = self_cols
        self.entries = table

    @classmethod
    def identity(cls, n):
        return cls(tuple(basis_vector(n, i) for i in range(n)), rows=n, cols=n)

    @classmethod
    def zero(cls, rows, cols):
        return cls(tuple(zero_vector(cols) for _ in range(rows)), rows=rows, cols=cols)

    @classmethod
    def diagonal(cls, values):
        vals = vector(values)
        n = len(vals)
        return cls(tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n)), rows=n, cols=n)

    @classmethod
    def from_columns(cls, columns, rows=None):
        cols = [vector(c) for c in columns]
        if not cols:
            return cls((), rows=0 if rows is None else rows, cols=0)
        height = len(cols[0])
        for c in cols:
            if len(c) != height:
                raise DimensionMismatch("ragged matrix columns")
        return cls(tuple(tuple(c[i] for c in cols) for i in range(height)), rows=height, cols=len(cols))

    def column(self, j):
        if not 0 <= j < self.cols:
            raise DimensionMismatch("column %d of a %dx%d map" % (j, self.rows, self.cols))
        return tuple(self.entries[i][j] for i in range(self.rows))

    def apply(self, u):
        if len(u) != self.cols:
            raise DimensionMismatch("applying %dx%d map to length-%d vector" % (self.rows, self.cols, len(u)))
        return tuple(dot(row, u) for row in self.entries)

    def __matmul__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch("composing %dx%d with %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        rows = []
        for i in range(self.rows):
            row = self.entries[i]
            rows.append(tuple(sum((row[k] * other.entries[k][j] for k in range(self.cols)), ZERO)
                              for j in range(other.cols)))
        return LinearMap(tuple(rows), rows=self.rows, cols=other.cols)

    def __add__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("adding %dx%d and %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        return LinearMap(tuple(tuple(a + b for a, b in zip(r1, r2))
                               for r1, r2 in zip(self.entries, other.entries)),
                         rows=self.rows, cols=self.cols)

    def __sub__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return LinearMap(tuple(tuple(-a for a in row) for row in self.entries), rows=self.rows, cols=self.cols)

    def scale(self, c):
        c = frac(c)
        return LinearMap(tuple(tuple(c * a for a in row) for row in self.entries), rows=self.rows, cols=self.cols)

    def transpose(self):
        return LinearMap(tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
                         rows=self.cols, cols=self.rows)

    def is_square(self):
        return self.rows == self.cols

    def inverse(self):
        """Gauss-Jordan inverse; raises SingularMap when rank is deficient."""
        if not self.is_square():
            raise DimensionMismatch("inverting a %dx%d map" % (self.rows, self.cols))
        n = self.rows
        work = [list(row) + list(basis_vector(n, i)) for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                raise SingularMap("matrix has no rank-%d minor at column %d" % (n, col))
            work[col], work[pivot] = work[pivot], work[col]
            inv = ONE / work[col][col]
            work[col] = [inv * x for x in work[col]]
            for r in range(n):
                if r != col and work[r][col] != 0:
                    factor = work[r][col]
                    work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
        return LinearMap(tuple(tuple(row[n:]) for row in work), rows=n, cols=n)

    def power(self, k):
        """Integer power; negative exponents invert first."""
        if not self.is_square():
            raise DimensionMismatch("powering a %dx%d map" % (self.rows, self.cols))
        base = self if k >= 0 else self.inverse()
        result = LinearMap.identity(self.rows)
        for _ in range(abs(k)):
            result = result @ base
        return result

    def is_invertible(self):
        try:
            self.inverse()
        except SingularMap:
            return False
        return True

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "LinearMap(%r)" % (self.entries,)


class Tensor2:
    """An element of V (x) W in fixed bases: entries[i][j] is the e_i (x) f_j coefficient."""

    __slots__ = ("dim_left", "dim_right", "entries")

    def __init__(self, entries, dim_left=None, dim_right=None):
        table = tuple(tuple(frac(x) for x in row) for row in entries)
        if table:
            width = len(table[0])
            for row in table:
                if len(row) != width:
                    raise DimensionMismatch("ragged tensor rows")
            self.dim_left = len(table)
            self.dim_right = width
        else:
            self.dim_left = 0 if dim_left is None else dim_left
            self.dim_right = 0 if dim_right is None else dim_right
            table = tuple(() for _ in range(self.dim_left))
        if dim_left is not None and dim_left != self.dim_left:
            raise DimensionMismatch("declared left dim %d, got %d" % (dim_left, self.dim_left))
        if dim_right is not None and self.entries_nonempty(table) and dim_right != self.dim_right:
            raise DimensionMismatch("declared right dim %d, got %d" % (dim_right, self.dim_right))
        self.entries = table

    @staticmethod
    def entries_nonempty(table):
        return bool(table) and bool(table[0])

    @classmethod
    def zero(cls, dim_left, dim_right):
        return cls(tuple(zero_vector(dim_right) for _ in range(dim_left)), dim_left, dim_right)

    @classmethod
    def from_entries(cls, dim_left, dim_right, items):
        table = [[ZERO] * dim_right for _ in range(dim_left)]
        for (i, j), c in items.items():
            table[i][j] = frac(c)
        return cls(tuple(tuple(row) for row in table), dim_left, dim_right)

    def flip(self):
        """Swap tensor factors; only defined when both dimensions agree."""
        if self.dim_left != self.dim_right:
            raise DimensionMismatch("flipping a %dx%d tensor" % (self.dim_left, self.dim_right))
        n = self.dim_left
        return Tensor2(tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n)), n, n)

    def is_symmetric(self):
        return self.dim_left == self.dim_right and self == self.flip()

    def is_skew(self):
        if self.dim_left != self.dim_right:
            return False
        n = self.dim_left
        return all(self.entries[i][j] == -self.entries[j][i] for i in range(n) for j in range(n))

    def pair(self, u, v):
        """Evaluate as a bilinear pairing: sum entries[i][j] u_i v_j."""
        if len(u) != self.dim_left or len(v) != self.dim_right:
            raise DimensionMismatch("pairing %dx%d tensor with lengths %d, %d"
                                    % (self.dim_left, self.dim_right, len(u), len(v)))
        total = ZERO
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            total += ui * dot(self.entries[i], v)
        return total

    def nonzero_items(self):
        return [((i, j), c) for i, row in enumerate(self.entries) for j, c in enumerate(row) if c != 0]

    def __add__(self, other):
        if not isinstance(other, Tensor2):
            return NotImplemented
        if (self.dim_left, self.dim_right) != (other.dim_left, other.dim_right):
            raise DimensionMismatch("adding tensors of different shapes")
        return Tensor2(tuple(tuple(a + b for a, b in zip(r1, r2))
                             for r1, r2 in zip(self.entries, other.entries)),
                       self.dim_left, self.dim_right)

    def __sub__(self, other):
        if not isinstance(other, Tensor2):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Tensor2(tuple(tuple(-a for a in row) for row in self.entries), self.dim_left, self.dim_right)

    def __eq__(self, other):
        if not isinstance(other, Tensor2):
            return NotImplemented
        return (self.dim_left, self.dim_right, self.entries) == (other.dim_left, other.dim_right, other.entries)

    def __hash__(self):
        return hash((self.dim_left, self.dim_right, self.entries))

    def __repr__(self):
        return "Tensor2(%r)" % (self.entries,)


class Tensor3:
    """A three-index array: entries[i][j][k], shapes may differ per slot."""

    __slots__ = ("dims", "entries")

    def __init__(self, entries, dims=None):
        table = tuple(tuple(tuple(frac(x) for x in vec) for vec in plane) for plane in entries)
        if table and table[0] and table[0][0]:
            d1 = len(table)
            d2 = len(table[0])
            d3 = len(table[0][0])
            for plane in table:
                if len(plane) != d2:
                    raise DimensionMismatch("ragged tensor planes")
                for vec in plane:
                    if len(vec) != d3:
                        raise DimensionMismatch("ragged tensor fibers")
        else:
            if dims is None:
                raise DimensionMismatch("empty tensor needs explicit dims")
            d1, d2, d3 = dims
            table = tuple(tuple(zero_vector(d3) for _ in range(d2)) for _ in range(d1))
        if dims is not None and tuple(dims) != (d1, d2, d3):
            raise DimensionMismatch("declared dims %r, got %r" % (tuple(dims), (d1, d2, d3)))
        self.dims = (d1, d2, d3)
        self.entries = table

    @classmethod
    def zero(cls, d1, d2, d3):
        return cls((), dims=(d1, d2, d3))

    @classmethod
    def from_entries(cls, dims, items):
        d1, d2, d3 = dims
        table = [[[ZERO] * d3 for _ in range(d2)] for _ in range(d1)]
        for (i, j, k), c in items.items():
            table[i][j][k] = frac(c)
        if 0 in dims:
            return cls((), dims=dims)
        return cls(tuple(tuple(tuple(vec) for vec in plane) for plane in table), dims=dims)

    def slice12(self, i, j):
        """The output vector attached to the basis pair (i, j)."""
        return self.entries[i][j]

    def nonzero_items(self):
        return [((i, j, k), c)
                for i, plane in enumerate(self.entries)
                for j, vec in enumerate(plane)
                for k, c in enumerate(vec) if c != 0]

    def is_zero(self):
        return not self.nonzero_items()

    def __add__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        if self.dims != other.dims:
            raise DimensionMismatch("adding tensors of different shapes")
        return Tensor3(tuple(tuple(tuple(a + b for a, b in zip(v1, v2))
                                   for v1, v2 in zip(p1, p2))
                             for p1, p2 in zip(self.entries, other.entries)), dims=self.dims)

    def __sub__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Tensor3(tuple(tuple(tuple(-a for a in vec) for vec in plane) for plane in self.entries),
                       dims=self.dims)

    def __eq__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        return self.dims == other.dims and self.entries == other.entries

    def __hash__(self):
        return hash((self.dims, self.entries))

    def __repr__(self):
        return "Tensor3(%r)" % (self.entries,)


def invert_map(m):
    """Exact inverse of a square map."""
    return m.inverse()


def dual_map(m):
    """The transpose, acting on coordinate covectors."""
    return m.transpose()


def tensor_product_map(f, g):
    """Kronecker product acting on lexicographically ordered tensor coordinates."""
    rows = f.rows * g.rows
    cols = f.cols * g.cols
    table = []
    for i in range(f.rows):
        for k in range(g.rows):
            row = []
            for j in range(f.cols):
                fij = f.entries[i][j]
                if fij == 0:
                    row.extend([ZERO] * g.cols)
                else:
                    row.extend(fij * g.entries[k][l] for l in range(g.cols))
            table.append(tuple(row))
    return LinearMap(tuple(table), rows=rows, cols=cols)


def apply_bilinear(c, x, y):
    """Contract a structure tensor with two input vectors: out_k = sum x_i y_j c[i][j][k]."""
    d1, d2, d3 = c.dims
    if len(x) != d1 or len(y) != d2:
        raise DimensionMismatch("contracting %r tensor with lengths %d, %d" % (c.dims, len(x), len(y)))
    out = [ZERO] * d3
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        plane = c.entries[i]
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            coeff = xi * yj
            vec = plane[j]
            for k in range(d3):
                if vec[k] != 0:
                    out[k] += coeff * vec[k]
    return tuple(out)


def flip_tensor2(r):
    """Swap the two tensor factors of a square 2-tensor."""
    return r.flip()


def tensor2_to_map(r):
    """View an element of A (x) A as a map A* -> A: the matrix transpose of the entry table."""
    return LinearMap(tuple(tuple(r.entries[j][i] for j in range(r.dim_left)) for i in range(r.dim_right)),
                     rows=r.dim_right, cols=r.dim_left)


def map_direct_sum(f, g):
    """Block diagonal sum of two maps."""
    rows = f.rows + g.rows
    cols = f.cols + g.cols
    table = []
    for i in range(f.rows):
        table.append(tuple(f.entries[i]) + zero_vector(g.cols))
    for i in range(g.rows):
        table.append(zero_vector(f.cols) + tuple(g.entries[i]))
    return LinearMap(tuple(table), rows=rows, cols=cols)
