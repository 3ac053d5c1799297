"""Exact dense linear algebra over Q or Q(a): RREF, kernels, subspace lattice.

Vectors are plain lists of field scalars.  A Subspace always stores its basis
in reduced row echelon form with pivots normalized to 1 and pivot columns
cleared, so equal subspaces have identical representations and equality is a
plain comparison.
"""

from __future__ import annotations

from .field import QQ


class Matrix:
    """Dense matrix with row-major entries over a scalar field."""

    __slots__ = ("rows", "cols", "data", "field")

    def __init__(self, rows, cols, data, field=QQ):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("matrix data does not match shape")
        self.rows = rows
        self.cols = cols
        self.data = [list(r) for r in data]
        self.field = field

    @classmethod
    def identity(cls, n, field=QQ):
        z, o = field.zero, field.one
        return cls(n, n, [[o if i == j else z for j in range(n)] for i in range(n)], field)

    @classmethod
    def zero(cls, rows, cols, field=QQ):
        z = field.zero
        return cls(rows, cols, [[z] * cols for _ in range(rows)], field)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.data == other.data

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        return Matrix(self.rows, other.cols, mat_mul(self.data, other.data, self.field), self.field)

    def transpose(self):
        return Matrix(self.cols, self.rows,
                      [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
                      self.field)

    def rref(self):
        rows, _ = rref_rows([list(r) for r in self.data], self.field)
        z = self.field.zero
        while len(rows) < self.rows:
            rows.append([z] * self.cols)
        return Matrix(self.rows, self.cols, rows, self.field)

    def kernel(self):
        return kernel(self)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field.name})"


def mat_mul(a, b, field=QQ):
    """Product of two list-of-lists matrices."""
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    zero = field.zero
    out = []
    for i in range(n):
        ai = a[i]
        row = [zero] * m
        for t in range(k):
            c = ai[t]
            if not c:
                continue
            bt = b[t]
            for j in range(m):
                if bt[j]:
                    row[j] = row[j] + c * bt[j]
        out.append(row)
    return out


def rref_rows(rows, field=QQ):
    """In-place reduced row echelon form; returns (nonzero rows, pivot cols)."""
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        row = rows[r]
        pv = row[c]
        if pv != field.one:
            inv = field.one / pv
            rows[r] = row = [x * inv for x in row]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri = rows[i]
                rows[i] = [x - f * y for x, y in zip(ri, row)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


class Subspace:
    """Subspace of field^ambient with a canonical RREF basis."""

    __slots__ = ("ambient", "field", "rows", "pivots")

    def __init__(self, ambient, rows, pivots, field=QQ):
        self.ambient = ambient
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, vectors, ambient, field=QQ):
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise ValueError("vector length does not match ambient dimension")
        rows, pivots = rref_rows(vectors, field)
        return cls(ambient, rows, pivots, field)

    @classmethod
    def zero(cls, ambient, field=QQ):
        return cls(ambient, [], [], field)

    @classmethod
    def full(cls, ambient, field=QQ):
        z, o = field.zero, field.one
        rows = [[o if j == i else z for j in range(ambient)] for i in range(ambient)]
        return cls(ambient, rows, list(range(ambient)), field)

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, v):
        """Residual of v after reduction against the basis."""
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        return v

    def member(self, v):
        return not any(self.reduce(v))

    def coords(self, v):
        """Coefficients of v over the RREF basis, or None if v is outside."""
        v = list(v)
        cs = []
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            cs.append(c)
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        if any(v):
            return None
        return cs

    def contains(self, other):
        if other.ambient != self.ambient:
            raise ValueError("ambient dimension mismatch")
        return all(self.member(r) for r in other.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.rows == other.rows

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __add__(self, other):
        if other.ambient != self.ambient:
            raise ValueError("ambient dimension mismatch")
        return Subspace.span(list(self.rows) + list(other.rows), self.ambient, self.field)

    def intersect(self, other):
        if other.ambient != self.ambient:
            raise ValueError("ambient dimension mismatch")
        s, t = self.dim, other.dim
        if s == 0 or t == 0:
            return Subspace.zero(self.ambient, self.field)
        # x in both spans: a.S = b.T, kernel of the stacked coefficient map
        data = []
        for j in range(self.ambient):
            data.append([self.rows[i][j] for i in range(s)]
                        + [-other.rows[i][j] for i in range(t)])
        ker = kernel(Matrix(self.ambient, s + t, data, self.field))
        vecs = []
        for kv in ker.rows:
            v = [self.field.zero] * self.ambient
            for i in range(s):
                c = kv[i]
                if c:
                    row = self.rows[i]
                    v = [x + c * y for x, y in zip(v, row)]
            vecs.append(v)
        return Subspace.span(vecs, self.ambient, self.field)

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient})"


def kernel(m):
    """Null space {v : m v = 0} as a canonical Subspace of field^cols."""
    field = m.field
    rows, pivots = rref_rows([list(r) for r in m.data], field)
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    basis = []
    z, o = field.zero, field.one
    for fc in free:
        v = [z] * m.cols
        v[fc] = o
        for row, p in zip(rows, pivots):
            if row[fc]:
                v[p] = -row[fc]
        basis.append(v)
    return Subspace.span(basis, m.cols, field)


class SpanBuilder:
    """Incrementally maintained RREF span for saturation-style loops."""

    def __init__(self, ambient, field=QQ):
        self.ambient = ambient
        self.field = field
        self.rows = []
        self.pivots = []

    @property
    def dim(self):
        return len(self.rows)

    def residual(self, v):
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        return v

    def contains(self, v):
        return not any(self.residual(v))

    def insert(self, v):
        """Add v to the span; True if the dimension grew."""
        v = self.residual(v)
        p = next((i for i, c in enumerate(v) if c), None)
        if p is None:
            return False
        pv = v[p]
        if pv != self.field.one:
            inv = self.field.one / pv
            v = [x * inv for x in v]
        for i, row in enumerate(self.rows):
            c = row[p]
            if c:
                self.rows[i] = [x - c * y for x, y in zip(row, v)]
        at = next((i for i, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, p)
        return True

    def subspace(self):
        return Subspace(self.ambient, self.rows, self.pivots, self.field)


class LinearSolver:
    """Express vectors over a fixed independent spanning set, RREF cached."""

    def __init__(self, basis_rows, field=QQ):
        self.field = field
        self.k = len(basis_rows)
        self.n = len(basis_rows[0]) if basis_rows else 0
        z, o = field.zero, field.one
        aug = []
        for i, row in enumerate(basis_rows):
            tag = [z] * self.k
            tag[i] = o
            aug.append(list(row) + tag)
        rows, pivots = rref_rows(aug, field)
        if any(p >= self.n for p in pivots):
            raise ValueError("basis rows are linearly dependent")
        self.rows = rows
        self.pivots = pivots

    def coords(self, v):
        """Coefficients over the original basis rows, or None if outside."""
        n, k = self.n, self.k
        v = list(v)
        coeffs = [self.field.zero] * k
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                for j in range(n):
                    if row[j]:
                        v[j] = v[j] - c * row[j]
                for j in range(k):
                    if row[n + j]:
                        coeffs[j] = coeffs[j] + c * row[n + j]
        if any(v):
            return None
        return coeffs


def solve_in_span(basis_rows, v, field=QQ):
    """Coefficients expressing v over basis_rows, or None if unsolvable."""
    if not basis_rows:
        return None if any(v) else []
    return LinearSolver(basis_rows, field).coords(v)


def solve_linear(m, b):
    """One solution x of m x = b (free variables set to 0), or None."""
    field = m.field
    aug = [list(row) + [bi] for row, bi in zip(m.data, b)]
    rows, pivots = rref_rows(aug, field)
    x = [field.zero] * m.cols
    for row, p in zip(rows, pivots):
        if p == m.cols:
            return None
        x[p] = row[m.cols]
    return x
