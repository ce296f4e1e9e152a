"""Exact linear algebra over Q(q).

Conventions, fixed once and inherited by every derived basis in the package:

* vectors are tuples of Scalars, matrices act on column vectors, and the
  matrix of a linear map holds the images of basis vectors in its columns;
* row reduction picks the leftmost nonzero column and the first usable row,
  pivots are scaled to 1 and eliminated above and below (RREF), so the
  reduced form of a span is unique;
* particular solutions fill non-pivot coordinates with zeros.

Subspaces are stored by their RREF basis, which makes equality, membership
and canonical complements (the non-pivot coordinate vectors) trivial.
"""

from __future__ import annotations

from .errors import DimensionMismatch, NoSolution
from .scalar import ONE, ZERO, Scalar


def vec(*entries) -> tuple:
    return tuple(entries)


def zero_vec(n: int) -> tuple:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> tuple:
    return (ZERO,) * i + (ONE,) + (ZERO,) * (n - i - 1)


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_neg(a):
    return tuple(-x for x in a)


def vec_scale(c, a):
    if not c:
        return (ZERO,) * len(a)
    return tuple(c * x for x in a)


def vec_is_zero(a) -> bool:
    return not any(a)


def int_vec(entries) -> tuple:
    return tuple(Scalar.from_int(e) for e in entries)


class Matrix:
    """Immutable dense matrix of Scalars."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise DimensionMismatch("ragged matrix rows")
        elif ncols is None:
            ncols = 0
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def zero(nrows, ncols):
        return Matrix(((ZERO,) * ncols,) * nrows, ncols)

    @staticmethod
    def identity(n):
        return Matrix(tuple(unit_vec(n, i) for i in range(n)), n)

    @staticmethod
    def from_int_rows(rows, ncols=None):
        return Matrix(tuple(int_vec(r) for r in rows), ncols)

    @staticmethod
    def from_columns(cols, nrows=None):
        cols = tuple(tuple(c) for c in cols)
        if cols:
            nrows = len(cols[0])
        elif nrows is None:
            nrows = 0
        return Matrix(tuple(tuple(c[i] for c in cols) for i in range(nrows)), len(cols))

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return tuple(self.column(j) for j in range(self.ncols))

    def transpose(self):
        return Matrix(tuple(self.column(j) for j in range(self.ncols)), self.nrows)

    def apply(self, v):
        if len(v) != self.ncols:
            raise DimensionMismatch(f"matrix is {self.nrows}x{self.ncols}, vector has length {len(v)}")
        out = []
        for row in self.rows:
            acc = ZERO
            for a, x in zip(row, v):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch("matrix product shape mismatch")
            bt = other.transpose().rows
            out = []
            for row in self.rows:
                out.append(tuple(
                    _dot(row, col) for col in bt
                ))
            return Matrix(out, other.ncols)
        return NotImplemented

    def __add__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatch("matrix sum shape mismatch")
        return Matrix(tuple(vec_add(a, b) for a, b in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatch("matrix difference shape mismatch")
        return Matrix(tuple(vec_sub(a, b) for a, b in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self):
        return Matrix(tuple(vec_neg(r) for r in self.rows), self.ncols)

    def scale(self, c):
        return Matrix(tuple(vec_scale(c, r) for r in self.rows), self.ncols)

    def is_zero(self):
        return all(vec_is_zero(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.ncols == other.ncols

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"


def _dot(a, b):
    acc = ZERO
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


def _rref_rows(rows, ncols, want_transform=False, nrows_hint=None):
    """Row-reduce a list of row lists in place; returns (pivots, transform_rows)."""
    work = [list(r) for r in rows]
    nrows = len(work)
    t = [list(unit_vec(nrows, i)) for i in range(nrows)] if want_transform else None
    pivots = []
    top = 0
    for col in range(ncols):
        pr = None
        for i in range(top, nrows):
            if work[i][col]:
                pr = i
                break
        if pr is None:
            continue
        if pr != top:
            work[top], work[pr] = work[pr], work[top]
            if t is not None:
                t[top], t[pr] = t[pr], t[top]
        p = work[top][col]
        if not p.is_one():
            inv = p.inv()
            row = work[top]
            for j in range(col, ncols):
                if row[j]:
                    row[j] = inv * row[j]
            if t is not None:
                t[top] = [inv * x for x in t[top]]
        for i in range(nrows):
            if i != top:
                f = work[i][col]
                if f:
                    rt, rs = work[i], work[top]
                    for j in range(col, ncols):
                        if rs[j]:
                            rt[j] = rt[j] - f * rs[j]
                    if t is not None:
                        ti, ts = t[i], t[top]
                        for j in range(nrows):
                            if ts[j]:
                                ti[j] = ti[j] - f * ts[j]
        pivots.append(col)
        top += 1
        if top == nrows:
            break
    return work, pivots, t


class RrefResult:
    __slots__ = ("rank", "pivots", "canonical", "transform")

    def __init__(self, rank, pivots, canonical, transform):
        self.rank = rank
        self.pivots = pivots
        self.canonical = canonical
        self.transform = transform

    def __iter__(self):
        return iter((self.rank, self.pivots, self.canonical, self.transform))


def rref(m: Matrix) -> RrefResult:
    """Reduced row echelon form with the row-operation transform.

    canonical == transform * m holds exactly; pivot choice is leftmost
    nonzero column, first available row.
    """
    work, pivots, t = _rref_rows(m.rows, m.ncols, want_transform=True)
    return RrefResult(
        len(pivots),
        tuple(pivots),
        Matrix(work, m.ncols),
        Matrix(t, m.nrows),
    )


def rank(m: Matrix) -> int:
    _, pivots, _ = _rref_rows(m.rows, m.ncols)
    return len(pivots)


def kernel(m: Matrix) -> "Subspace":
    """Null space {x : m x = 0} as a canonical Subspace."""
    work, pivots, _ = _rref_rows(m.rows, m.ncols)
    free = [j for j in range(m.ncols) if j not in set(pivots)]
    basis = []
    for j in free:
        v = [ZERO] * m.ncols
        v[j] = ONE
        for i, p in enumerate(pivots):
            c = work[i][j]
            if c:
                v[p] = -c
        basis.append(v)
    return Subspace.from_vectors(m.ncols, basis)


def image(m: Matrix) -> "Subspace":
    """Column space of m as a subspace of the target."""
    return Subspace.from_vectors(m.nrows, [m.column(j) for j in range(m.ncols)])


def solve(m: Matrix, rhs, particular_only=True):
    """Deterministic particular solution of m x = rhs (zeros at free columns).

    Raises NoSolution when the system is inconsistent.
    """
    if len(rhs) != m.nrows:
        raise DimensionMismatch("right-hand side has wrong length")
    work, pivots, t = _rref_rows(m.rows, m.ncols, want_transform=True)
    b = [_dot(t[i], rhs) for i in range(len(t))]
    for i in range(len(pivots), m.nrows):
        if b[i]:
            raise NoSolution("inconsistent linear system")
    x = [ZERO] * m.ncols
    for i, p in enumerate(pivots):
        x[p] = b[i]
    return tuple(x)


def solve_matrix(m: Matrix, rhs: Matrix) -> Matrix:
    """Columnwise deterministic solve of m X = rhs, reusing one reduction."""
    if rhs.nrows != m.nrows:
        raise DimensionMismatch("right-hand side has wrong row count")
    work, pivots, t = _rref_rows(m.rows, m.ncols, want_transform=True)
    cols = []
    for j in range(rhs.ncols):
        rhs_col = rhs.column(j)
        b = [_dot(t[i], rhs_col) for i in range(len(t))]
        for i in range(len(pivots), m.nrows):
            if b[i]:
                raise NoSolution(f"inconsistent linear system (column {j})")
        x = [ZERO] * m.ncols
        for i, p in enumerate(pivots):
            x[p] = b[i]
        cols.append(x)
    return Matrix.from_columns(cols, m.ncols)


def invert(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise DimensionMismatch("only square matrices invert")
    r = rref(m)
    if r.rank != m.nrows:
        raise NoSolution("matrix is singular")
    return r.transform


class Subspace:
    """Subspace of Q(q)^n, stored by its unique RREF basis."""

    __slots__ = ("ambient_dim", "rows", "pivots")

    def __init__(self, ambient_dim, rows, pivots):
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "pivots", pivots)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @staticmethod
    def from_vectors(ambient_dim, vectors) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch("vector has wrong ambient dimension")
        work, pivots, _ = _rref_rows(vectors, ambient_dim)
        rows = tuple(tuple(r) for r in work[: len(pivots)])
        return Subspace(ambient_dim, rows, tuple(pivots))

    @staticmethod
    def zero(ambient_dim) -> "Subspace":
        return Subspace(ambient_dim, (), ())

    @staticmethod
    def full(ambient_dim) -> "Subspace":
        return Subspace(ambient_dim, tuple(unit_vec(ambient_dim, i) for i in range(ambient_dim)),
                        tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self):
        return self.rows

    def reduce(self, v):
        """Residual of v after eliminating the pivot coordinates; zero iff v in self."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector has wrong ambient dimension")
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] = v[j] - c * row[j]
        return tuple(v)

    def __contains__(self, v) -> bool:
        return vec_is_zero(self.reduce(v))

    def coords_of(self, v):
        """Coefficients of v over the RREF basis, or None if v is outside."""
        residual = list(v)
        coeffs = []
        for row, p in zip(self.rows, self.pivots):
            c = residual[p]
            coeffs.append(c)
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        residual[j] = residual[j] - c * row[j]
        if not vec_is_zero(residual):
            return None
        return tuple(coeffs)

    def contains_subspace(self, other) -> bool:
        return all(v in self for v in other.rows)

    def sum(self, other) -> "Subspace":
        self._check(other)
        return Subspace.from_vectors(self.ambient_dim, list(self.rows) + list(other.rows))

    def intersect(self, other) -> "Subspace":
        self._check(other)
        if not self.rows or not other.rows:
            return Subspace.zero(self.ambient_dim)
        # x = sum u_i a_i = sum v_j b_j: solve for (u, v) in the kernel of [A^T | -B^T]
        a_t = Matrix(self.rows).transpose()
        b_t = Matrix(other.rows).transpose()
        stacked = Matrix(
            tuple(a_t.rows[i] + vec_neg(b_t.rows[i]) for i in range(self.ambient_dim)),
            self.dim + other.dim,
        )
        ker = kernel(stacked)
        vectors = []
        for w in ker.rows:
            u = w[: self.dim]
            x = zero_vec(self.ambient_dim)
            for c, row in zip(u, self.rows):
                if c:
                    x = vec_add(x, vec_scale(c, row))
            vectors.append(x)
        return Subspace.from_vectors(self.ambient_dim, vectors)

    def quotient_complement(self):
        """Indices of the canonical complement (non-pivot coordinate vectors)."""
        ps = set(self.pivots)
        return tuple(j for j in range(self.ambient_dim) if j not in ps)

    def reduction_matrix(self) -> Matrix:
        """Matrix R with R v = self.reduce(v); ker R = self."""
        n = self.ambient_dim
        rows = [list(unit_vec(n, i)) for i in range(n)]
        # reduce(v)[r] = v[r] - sum_i v[p_i] * row_i[r]
        for row, p in zip(self.rows, self.pivots):
            for r in range(n):
                if row[r]:
                    rows[r][p] = rows[r][p] - row[r]
        return Matrix(rows, n)

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces live in different ambient spaces")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.rows == other.rows

    def __hash__(self):
        return hash((self.ambient_dim, self.rows))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"


def preimage(m: Matrix, target: "Subspace") -> "Subspace":
    """{x : m x in target} as a subspace of the source."""
    if m.nrows != target.ambient_dim:
        raise DimensionMismatch("target subspace does not match the map's codomain")
    return kernel(Matrix(target.reduction_matrix().rows) * m)


class SpanBuilder:
    """Incrementally maintained RREF span; cheap rank growth for closures."""

    __slots__ = ("ambient_dim", "_rows", "_pivots")

    def __init__(self, ambient_dim):
        self.ambient_dim = ambient_dim
        self._rows = []
        self._pivots = []

    @property
    def dim(self):
        return len(self._rows)

    def reduce(self, v):
        v = list(v)
        for row, p in zip(self._rows, self._pivots):
            c = v[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] = v[j] - c * row[j]
        return v

    def contains(self, v):
        return not any(self.reduce(v))

    def insert(self, v) -> bool:
        """Add v to the span; returns True when the rank grew."""
        r = self.reduce(v)
        lead = None
        for j, c in enumerate(r):
            if c:
                lead = j
                break
        if lead is None:
            return False
        inv = r[lead].inv()
        if not r[lead].is_one():
            r = [inv * x for x in r]
        for row, p in zip(self._rows, self._pivots):
            c = row[lead]
            if c:
                for j in range(lead, self.ambient_dim):
                    if r[j]:
                        row[j] = row[j] - c * r[j]
        pos = 0
        while pos < len(self._pivots) and self._pivots[pos] < lead:
            pos += 1
        self._rows.insert(pos, r)
        self._pivots.insert(pos, lead)
        return True

    def subspace(self) -> Subspace:
        return Subspace(self.ambient_dim, tuple(tuple(r) for r in self._rows), tuple(self._pivots))
