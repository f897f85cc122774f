"""Exact dense linear algebra: echelon forms, kernels, subspace lattice ops.

Matrices are immutable (tuples of row tuples) and act on column vectors,
so ``m.apply(v)`` is the usual matrix-vector product.  Subspaces are kept
in canonical reduced row-echelon form; two subspaces are equal exactly
when their canonical bases are identical.
"""

from __future__ import annotations

from .errors import AmbientMismatch, DivisionByZero, NotSquare
from .fields import Poly, PrimeField


class Matrix:
    __slots__ = ("field", "rows")

    def __init__(self, field, rows):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def diagonal(cls, field, entries):
        entries = list(entries)
        n = len(entries)
        z = field.zero
        return cls(field, [[entries[i] if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_ints(cls, field, rows):
        return cls(field, [[field.from_int(x) for x in r] for r in rows])

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def is_square(self):
        return self.nrows == self.ncols

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(
            " ".join(self.field.format(x) for x in row) for row in self.rows
        )
        return "Matrix[%s]" % body

    def __mul__(self, other):
        f = self.field
        cols = list(zip(*other.rows))
        if f.native:
            if isinstance(f, PrimeField):
                p = f.p
                return Matrix(
                    f,
                    [
                        [sum(a * b for a, b in zip(row, col)) % p for col in cols]
                        for row in self.rows
                    ],
                )
            return Matrix(
                f,
                [
                    [sum(a * b for a, b in zip(row, col)) for col in cols]
                    for row in self.rows
                ],
            )
        add, mul, zero = f.add, f.mul, f.zero
        out = []
        for row in self.rows:
            orow = []
            for col in cols:
                s = zero
                for a, b in zip(row, col):
                    s = add(s, mul(a, b))
                orow.append(s)
            out.append(orow)
        return Matrix(f, out)

    def __add__(self, other):
        f = self.field
        return Matrix(
            f,
            [
                [f.add(a, b) for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
        )

    def __sub__(self, other):
        f = self.field
        return Matrix(
            f,
            [
                [f.sub(a, b) for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
        )

    def __neg__(self):
        f = self.field
        return Matrix(f, [[f.neg(a) for a in r] for r in self.rows])

    def scale(self, c):
        f = self.field
        return Matrix(f, [[f.mul(c, a) for a in r] for r in self.rows])

    def transpose(self):
        return Matrix(self.field, list(zip(*self.rows)))

    def stack(self, other):
        return Matrix(self.field, self.rows + other.rows)

    def trace(self):
        f = self.field
        t = f.zero
        for i in range(self.nrows):
            t = f.add(t, self.rows[i][i])
        return t

    def apply(self, v):
        """Matrix times column vector."""
        f = self.field
        if f.native:
            if isinstance(f, PrimeField):
                p = f.p
                return tuple(sum(a * b for a, b in zip(row, v)) % p for row in self.rows)
            return tuple(sum(a * b for a, b in zip(row, v)) for row in self.rows)
        add, mul = f.add, f.mul
        out = []
        for row in self.rows:
            s = f.zero
            for a, b in zip(row, v):
                s = add(s, mul(a, b))
            out.append(s)
        return tuple(out)

    def rank(self):
        return rref(self)[1]

    def is_invertible(self):
        return self.is_square() and self.rank() == self.nrows

    def inverse(self):
        f = self.field
        n = self.nrows
        if not self.is_square():
            raise NotSquare("inverse of a non-square matrix")
        aug = Matrix(
            f,
            [
                tuple(self.rows[i]) + tuple(Matrix.identity(f, n).rows[i])
                for i in range(n)
            ],
        )
        red, rank, _ = rref(aug)
        if rank < n:
            raise DivisionByZero("matrix is singular")
        return Matrix(f, [row[n:] for row in red.rows])


def _rref_rows(field, rows, ncols):
    """In-place RREF of a list of row lists; returns (rank, pivots)."""
    zero = field.zero
    nrows = len(rows)
    pivots = []
    r = 0
    native_p = field.p if isinstance(field, PrimeField) else None
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != zero:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        pivval = rows[r][c]
        if pivval != field.one:
            inv = field.inv(pivval)
            if native_p is not None:
                rows[r] = [(inv * x) % native_p for x in rows[r]]
            else:
                rows[r] = [field.mul(inv, x) for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            t = rows[i][c]
            if t != zero:
                if native_p is not None:
                    rows[i] = [(x - t * y) % native_p for x, y in zip(rows[i], prow)]
                elif field.native:
                    rows[i] = [x - t * y for x, y in zip(rows[i], prow)]
                else:
                    mul, sub = field.mul, field.sub
                    rows[i] = [sub(x, mul(t, y)) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots


def rref(m: Matrix):
    """Reduced row-echelon form; returns (rref matrix, rank, pivot columns)."""
    rows = [list(r) for r in m.rows]
    rank, pivots = _rref_rows(m.field, rows, m.ncols)
    return Matrix(m.field, rows), rank, tuple(pivots)


def rank_of_rows(field, rows, ncols):
    """Rank of a collection of row vectors, without building a Matrix."""
    work = [list(r) for r in rows]
    rank, _ = _rref_rows(field, work, ncols)
    return rank


def det(m: Matrix):
    """Determinant by field Gaussian elimination."""
    if not m.is_square():
        raise NotSquare("determinant of a non-square matrix")
    f = m.field
    n = m.nrows
    if n == 0:
        return f.one
    rows = [list(r) for r in m.rows]
    sign_flip = False
    acc = f.one
    for c in range(n):
        pr = None
        for i in range(c, n):
            if rows[i][c] != f.zero:
                pr = i
                break
        if pr is None:
            return f.zero
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            sign_flip = not sign_flip
        piv = rows[c][c]
        acc = f.mul(acc, piv)
        inv = f.inv(piv)
        for i in range(c + 1, n):
            t = rows[i][c]
            if t != f.zero:
                t = f.mul(t, inv)
                rows[i] = [f.sub(x, f.mul(t, y)) for x, y in zip(rows[i], rows[c])]
    return f.neg(acc) if sign_flip else acc


def charpoly(m: Matrix) -> Poly:
    """Monic characteristic polynomial det(xI - m), by the Berkowitz
    division-free recursion (valid in every characteristic)."""
    if not m.is_square():
        raise NotSquare("charpoly of a non-square matrix")
    f = m.field
    n = m.nrows
    if n == 0:
        return Poly(f, [f.one])
    rows = m.rows
    # coefficient vector of charpoly of leading principal r x r block,
    # highest degree first
    c = [f.one, f.neg(rows[0][0])]
    for r in range(1, n):
        R = rows[r][:r]
        C = [rows[i][r] for i in range(r)]
        d = rows[r][r]
        ts = [f.one, f.neg(d)]
        v = C
        for _ in range(r):
            s = f.zero
            for a, b in zip(R, v):
                s = f.add(s, f.mul(a, b))
            ts.append(f.neg(s))
            # v <- M v with M the leading r x r block
            v = [
                _dot(f, rows[i][:r], v)
                for i in range(r)
            ]
        newc = []
        for i in range(r + 2):
            s = f.zero
            for j in range(len(c)):
                k = i - j
                if 0 <= k < len(ts):
                    s = f.add(s, f.mul(ts[k], c[j]))
            newc.append(s)
        c = newc
    return Poly(f, list(reversed(c)))


def _dot(f, u, v):
    if f.native:
        if isinstance(f, PrimeField):
            return sum(a * b for a, b in zip(u, v)) % f.p
        return sum(a * b for a, b in zip(u, v))
    s = f.zero
    for a, b in zip(u, v):
        s = f.add(s, f.mul(a, b))
    return s


def solve_linear(m: Matrix, rhs):
    """One solution x of m x = rhs (free variables zero), or None."""
    f = m.field
    aug = Matrix(f, [tuple(row) + (b,) for row, b in zip(m.rows, rhs)])
    red, rank, pivots = rref(aug)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [f.zero] * m.ncols
    for i, pc in enumerate(pivots):
        x[pc] = red.rows[i][-1]
    return tuple(x)


def kernel(m: Matrix) -> "Subspace":
    """Null space {x : m x = 0} as a canonical subspace of k^ncols."""
    f = m.field
    nc = m.ncols
    red, rank, pivots = rref(m)
    pivset = set(pivots)
    free = [c for c in range(nc) if c not in pivset]
    basis = []
    for fc in free:
        v = [f.zero] * nc
        v[fc] = f.one
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(red.rows[i][fc])
        basis.append(v)
    return Subspace.from_vectors(f, nc, basis)


class Subspace:
    """A subspace of k^ambient, stored as a canonical RREF basis."""

    __slots__ = ("field", "ambient", "mat", "pivots")

    def __init__(self, field, ambient, mat, pivots):
        self.field = field
        self.ambient = ambient
        self.mat = mat
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, field, ambient, vectors):
        rows = [list(v) for v in vectors]
        for r in rows:
            if len(r) != ambient:
                raise AmbientMismatch("vector length %d != %d" % (len(r), ambient))
        rank, pivots = _rref_rows(field, rows, ambient)
        return cls(field, ambient, Matrix(field, rows[:rank]), tuple(pivots))

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient, Matrix(field, []), ())

    @classmethod
    def full(cls, field, ambient):
        return cls(field, ambient, Matrix.identity(field, ambient), tuple(range(ambient)))

    @property
    def dim(self):
        return self.mat.nrows

    def codim(self):
        return self.ambient - self.dim

    def basis_vectors(self):
        return self.mat.rows

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.field == other.field
            and self.mat.rows == other.mat.rows
        )

    def __hash__(self):
        return hash((self.ambient, self.mat.rows))

    def __repr__(self):
        return "Subspace(dim %d of k^%d)" % (self.dim, self.ambient)

    def key(self):
        """Deterministic sort key: (dim, canonical basis entries)."""
        f = self.field
        return (
            self.dim,
            tuple(tuple(f.sort_key(x) for x in row) for row in self.mat.rows),
        )

    def contains_vector(self, v):
        f = self.field
        if len(v) != self.ambient:
            raise AmbientMismatch("vector length mismatch")
        w = list(v)
        zero = f.zero
        for row, pc in zip(self.mat.rows, self.pivots):
            t = w[pc]
            if t != zero:
                if f.native:
                    w = [x - t * y for x, y in zip(w, row)]
                    if isinstance(f, PrimeField):
                        w = [x % f.p for x in w]
                else:
                    w = [f.sub(x, f.mul(t, y)) for x, y in zip(w, row)]
        return all(x == zero for x in w)

    def reduce_vector(self, v):
        """Residual of v after reduction against the basis (zero iff v in span)."""
        f = self.field
        w = list(v)
        zero = f.zero
        for row, pc in zip(self.mat.rows, self.pivots):
            t = w[pc]
            if t != zero:
                if f.native:
                    w = [x - t * y for x, y in zip(w, row)]
                    if isinstance(f, PrimeField):
                        w = [x % f.p for x in w]
                else:
                    w = [f.sub(x, f.mul(t, y)) for x, y in zip(w, row)]
        return tuple(w)

    def contains(self, other: "Subspace"):
        self._check(other)
        return all(self.contains_vector(v) for v in other.mat.rows)

    def sum(self, other: "Subspace"):
        self._check(other)
        return Subspace.from_vectors(
            self.field, self.ambient, self.mat.rows + other.mat.rows
        )

    def annihilator(self) -> "Subspace":
        """{f in k^n : <f, v> = 0 for all v in the subspace}."""
        if self.dim == 0:
            return Subspace.full(self.field, self.ambient)
        return kernel(self.mat)

    def intersect(self, other: "Subspace"):
        self._check(other)
        a = self.annihilator()
        b = other.annihilator()
        stacked = Matrix(self.field, a.mat.rows + b.mat.rows)
        if stacked.nrows == 0:
            return Subspace.full(self.field, self.ambient)
        return kernel(stacked)

    def direct_sum_is_ambient(self, other: "Subspace"):
        self._check(other)
        if self.dim + other.dim != self.ambient:
            return False
        return (
            rank_of_rows(self.field, self.mat.rows + other.mat.rows, self.ambient)
            == self.ambient
        )

    def coordinates(self, v):
        """Coordinates of v in the RREF basis; requires membership."""
        coords = tuple(v[pc] for pc in self.pivots)
        return coords

    def _check(self, other):
        if self.ambient != other.ambient or self.field != other.field:
            raise AmbientMismatch("subspaces live in different ambient spaces")


class RowBasis:
    """Incrementally maintained reduced row-echelon basis of a row span."""

    __slots__ = ("field", "ncols", "rows", "pivots")

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rows = []
        self.pivots = []

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, v):
        f = self.field
        w = list(v)
        zero = f.zero
        native_p = f.p if isinstance(f, PrimeField) else None
        for row, pc in zip(self.rows, self.pivots):
            t = w[pc]
            if t != zero:
                if native_p is not None:
                    w = [(x - t * y) % native_p for x, y in zip(w, row)]
                elif f.native:
                    w = [x - t * y for x, y in zip(w, row)]
                else:
                    w = [f.sub(x, f.mul(t, y)) for x, y in zip(w, row)]
        return w

    def insert(self, v) -> bool:
        """Add v to the span; returns True when the dimension grows."""
        f = self.field
        w = self.reduce(v)
        zero = f.zero
        pc = next((i for i, x in enumerate(w) if x != zero), None)
        if pc is None:
            return False
        inv = f.inv(w[pc])
        if inv != f.one:
            w = [f.mul(inv, x) for x in w]
        # eliminate the new pivot from the existing rows
        for k, row in enumerate(self.rows):
            t = row[pc]
            if t != zero:
                self.rows[k] = [f.sub(x, f.mul(t, y)) for x, y in zip(row, w)]
        at = next((k for k, p in enumerate(self.pivots) if p > pc), len(self.pivots))
        self.rows.insert(at, w)
        self.pivots.insert(at, pc)
        return True

    def to_subspace(self) -> Subspace:
        return Subspace(
            self.field,
            self.ncols,
            Matrix(self.field, [tuple(r) for r in self.rows]),
            tuple(self.pivots),
        )


def subspace_algebra(a: Subspace, b: Subspace, op: str):
    """Dispatcher: op in {sum, intersect, contains, direct_sum_is_ambient}."""
    if op == "sum":
        return a.sum(b)
    if op == "intersect":
        return a.intersect(b)
    if op == "contains":
        return a.contains(b)
    if op == "direct_sum_is_ambient":
        return a.direct_sum_is_ambient(b)
    raise ValueError("unknown op %r" % (op,))


# vector helpers (plain tuples)

def vec_add(f, u, v):
    return tuple(f.add(a, b) for a, b in zip(u, v))


def vec_sub(f, u, v):
    return tuple(f.sub(a, b) for a, b in zip(u, v))


def vec_scale(f, c, u):
    return tuple(f.mul(c, a) for a in u)


def vec_dot(f, u, v):
    return _dot(f, u, v)


def vec_is_zero(f, u):
    z = f.zero
    return all(a == z for a in u)


def unit_vector(f, n, i):
    return tuple(f.one if j == i else f.zero for j in range(n))


def random_matrix(field, nrows, ncols, rng):
    return Matrix(field, [[field.random(rng) for _ in range(ncols)] for _ in range(nrows)])


def random_invertible(field, n, rng, max_tries=1000):
    for _ in range(max_tries):
        m = random_matrix(field, n, n, rng)
        if m.rank() == n:
            return m
    raise RuntimeError("failed to sample an invertible matrix")
