"""Exact dense linear algebra: RREF, kernels, solving, subspace lattice.

Vectors are coordinate tuples; linear maps act on the right, v |-> v * M,
so row i of M is the image of the i-th basis vector.  Subspaces keep a
canonical reduced-row-echelon basis, which makes equality, hashing and
deduplication exact.

The row-reduction inner loops are specialised per field kind because the
verification sweeps spend most of their time here.
"""

from __future__ import annotations

from bisect import bisect
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import AmbientMismatchError, DimensionMismatchError, UnsupportedFieldError
from .fields import Field

Vector = tuple


def _rref_q(rows: list) -> list:
    """Reduce rows of Fractions in place; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        lead = prow[c]
        if lead != 1:
            prow = [x / lead for x in prow]
            rows[r] = prow
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    rows[i] = [a - f * b for a, b in zip(ri, prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _rref_p(rows: list, p: int) -> list:
    """Reduce rows of canonical ints mod p in place; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        lead = prow[c]
        if lead != 1:
            inv = pow(lead, -1, p)
            prow = [(x * inv) % p for x in prow]
            rows[r] = prow
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    rows[i] = [(a - f * b) % p for a, b in zip(ri, prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(rows: Iterable[Sequence], field: Field) -> tuple:
    """Full reduced row echelon form.

    Returns (rows, pivots) where rows is a tuple of row tuples of the same
    shape as the input (zero rows at the bottom).
    """
    work = [list(r) for r in rows]
    if work:
        n = len(work[0])
        for r in work:
            if len(r) != n:
                raise DimensionMismatchError("ragged rows")
    if field.p is None:
        pivots = _rref_q(work)
    else:
        pivots = _rref_p(work, field.p)
    return tuple(tuple(r) for r in work), tuple(pivots)


def null_space(rows: Sequence[Sequence], field: Field, ncols: int | None = None) -> list:
    """Basis of {x : A x = 0} with x read as a coordinate tuple."""
    if rows:
        ncols = len(rows[0])
    elif ncols is None:
        raise DimensionMismatchError("empty matrix needs explicit column count")
    red, pivots = rref(rows, field)
    pivot_set = set(pivots)
    zero = field.zero()
    one = field.one()
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [zero] * ncols
        v[free] = one
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(red[r][free])
        basis.append(tuple(v))
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence, field: Field):
    """One solution x of A x = b, or None when the system is inconsistent."""
    rows = list(rows)
    if len(rows) != len(rhs):
        raise DimensionMismatchError("rhs length does not match row count")
    if not rows:
        return ()
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, field)
    if pivots and pivots[-1] == ncols:
        return None
    x = [field.zero()] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return tuple(x)


class Matrix:
    """Immutable exact matrix over a fixed field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: Iterable[Sequence], ncols: int | None = None):
        self.field = field
        rs = tuple(tuple(r) for r in rows)
        if rs:
            ncols = len(rs[0])
            for r in rs:
                if len(r) != ncols:
                    raise DimensionMismatchError("ragged rows")
        elif ncols is None:
            ncols = 0
        self.rows = rs
        self.nrows = len(rs)
        self.ncols = ncols

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return Matrix(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero()
        return Matrix(field, [[z] * ncols for _ in range(nrows)], ncols=ncols)

    def _check(self, other: "Matrix", square_match: bool = False) -> None:
        self.field.check_same(other.field)
        if square_match:
            if self.ncols != other.nrows:
                raise DimensionMismatchError(
                    "%dx%d times %dx%d" % (self.nrows, self.ncols, other.nrows, other.ncols)
                )
        elif (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatchError("shape mismatch")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self) -> str:
        return "Matrix(%s, %d x %d)" % (self.field, self.nrows, self.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        f = self.field
        return Matrix(
            self.field,
            [[f.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            ncols=self.ncols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        f = self.field
        return Matrix(
            self.field,
            [[f.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            ncols=self.ncols,
        )

    def __mul__(self, other: "Matrix") -> "Matrix":
        self._check(other, square_match=True)
        p = self.field.p
        cols = list(zip(*other.rows)) if other.rows else []
        out = []
        for row in self.rows:
            if p is None:
                out.append([sum(a * b for a, b in zip(row, col)) for col in cols])
            else:
                out.append([sum(a * b for a, b in zip(row, col)) % p for col in cols])
        return Matrix(self.field, out, ncols=other.ncols)

    def scale(self, c) -> "Matrix":
        f = self.field
        return Matrix(self.field, [[f.mul(c, a) for a in r] for r in self.rows], ncols=self.ncols)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)) if self.rows else [], ncols=self.nrows)

    def act(self, vec: Sequence) -> tuple:
        """Right action v * M on a coordinate row vector."""
        if len(vec) != self.nrows:
            raise DimensionMismatchError("vector length %d, matrix has %d rows" % (len(vec), self.nrows))
        p = self.field.p
        cols = list(zip(*self.rows)) if self.rows else [()] * self.ncols
        if p is None:
            return tuple(sum(a * b for a, b in zip(vec, col)) for col in cols)
        return tuple(sum(a * b for a, b in zip(vec, col)) % p for col in cols)

    def trace(self):
        if self.nrows != self.ncols:
            raise DimensionMismatchError("trace of non-square matrix")
        t = self.field.zero()
        for i in range(self.nrows):
            t = self.field.add(t, self.rows[i][i])
        return t

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def rref(self) -> tuple:
        """(Matrix in RREF, pivot columns)."""
        red, pivots = rref(self.rows, self.field)
        return Matrix(self.field, red, ncols=self.ncols), pivots

    def rank(self) -> int:
        return len(rref(self.rows, self.field)[1])

    def kernel(self) -> list:
        """Basis of {x : M x = 0} (column-vector null space, as row tuples)."""
        return null_space(self.rows, self.field, ncols=self.ncols)

    def left_kernel(self) -> list:
        """Basis of {v : v M = 0}."""
        return self.transpose().kernel()


class Subspace:
    """Subspace of F^n with a canonical RREF basis.

    Canonicality makes == and hash structural: two spans are equal exactly
    when they reduce to the same rows.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: Field, ambient_dim: int, basis: tuple, pivots: tuple):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @staticmethod
    def span(field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise AmbientMismatchError(
                    "vector of length %d in ambient of dimension %d" % (len(v), ambient_dim)
                )
        red, pivots = rref(vecs, field)
        return Subspace(field, ambient_dim, red[: len(pivots)], pivots)

    @staticmethod
    def zero_space(field: Field, ambient_dim: int) -> "Subspace":
        return Subspace(field, ambient_dim, (), ())

    @staticmethod
    def full_space(field: Field, ambient_dim: int) -> "Subspace":
        z, o = field.zero(), field.one()
        basis = tuple(
            tuple(o if i == j else z for j in range(ambient_dim)) for i in range(ambient_dim)
        )
        return Subspace(field, ambient_dim, basis, tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def _check_ambient(self, other: "Subspace") -> None:
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise AmbientMismatchError(
                "%s^%d vs %s^%d" % (self.field, self.ambient_dim, other.field, other.ambient_dim)
            )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return "Subspace(%s^%d, dim %d)" % (self.field, self.ambient_dim, self.dim)

    def reduce(self, vec: Sequence) -> list:
        """Residual of vec after elimination by the basis; zero iff contained."""
        if len(vec) != self.ambient_dim:
            raise AmbientMismatchError("vector length %d in ambient %d" % (len(vec), self.ambient_dim))
        v = list(vec)
        p = self.field.p
        if p is None:
            for row, c in zip(self.basis, self.pivots):
                f = v[c]
                if f:
                    v = [a - f * b for a, b in zip(v, row)]
        else:
            for row, c in zip(self.basis, self.pivots):
                f = v[c]
                if f:
                    v = [(a - f * b) % p for a, b in zip(v, row)]
        return v

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    def coordinates(self, vec: Sequence):
        """Coefficients of vec in the canonical basis, or None if outside."""
        v = list(vec)
        coeffs = []
        p = self.field.p
        for row, c in zip(self.basis, self.pivots):
            f = v[c]
            coeffs.append(f)
            if f:
                if p is None:
                    v = [a - f * b for a, b in zip(v, row)]
                else:
                    v = [(a - f * b) % p for a, b in zip(v, row)]
        if any(v):
            return None
        return tuple(coeffs)

    def __le__(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        if self.dim > other.dim:
            return False
        return all(other.contains(v) for v in self.basis)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self.__le__(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        if not self.basis:
            return other
        if not other.basis:
            return self
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero_space(self.field, self.ambient_dim)
        if self.dim <= other.dim and self <= other:
            return self
        if other.dim < self.dim and other <= self:
            return other
        # Coefficient vectors (c, d) with c*A + d*B = 0 give c*A in both spans.
        stacked = Matrix(self.field, self.basis + other.basis, ncols=self.ambient_dim)
        vecs = []
        a = self.dim
        for cd in stacked.left_kernel():
            v = [self.field.zero()] * self.ambient_dim
            for coeff, row in zip(cd[:a], self.basis):
                if coeff:
                    v = [self.field.add(x, self.field.mul(coeff, y)) for x, y in zip(v, row)]
            vecs.append(v)
        return Subspace.span(self.field, self.ambient_dim, vecs)

    def free_columns(self) -> tuple:
        """Columns without a pivot; standard vectors there complement the space."""
        pivot_set = set(self.pivots)
        return tuple(c for c in range(self.ambient_dim) if c not in pivot_set)


class EchelonAccumulator:
    """Grows a subspace one vector at a time, keeping the basis in RREF.

    The workhorse behind closure computations and spanning checks; add()
    reports whether the vector enlarged the span.
    """

    __slots__ = ("field", "ambient_dim", "rows", "pivots", "_p")

    def __init__(self, field: Field, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows: list = []
        self.pivots: list = []
        self._p = field.p
        for v in vectors:
            self.add(v)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence) -> list:
        if len(vec) != self.ambient_dim:
            raise AmbientMismatchError("vector length %d in ambient %d" % (len(vec), self.ambient_dim))
        v = list(vec)
        p = self._p
        if p is None:
            for row, c in zip(self.rows, self.pivots):
                f = v[c]
                if f:
                    v = [a - f * b for a, b in zip(v, row)]
        else:
            for row, c in zip(self.rows, self.pivots):
                f = v[c]
                if f:
                    v = [(a - f * b) % p for a, b in zip(v, row)]
        return v

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    def add(self, vec: Sequence) -> bool:
        """Insert vec; True when the rank grew."""
        v = self.reduce(vec)
        c = next((j for j, x in enumerate(v) if x), None)
        if c is None:
            return False
        p = self._p
        lead = v[c]
        if lead != 1:
            if p is None:
                v = [x / lead for x in v]
            else:
                inv = pow(lead, -1, p)
                v = [(x * inv) % p for x in v]
        for k, row in enumerate(self.rows):
            f = row[c]
            if f:
                if p is None:
                    self.rows[k] = [a - f * b for a, b in zip(row, v)]
                else:
                    self.rows[k] = [(a - f * b) % p for a, b in zip(row, v)]
        pos = bisect(self.pivots, c)
        self.rows.insert(pos, v)
        self.pivots.insert(pos, c)
        return True

    def to_subspace(self) -> Subspace:
        return Subspace(
            self.field, self.ambient_dim, tuple(tuple(r) for r in self.rows), tuple(self.pivots)
        )


def enumerate_subspaces(field: Field, ambient_dim: int, dim: int | None = None) -> Iterator[Subspace]:
    """All subspaces of F_p^n, each exactly once via its canonical RREF basis.

    Pivot columns are chosen first; the remaining entries of each row (to
    the right of its pivot, off the other pivot columns) range freely.
    Deterministic order: dimension, then pivot choice, then free entries.
    """
    if field.p is None:
        raise UnsupportedFieldError("subspace enumeration needs a finite field")
    p = field.p
    dims = (dim,) if dim is not None else tuple(range(ambient_dim + 1))
    for k in dims:
        if k < 0 or k > ambient_dim:
            continue
        for pivots in combinations(range(ambient_dim), k):
            pivot_set = set(pivots)
            slots = [
                [c for c in range(pv + 1, ambient_dim) if c not in pivot_set]
                for pv in pivots
            ]
            positions = [(r, c) for r in range(k) for c in slots[r]]
            for values in product(range(p), repeat=len(positions)):
                rows = [[0] * ambient_dim for _ in range(k)]
                for r in range(k):
                    rows[r][pivots[r]] = 1
                for (r, c), v in zip(positions, values):
                    rows[r][c] = v
                yield Subspace(field, ambient_dim, tuple(tuple(r) for r in rows), pivots)


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for t in range(k):
        num *= p ** (n - t) - 1
        den *= p ** (t + 1) - 1
    return num // den


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a & b


def subspace_contains(space: Subspace, vec: Sequence) -> bool:
    return space.contains(vec)


def kernel(matrix: Matrix) -> list:
    return matrix.kernel()


def vec_add(field: Field, a: Sequence, b: Sequence) -> tuple:
    if len(a) != len(b):
        raise DimensionMismatchError("vector lengths differ")
    p = field.p
    if p is None:
        return tuple(x + y for x, y in zip(a, b))
    return tuple((x + y) % p for x, y in zip(a, b))


def vec_sub(field: Field, a: Sequence, b: Sequence) -> tuple:
    if len(a) != len(b):
        raise DimensionMismatchError("vector lengths differ")
    p = field.p
    if p is None:
        return tuple(x - y for x, y in zip(a, b))
    return tuple((x - y) % p for x, y in zip(a, b))


def vec_scale(field: Field, c, a: Sequence) -> tuple:
    p = field.p
    if p is None:
        return tuple(c * x for x in a)
    return tuple((c * x) % p for x in a)


def zero_vector(field: Field, n: int) -> tuple:
    return tuple([field.zero()] * n)


def standard_vector(field: Field, n: int, i: int) -> tuple:
    z, o = field.zero(), field.one()
    return tuple(o if j == i else z for j in range(n))
