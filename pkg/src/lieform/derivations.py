"""Derivation algebras and the two intravariance criteria.

Der(L) is the null space of the linear system expressing the Leibniz rule
over all basis pairs.  Internally a derivation matrix acts on the right of
a row coordinate vector (row i is the image of e_i); for subspace
arithmetic matrices are flattened row-major into F^(n^2).

A subalgebra U is intravariant when every derivation splits as inner plus
U-stabilising.  The second, extension-style criterion adjoins one outer
generator per basis derivation and asks that the normaliser of U together
with L fill the extension.  The decomposable derivations form a subspace,
so checking a basis of Der(L) settles both criteria exactly.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import LieAlgebra
from .chief import split_extension_by_derivation
from .errors import DimensionMismatchError, NotADerivationError
from .fields import Field
from .linalg import Matrix, Subspace, null_space, standard_vector, vec_add


def _leibniz_defect(algebra: LieAlgebra, matrix: Matrix):
    """First basis pair violating the Leibniz rule, or None."""
    n = algebra.dim
    for i in range(n):
        for j in range(i + 1, n):
            lhs = matrix.act(algebra.table[i][j])
            rhs = vec_add(
                algebra.field,
                algebra.bracket(matrix.rows[i], standard_vector(algebra.field, n, j)),
                algebra.bracket(standard_vector(algebra.field, n, i), matrix.rows[j]),
            )
            if lhs != rhs:
                return (i + 1, j + 1)
    return None


class Derivation:
    """A derivation of a fixed algebra, stored as its matrix."""

    __slots__ = ("parent", "matrix")

    def __init__(self, parent: LieAlgebra, matrix: Matrix, check: bool = True):
        parent.field.check_same(matrix.field)
        if matrix.nrows != parent.dim or matrix.ncols != parent.dim:
            raise DimensionMismatchError("derivation matrix must be %d x %d" % (parent.dim, parent.dim))
        if check:
            defect = _leibniz_defect(parent, matrix)
            if defect is not None:
                raise NotADerivationError("Leibniz identity fails on pair (%d, %d)" % defect)
        self.parent = parent
        self.matrix = matrix

    def __call__(self, vec: Sequence) -> tuple:
        return self.matrix.act(vec)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Derivation)
            and self.parent == other.parent
            and self.matrix == other.matrix
        )

    def __hash__(self) -> int:
        return hash((self.parent, self.matrix))

    def __repr__(self) -> str:
        return "Derivation(dim %d algebra)" % self.parent.dim

    def commutator(self, other: "Derivation") -> "Derivation":
        """[d, e] as operators; always a derivation again."""
        a, b = self.matrix, other.matrix
        return Derivation(self.parent, b * a - a * b, check=False)

    def flatten(self) -> tuple:
        return tuple(x for row in self.matrix.rows for x in row)

    def is_inner(self) -> bool:
        return inner_derivations(self.parent).contains(self.flatten())


def _unflatten(field: Field, vec: Sequence, n: int) -> Matrix:
    return Matrix(field, [vec[i * n : (i + 1) * n] for i in range(n)], ncols=n)


class DerivationAlgebra:
    """All derivations of one algebra: a basis plus the flattened subspace."""

    __slots__ = ("parent", "subspace", "basis")

    def __init__(self, parent: LieAlgebra, subspace: Subspace):
        self.parent = parent
        self.subspace = subspace
        self.basis = [
            Derivation(parent, _unflatten(parent.field, row, parent.dim), check=False)
            for row in subspace.basis
        ]

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def contains(self, d) -> bool:
        flat = d.flatten() if isinstance(d, Derivation) else tuple(x for row in d.rows for x in row)
        return self.subspace.contains(flat)

    def __repr__(self) -> str:
        return "DerivationAlgebra(dim %d over %s)" % (self.dim, self.parent.field)


def derivation_algebra(algebra: LieAlgebra) -> DerivationAlgebra:
    """Solve the Leibniz system; the null space is Der(L).

    Unknowns are the n^2 matrix entries D[m][k], row-major.  For each basis
    pair i < j and each coordinate k the rule contributes one equation:
    sum_m t_m D[m][k] - sum_m D[i][m] c_mjk - sum_m D[j][m] c_imk = 0,
    where t = [e_i, e_j] and c are the structure constants.
    """
    cached = algebra._cache.get("derivation_algebra")
    if cached is not None:
        return cached
    n = algebra.dim
    field = algebra.field
    zero = field.zero()
    equations = []
    for i in range(n):
        for j in range(i + 1, n):
            t = algebra.table[i][j]
            for k in range(n):
                row = [zero] * (n * n)
                for m in range(n):
                    if t[m]:
                        row[m * n + k] = field.add(row[m * n + k], t[m])
                    c1 = algebra.table[m][j][k]
                    if c1:
                        row[i * n + m] = field.sub(row[i * n + m], c1)
                    c2 = algebra.table[i][m][k]
                    if c2:
                        row[j * n + m] = field.sub(row[j * n + m], c2)
                if any(row):
                    equations.append(row)
    if equations:
        basis = null_space(equations, field)
    else:
        basis = [standard_vector(field, n * n, t) for t in range(n * n)]
    result = DerivationAlgebra(algebra, Subspace.span(field, n * n, basis))
    algebra._cache["derivation_algebra"] = result
    return result


def inner_derivations(algebra: LieAlgebra) -> Subspace:
    """Span of the ad matrices, flattened; dim n - dim Z(L)."""
    cached = algebra._cache.get("inner_derivations")
    if cached is None:
        n = algebra.dim
        vecs = []
        for i in range(n):
            m = algebra.ad(standard_vector(algebra.field, n, i))
            vecs.append(tuple(x for row in m.rows for x in row))
        cached = Subspace.span(algebra.field, n * n, vecs)
        algebra._cache["inner_derivations"] = cached
    return cached


def stabilizing_derivations(der: DerivationAlgebra, subalgebra: Subspace) -> Subspace:
    """{d in Der(L) : d(U) <= U}, as a flattened subspace of Der(L)."""
    algebra = der.parent
    n = algebra.dim
    if subalgebra.ambient_dim != n:
        raise DimensionMismatchError("subalgebra lives in the wrong ambient space")
    if der.dim == 0 or subalgebra.is_zero() or subalgebra.is_full():
        return der.subspace
    # Coefficients c over the Der basis with (sum_t c_t d_t)(u) in U for
    # every basis vector u; reduction mod U is linear, so this is a kernel.
    rows = []
    for d in der.basis:
        row = []
        for u in subalgebra.basis:
            row.extend(subalgebra.reduce(d(u)))
        rows.append(row)
    stacked = Matrix(algebra.field, rows, ncols=n * subalgebra.dim)
    flat = []
    for coeffs in stacked.left_kernel():
        acc = [algebra.field.zero()] * (n * n)
        for c, d in zip(coeffs, der.basis):
            if c:
                for idx, x in enumerate(d.flatten()):
                    if x:
                        acc[idx] = algebra.field.add(acc[idx], algebra.field.mul(c, x))
        flat.append(tuple(acc))
    return Subspace.span(algebra.field, n * n, flat)


def is_intravariant_linear(algebra: LieAlgebra, subalgebra: Subspace) -> bool:
    """Every derivation is inner plus U-stabilising, as a subspace identity."""
    der = derivation_algebra(algebra)
    inner = inner_derivations(algebra)
    stab = stabilizing_derivations(der, subalgebra)
    return (inner + stab).dim == der.dim


def normalizer_fills_extension(algebra: LieAlgebra, subalgebra: Subspace, matrix: Matrix) -> bool:
    """In D = one-generator extension by the matrix, N_D(U) + L = D."""
    n = algebra.dim
    field = algebra.field
    embedded = Subspace.span(
        field, n + 1, [tuple(v) + (field.zero(),) for v in subalgebra.basis]
    )
    ambient = Subspace.span(
        field, n + 1, [standard_vector(field, n + 1, i) for i in range(n)]
    )
    extension = split_extension_by_derivation(algebra, matrix)
    return (extension.normalizer(embedded) + ambient).dim == n + 1


def extension_defect(algebra: LieAlgebra, subalgebra: Subspace):
    """First basis derivation whose extension breaks N_D(U) + L = D, or None."""
    for d in derivation_algebra(algebra).basis:
        if not normalizer_fills_extension(algebra, subalgebra, d.matrix):
            return d
    return None


def is_intravariant_extension(algebra: LieAlgebra, subalgebra: Subspace) -> bool:
    """For each basis derivation d, adjoining d leaves N_D(U) + L = D.

    D is the one-generator extension; U embeds with a zero last coordinate.
    """
    return extension_defect(algebra, subalgebra) is None


def derivation_matrix_strings(d: Derivation) -> list:
    """JSON form: entry [i][j] is the e_i coefficient of d(e_j).

    The matrix in this form acts on column coordinate vectors.
    """
    m = d.matrix
    fmt = d.parent.field.format
    n = d.parent.dim
    return [[fmt(m.rows[j][i]) for j in range(n)] for i in range(n)]


def derivation_from_strings(algebra: LieAlgebra, rows: list) -> Derivation:
    """Inverse of derivation_matrix_strings; validates the Leibniz rule."""
    n = algebra.dim
    if len(rows) != n or any(len(r) != n for r in rows):
        raise DimensionMismatchError("derivation matrix must be %d x %d" % (n, n))
    parse = algebra.field.parse
    internal = [[parse(rows[i][j]) for i in range(n)] for j in range(n)]
    return Derivation(algebra, Matrix(algebra.field, internal, ncols=n))
