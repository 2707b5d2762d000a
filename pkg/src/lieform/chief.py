"""Chief series, minimal ideals, factor modules and split extensions.

A chief series is a maximal chain of ideals 0 = I_0 < ... < I_k = L; each
factor I_{t+1}/I_t is a minimal ideal of L/I_t, equivalently an irreducible
L-module.  Over GF(p) a minimal ideal is found by closing every nonzero
vector of the last derived term into an ideal and keeping the smallest.
Over Q the search refines the part of that term killed by [L, L] into
simultaneous rational eigenspaces of the commuting induced operators; when
no rational invariant line exists the computation is refused rather than
approximated.

Module action convention matches the bracket: x acts on v as v * R_x, so
the representation identity reads R_[x,y] = R_y R_x - R_x R_y.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd
from typing import Sequence

from .algebra import LieAlgebra, QuotientMap
from .errors import (
    DimensionMismatchError,
    InvalidModuleError,
    NotADerivationError,
    NotNestedError,
    NotSolubleError,
    UnsupportedFieldError,
    ZeroAlgebraError,
)
from .fields import Field
from .linalg import Matrix, Subspace, standard_vector, vec_add, vec_scale


class LModule:
    """Finite-dimensional module over a Lie algebra, one action matrix per
    basis element of the acting algebra."""

    __slots__ = ("algebra", "dim", "actions")

    def __init__(self, algebra: LieAlgebra, actions: Sequence[Matrix], dim: int | None = None):
        actions = tuple(actions)
        if len(actions) != algebra.dim:
            raise InvalidModuleError("need one action matrix per basis element")
        if actions:
            dim = actions[0].nrows
        elif dim is None:
            raise InvalidModuleError("zero-dimensional acting algebra needs explicit module dim")
        for m in actions:
            algebra.field.check_same(m.field)
            if m.nrows != dim or m.ncols != dim:
                raise DimensionMismatchError("action matrices must be %d x %d" % (dim, dim))
        self.algebra = algebra
        self.dim = dim
        self.actions = actions

    def action_of(self, x: Sequence) -> Matrix:
        out = Matrix.zero(self.algebra.field, self.dim, self.dim)
        for c, m in zip(x, self.actions):
            if c:
                out = out + m.scale(c)
        return out

    def act(self, x: Sequence, v: Sequence) -> tuple:
        return self.action_of(x).act(v)

    def validate(self) -> None:
        """Representation identity on basis pairs; raises InvalidModuleError."""
        alg = self.algebra
        for i in range(alg.dim):
            for j in range(i + 1, alg.dim):
                lhs = self.action_of(alg.table[i][j])
                ri, rj = self.actions[i], self.actions[j]
                if lhs != rj * ri - ri * rj:
                    raise InvalidModuleError(
                        "action violates the bracket on basis pair (%d, %d)" % (i + 1, j + 1)
                    )

    def is_trivial(self) -> bool:
        return all(m.is_zero() for m in self.actions)

    def submodule_closure(self, vectors) -> Subspace:
        from .linalg import EchelonAccumulator

        acc = EchelonAccumulator(self.algebra.field, self.dim)
        for v in vectors:
            acc.add(v)
        fresh = [tuple(r) for r in acc.rows]
        while fresh:
            produced = []
            for v in fresh:
                for m in self.actions:
                    w = m.act(v)
                    if any(w) and acc.add(w):
                        produced.append(w)
            fresh = produced
        return acc.to_subspace()


def is_irreducible(module: LModule) -> bool:
    """No proper nonzero submodule.

    Decided by spinning every nonzero vector over GF(p); over Q only the
    one-dimensional case is decidable here.
    """
    if module.dim == 0:
        return False
    if module.dim == 1:
        return True
    field = module.algebra.field
    if field.p is None:
        raise UnsupportedFieldError("irreducibility over Q is only decided in dimension 1")
    p = field.p
    for coords in product(range(p), repeat=module.dim):
        if not any(coords):
            continue
        if module.submodule_closure([coords]).dim < module.dim:
            return False
    return True


class FactorView:
    """Coordinates on a factor A/B of nested subspaces of an algebra.

    The basis is the reduction of A's basis mod B, kept in echelon form, so
    coords and lift are exact mutual inverses modulo B.
    """

    __slots__ = ("algebra", "top", "bottom", "basis", "pivots")

    def __init__(self, algebra: LieAlgebra, top: Subspace, bottom: Subspace):
        if not bottom <= top:
            raise NotNestedError("factor requires bottom <= top")
        self.algebra = algebra
        self.top = top
        self.bottom = bottom
        from .linalg import EchelonAccumulator

        acc = EchelonAccumulator(algebra.field, algebra.dim)
        for v in top.basis:
            acc.add(bottom.reduce(v))
        self.basis = tuple(tuple(r) for r in acc.rows)
        self.pivots = tuple(acc.pivots)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, vec: Sequence) -> tuple:
        """Factor coordinates of a vector of the top space."""
        v = self.bottom.reduce(vec)
        field = self.algebra.field
        p = field.p
        coeffs = []
        for row, c in zip(self.basis, self.pivots):
            f = v[c]
            coeffs.append(f)
            if f:
                if p is None:
                    v = [a - f * b for a, b in zip(v, row)]
                else:
                    v = [(a - f * b) % p for a, b in zip(v, row)]
        if any(v):
            raise NotNestedError("vector lies outside the factor's top space")
        return tuple(coeffs)

    def lift(self, coords: Sequence) -> tuple:
        field = self.algebra.field
        out = tuple([field.zero()] * self.algebra.dim)
        for c, row in zip(coords, self.basis):
            if c:
                out = vec_add(field, out, vec_scale(field, c, row))
        return out

    def action_matrix(self, x: Sequence) -> Matrix:
        """Action of x on factor coordinates via the bracket."""
        rows = [self.coords(self.algebra.bracket(x, self.lift(standard_vector(self.algebra.field, self.dim, u)))) for u in range(self.dim)]
        return Matrix(self.algebra.field, rows, ncols=self.dim)


class ChiefFactor:
    """One factor top/bottom of a chief series."""

    __slots__ = ("algebra", "top", "bottom", "_view", "_central")

    def __init__(self, algebra: LieAlgebra, top: Subspace, bottom: Subspace):
        if not bottom < top:
            raise NotNestedError("chief factor requires bottom < top")
        self.algebra = algebra
        self.top = top
        self.bottom = bottom
        self._view = None
        self._central = {}

    @property
    def dim(self) -> int:
        return self.top.dim - self.bottom.dim

    def view(self) -> FactorView:
        if self._view is None:
            self._view = FactorView(self.algebra, self.top, self.bottom)
        return self._view

    def module(self) -> LModule:
        """The factor as a module over the full algebra."""
        view = self.view()
        actions = [view.action_matrix(x) for x in self.algebra.basis_vectors()]
        return LModule(self.algebra, actions, dim=view.dim)

    def __repr__(self) -> str:
        return "ChiefFactor(dim %d over dim %d)" % (self.top.dim, self.bottom.dim)


class ChiefSeries:
    """Ascending chain of ideals with irreducible factors."""

    __slots__ = ("algebra", "ideals", "factors")

    def __init__(self, algebra: LieAlgebra, ideals: Sequence[Subspace]):
        self.algebra = algebra
        self.ideals = tuple(ideals)
        self.factors = tuple(
            ChiefFactor(algebra, top, bottom)
            for bottom, top in zip(self.ideals, self.ideals[1:])
        )

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)


def _ideal_closure(algebra: LieAlgebra, vectors) -> Subspace:
    from .linalg import EchelonAccumulator

    acc = EchelonAccumulator(algebra.field, algebra.dim)
    for v in vectors:
        acc.add(v)
    basis_vectors = algebra.basis_vectors()
    fresh = [tuple(r) for r in acc.rows]
    while fresh:
        produced = []
        for v in fresh:
            for e in basis_vectors:
                w = algebra.bracket(e, v)
                if any(w) and acc.add(w):
                    produced.append(w)
        fresh = produced
    return acc.to_subspace()


def _last_derived_term(algebra: LieAlgebra) -> Subspace:
    series = algebra.derived_series()
    for term in reversed(series):
        if not term.is_zero():
            return term
    return series[0]


def _minimal_ideal_gfp(algebra: LieAlgebra, last: bool = False) -> Subspace:
    # The smallest-dimension ideal closure of a vector of the last nonzero
    # derived term is a minimal ideal; ties are broken by canonical basis.
    # With last=True the basis tie-break flips, giving an alternate choice
    # for series cross-validation.
    w = _last_derived_term(algebra)
    p = algebra.field.p
    closures = {}
    for coeffs in product(range(p), repeat=w.dim):
        if not any(coeffs):
            continue
        vec = tuple([0] * algebra.dim)
        for c, row in zip(coeffs, w.basis):
            if c:
                vec = vec_add(algebra.field, vec, vec_scale(algebra.field, c, row))
        ideal = _ideal_closure(algebra, [vec])
        closures[(ideal.dim, ideal.basis)] = ideal
    least_dim = min(key[0] for key in closures)
    candidates = sorted(key for key in closures if key[0] == least_dim)
    return closures[candidates[-1] if last else candidates[0]]


def _char_poly(rows: list) -> list:
    """Monic characteristic polynomial coefficients [1, c1, ..., ck]."""
    k = len(rows)
    coeffs = [Fraction(1)]
    m = [row[:] for row in rows]
    for step in range(1, k + 1):
        tr = sum(m[i][i] for i in range(k))
        c = -tr / step
        coeffs.append(c)
        if step == k:
            break
        for i in range(k):
            m[i][i] += c
        m = [
            [sum(rows[i][t] * m[t][j] for t in range(k)) for j in range(k)]
            for i in range(k)
        ]
    return coeffs


def _divisors(n: int) -> list:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _rational_roots(coeffs: list) -> list:
    """All rational roots of a monic polynomial with Fraction coefficients."""
    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in coeffs]
    # trailing zero coefficients mean 0 is a root; deflate them away
    roots = set()
    while len(ints) > 1 and ints[-1] == 0:
        roots.add(Fraction(0))
        ints = ints[:-1]
    if len(ints) > 1:
        lead, const = ints[0], ints[-1]
        for num in _divisors(const):
            for den in _divisors(lead):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    acc = Fraction(0)
                    for c in ints:
                        acc = acc * cand + c
                    if acc == 0:
                        roots.add(cand)
    return sorted(roots)


def _restricted_operator(algebra: LieAlgebra, space: Subspace, basis_index: int) -> list:
    """Matrix of ad(e_i) on the invariant subspace, in its canonical basis."""
    x = standard_vector(algebra.field, algebra.dim, basis_index)
    rows = []
    for v in space.basis:
        w = algebra.bracket(x, v)
        coords = space.coordinates(w)
        if coords is None:
            raise NotNestedError("subspace is not invariant")
        rows.append(list(coords))
    return rows


def _is_scalar(rows: list) -> bool:
    k = len(rows)
    for i in range(k):
        for j in range(k):
            if i != j and rows[i][j]:
                return False
    return all(rows[i][i] == rows[0][0] for i in range(k))


def _minimal_ideal_q(algebra: LieAlgebra) -> Subspace:
    centre = algebra.centre()
    if not centre.is_zero():
        return Subspace.span(algebra.field, algebra.dim, [centre.basis[0]])
    # A non-central invariant line lies in every lower central term and is
    # killed by [L, L], so refine inside that ideal; the induced operators
    # commute there.
    residual = algebra.lower_central_series()[-1]
    w1 = residual & algebra.centralizer(algebra.derived_subalgebra())
    if w1.is_zero():
        raise UnsupportedFieldError("no rational invariant line available")
    queue = [w1]
    while queue:
        space = queue.pop(0)
        split = False
        for i in range(algebra.dim):
            rows = _restricted_operator(algebra, space, i)
            if _is_scalar(rows):
                continue
            coeffs = _char_poly(rows)
            branches = []
            k = len(rows)
            for lam in _rational_roots(coeffs):
                shifted = [
                    [rows[a][b] - (lam if a == b else 0) for b in range(k)]
                    for a in range(k)
                ]
                eig = Matrix(algebra.field, shifted, ncols=k).left_kernel()
                vecs = []
                for coords in eig:
                    v = tuple([algebra.field.zero()] * algebra.dim)
                    for c, row in zip(coords, space.basis):
                        if c:
                            v = vec_add(algebra.field, v, vec_scale(algebra.field, c, row))
                    vecs.append(v)
                sub = Subspace.span(algebra.field, algebra.dim, vecs)
                if not sub.is_zero():
                    branches.append(sub)
            queue.extend(branches)
            split = True
            break
        if not split:
            # every basis operator acts as a scalar here: any line is an ideal
            return Subspace.span(algebra.field, algebra.dim, [space.basis[0]])
    raise UnsupportedFieldError("no rational invariant line available")


def minimal_ideal(algebra: LieAlgebra, alternate: bool = False) -> Subspace:
    """A minimal ideal, chosen deterministically.

    Requires a soluble nonzero algebra.  Over Q the search finds an
    invariant line and raises UnsupportedFieldError when none exists, which
    happens exactly when every minimal ideal has dimension above 1.  Over
    GF(p), alternate=True flips the tie-break among candidates, supplying a
    second choice for series cross-validation.
    """
    if algebra.dim == 0:
        raise ZeroAlgebraError("the zero algebra has no minimal ideal")
    if not algebra.is_soluble():
        raise NotSolubleError("minimal ideal search implemented for soluble algebras")
    if algebra.field.p is None:
        return _minimal_ideal_q(algebra)
    return _minimal_ideal_gfp(algebra, last=alternate)


def chief_series(algebra: LieAlgebra, alternate: bool = False) -> ChiefSeries:
    """Chief series built by repeatedly lifting a minimal ideal of the quotient."""
    cache_key = "chief_series_alt" if alternate else "chief_series"
    cached = algebra._cache.get(cache_key)
    if cached is not None:
        return cached
    if not algebra.is_soluble():
        raise NotSolubleError("chief series implemented for soluble algebras")
    ideals = [algebra.zero_space()]
    while ideals[-1].dim < algebra.dim:
        quo, qmap = algebra.quotient(ideals[-1])
        bottom_up = minimal_ideal(quo, alternate=alternate)
        ideals.append(qmap.lift_subspace(bottom_up))
    series = ChiefSeries(algebra, ideals)
    algebra._cache[cache_key] = series
    return series


def covers(subspace: Subspace, factor: ChiefFactor) -> bool:
    """U covers A/B: U + B contains A."""
    return factor.top <= (subspace + factor.bottom)


def avoids(subspace: Subspace, factor: ChiefFactor) -> bool:
    """U avoids A/B: U meet A lies inside B."""
    return (subspace & factor.top) <= factor.bottom


class SplitExtension:
    """Split extension of a module by its acting algebra.

    Coordinates: acting algebra first, module second.  The module sits
    inside the extension as an abelian ideal.
    """

    __slots__ = ("module", "algebra", "acting_dim", "module_dim")

    def __init__(self, module: LModule):
        module.validate()
        acting = module.algebra
        a, m = acting.dim, module.dim
        field = acting.field
        brackets = []
        for i in range(a):
            for j in range(i + 1, a):
                vec = acting.table[i][j]
                if any(vec):
                    brackets.append(((i, j), tuple(vec) + tuple([field.zero()] * m)))
        zero_a = tuple([field.zero()] * a)
        for i in range(a):
            rows = module.actions[i].rows
            for u in range(m):
                vec = rows[u]
                if any(vec):
                    brackets.append(((i, a + u), zero_a + tuple(vec)))
        self.module = module
        self.acting_dim = a
        self.module_dim = m
        self.algebra = LieAlgebra(field, a + m, brackets)

    def include_acting(self, vec: Sequence) -> tuple:
        field = self.module.algebra.field
        return tuple(vec) + tuple([field.zero()] * self.module_dim)

    def include_module(self, vec: Sequence) -> tuple:
        field = self.module.algebra.field
        return tuple([field.zero()] * self.acting_dim) + tuple(vec)

    def acting_part(self, vec: Sequence) -> tuple:
        return tuple(vec[: self.acting_dim])

    def module_part(self, vec: Sequence) -> tuple:
        return tuple(vec[self.acting_dim :])

    def module_subspace(self) -> Subspace:
        return Subspace.span(
            self.module.algebra.field,
            self.acting_dim + self.module_dim,
            [self.include_module(standard_vector(self.module.algebra.field, self.module_dim, u)) for u in range(self.module_dim)],
        )

    def acting_subspace(self) -> Subspace:
        return Subspace.span(
            self.module.algebra.field,
            self.acting_dim + self.module_dim,
            [self.include_acting(standard_vector(self.module.algebra.field, self.acting_dim, i)) for i in range(self.acting_dim)],
        )


def split_extension(module: LModule) -> SplitExtension:
    return SplitExtension(module)


def split_extension_by_derivation(algebra: LieAlgebra, derivation) -> LieAlgebra:
    """Adjoin one outer generator x acting as the given derivation.

    The original algebra keeps coordinates 0..n-1; x is the last basis
    vector, with [x, y] = d(y).  Requires the Leibniz identity.
    """
    rows = derivation.rows if isinstance(derivation, Matrix) else tuple(tuple(r) for r in derivation)
    n = algebra.dim
    if len(rows) != n or any(len(r) != n for r in rows):
        raise DimensionMismatchError("derivation matrix must be %d x %d" % (n, n))
    d = Matrix(algebra.field, rows, ncols=n)
    for i in range(n):
        for j in range(i + 1, n):
            lhs = d.act(algebra.table[i][j])
            rhs = vec_add(
                algebra.field,
                algebra.bracket(d.rows[i], standard_vector(algebra.field, n, j)),
                algebra.bracket(standard_vector(algebra.field, n, i), d.rows[j]),
            )
            if lhs != rhs:
                raise NotADerivationError("Leibniz identity fails on pair (%d, %d)" % (i + 1, j + 1))
    field = algebra.field
    brackets = []
    for i in range(n):
        for j in range(i + 1, n):
            vec = algebra.table[i][j]
            if any(vec):
                brackets.append(((i, j), tuple(vec) + (field.zero(),)))
    for i in range(n):
        img = d.rows[i]
        if any(img):
            # [e_i, x] = -d(e_i)
            brackets.append(((i, n), tuple(field.neg(c) for c in img) + (field.zero(),)))
    return LieAlgebra(field, n + 1, brackets)
