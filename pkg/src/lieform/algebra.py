"""Lie algebras given by exact structure constants.

An algebra is a field, a dimension n, and the brackets [e_i, e_j] of basis
pairs; everything else (series, centralisers, cores, quotients) is linear
algebra over that table.  Instances are interned on (field, table), so
structurally equal algebras are the same object and share their cache of
derived data.  That sharing is what keeps the exhaustive sweeps fast.

JSON form (1-based indices, i < j, scalars as strings):

    {"field": "GF(3)", "dim": 2,
     "brackets": [{"i": 1, "j": 2, "value": ["0", "1"]}]}

Omitted pairs bracket to zero; antisymmetry and [x, x] = 0 are implicit.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    DimensionMismatchError,
    JacobiViolationError,
    NotAnIdealError,
    NotASubalgebraError,
    NotNestedError,
    NotSolubleError,
    ParseError,
)
from .fields import Field
from .linalg import (
    EchelonAccumulator,
    Matrix,
    Subspace,
    standard_vector,
    vec_add,
    vec_scale,
    zero_vector,
)


def _coerce(field: Field, x):
    if isinstance(x, bool):
        raise ParseError("bool is not a scalar")
    if isinstance(x, int):
        return field.from_int(x)
    if isinstance(x, Fraction):
        if field.p is not None:
            if x.denominator % field.p == 0:
                raise ZeroDivisionError("denominator divisible by %d" % field.p)
            return (x.numerator * pow(x.denominator, -1, field.p)) % field.p
        return x
    raise ParseError("unsupported scalar %r" % (x,))


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q or GF(p).

    table[i][j] is the coordinate tuple of [e_i, e_j]; the full table is
    stored with antisymmetry filled in.  Construction does not check the
    Jacobi identity; call validate() on untrusted input (from_dict does).
    """

    __slots__ = ("field", "dim", "table", "_cache")

    _interned: dict = {}

    def __new__(cls, field: Field, dim: int, brackets=()):
        if not isinstance(dim, int) or dim < 0:
            raise ParseError("dimension must be a non-negative integer")
        zero_row = tuple([field.zero()] * dim)
        rows = [[zero_row] * dim for _ in range(dim)]
        items = brackets.items() if isinstance(brackets, Mapping) else brackets
        for (i, j), value in items:
            if not (0 <= i < j < dim):
                raise ParseError("bracket pair (%d, %d) out of range for dim %d" % (i, j, dim))
            vec = tuple(_coerce(field, x) for x in value)
            if len(vec) != dim:
                raise DimensionMismatchError("bracket value length %d, dim %d" % (len(vec), dim))
            rows[i][j] = vec
            rows[j][i] = tuple(field.neg(x) for x in vec)
        table = tuple(tuple(r) for r in rows)
        return cls._from_table(field, table)

    @classmethod
    def _from_table(cls, field: Field, table: tuple) -> "LieAlgebra":
        key = (field, table)
        inst = cls._interned.get(key)
        if inst is None:
            inst = object.__new__(cls)
            inst.field = field
            inst.dim = len(table)
            inst.table = table
            inst._cache = {}
            cls._interned[key] = inst
        return inst

    def __init__(self, *args, **kwargs):
        pass

    # Interning makes identity and structural equality coincide.

    def __eq__(self, other) -> bool:
        return self is other or (
            isinstance(other, LieAlgebra) and self.field == other.field and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash((self.field, self.table))

    def __repr__(self) -> str:
        return "LieAlgebra(%s, dim %d)" % (self.field, self.dim)

    def structure_key(self) -> tuple:
        """Deterministic sort key among algebras over the same field."""
        if self.field.p is None:
            flat = tuple(
                (x.numerator, x.denominator) for row in self.table for vec in row for x in vec
            )
        else:
            flat = tuple(x for row in self.table for vec in row for x in vec)
        return (self.dim, flat)

    # Construction helpers

    @staticmethod
    def abelian(field: Field, dim: int) -> "LieAlgebra":
        return LieAlgebra(field, dim)

    @staticmethod
    def from_dict(data, validate: bool = True) -> "LieAlgebra":
        if not isinstance(data, dict):
            raise ParseError("algebra document must be a JSON object")
        missing = {"field", "dim", "brackets"} - set(data)
        if missing:
            raise ParseError("missing keys: %s" % ", ".join(sorted(missing)))
        field = Field.from_string(data["field"]) if isinstance(data["field"], str) else None
        if field is None:
            raise ParseError("field must be a string")
        dim = data["dim"]
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            raise ParseError("dim must be a non-negative integer")
        entries = data["brackets"]
        if not isinstance(entries, list):
            raise ParseError("brackets must be a list")
        seen = set()
        brackets = []
        for entry in entries:
            if not isinstance(entry, dict) or {"i", "j", "value"} - set(entry):
                raise ParseError("each bracket needs keys i, j, value")
            i, j, value = entry["i"], entry["j"], entry["value"]
            if not isinstance(i, int) or not isinstance(j, int) or isinstance(i, bool) or isinstance(j, bool):
                raise ParseError("bracket indices must be integers")
            if not (1 <= i < j <= dim):
                raise ParseError("bracket pair (%d, %d) must satisfy 1 <= i < j <= %d" % (i, j, dim))
            if (i, j) in seen:
                raise ParseError("duplicate bracket pair (%d, %d)" % (i, j))
            seen.add((i, j))
            if not isinstance(value, list) or len(value) != dim:
                raise ParseError("bracket value must be a list of %d scalars" % dim)
            vec = []
            for s in value:
                if not isinstance(s, str):
                    raise ParseError("scalars must be strings, got %r" % (s,))
                vec.append(field.parse(s))
            brackets.append(((i - 1, j - 1), tuple(vec)))
        algebra = LieAlgebra(field, dim, brackets)
        if validate:
            algebra.validate()
        return algebra

    @staticmethod
    def from_json(text: str, validate: bool = True) -> "LieAlgebra":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError("invalid JSON: %s" % exc) from exc
        return LieAlgebra.from_dict(data, validate=validate)

    def to_dict(self) -> dict:
        fmt = self.field.format
        brackets = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                vec = self.table[i][j]
                if any(vec):
                    brackets.append({"i": i + 1, "j": j + 1, "value": [fmt(x) for x in vec]})
        return {"field": str(self.field), "dim": self.dim, "brackets": brackets}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(", ", ": "))

    # Bracket and validation

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        """[x, y] in coordinates."""
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionMismatchError("vectors must have length %d" % n)
        p = self.field.p
        out = [Fraction(0)] * n if p is None else [0] * n
        table = self.table
        for i, xi in enumerate(x):
            if not xi:
                continue
            ti = table[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                row = ti[j]
                for k, rk in enumerate(row):
                    if rk:
                        out[k] += c * rk
        if p is not None:
            return tuple(v % p for v in out)
        return tuple(out)

    def validate(self) -> None:
        """Check the Jacobi identity on all basis triples; raises on failure."""
        n = self.dim
        table = self.table
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s = self.bracket(table[i][j], standard_vector(self.field, n, k))
                    s = vec_add(self.field, s, self.bracket(table[j][k], standard_vector(self.field, n, i)))
                    s = vec_add(self.field, s, self.bracket(table[k][i], standard_vector(self.field, n, j)))
                    if any(s):
                        raise JacobiViolationError((i + 1, j + 1, k + 1))

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of ad x in the right-action convention: [x, y] = y * ad(x)."""
        n = self.dim
        table = self.table
        p = self.field.p
        rows = []
        for i in range(n):
            acc = [Fraction(0)] * n if p is None else [0] * n
            for k, xk in enumerate(x):
                if not xk:
                    continue
                row = table[k][i]
                for m, rm in enumerate(row):
                    if rm:
                        acc[m] += xk * rm
            if p is not None:
                acc = [v % p for v in acc]
            rows.append(acc)
        return Matrix(self.field, rows, ncols=n)

    # Subspaces of the algebra

    def full_space(self) -> Subspace:
        return Subspace.full_space(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero_space(self.field, self.dim)

    def span(self, vectors: Iterable[Sequence]) -> Subspace:
        return Subspace.span(self.field, self.dim, vectors)

    def basis_vectors(self) -> list:
        return [standard_vector(self.field, self.dim, i) for i in range(self.dim)]

    def product_space(self, a: Subspace, b: Subspace) -> Subspace:
        """Span of [a, b] over basis pairs."""
        acc = EchelonAccumulator(self.field, self.dim)
        for x in a.basis:
            for y in b.basis:
                acc.add(self.bracket(x, y))
        return acc.to_subspace()

    def is_subalgebra(self, s: Subspace) -> bool:
        basis = s.basis
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                if not s.contains(self.bracket(basis[i], basis[j])):
                    return False
        return True

    def is_ideal(self, s: Subspace) -> bool:
        for x in self.basis_vectors():
            for y in s.basis:
                if not s.contains(self.bracket(x, y)):
                    return False
        return True

    def subalgebra_closure(self, vectors) -> Subspace:
        """Smallest subalgebra containing the given subspace or vectors."""
        if isinstance(vectors, Subspace):
            vectors = vectors.basis
        acc = EchelonAccumulator(self.field, self.dim)
        for v in vectors:
            acc.add(v)
        fresh = [tuple(r) for r in acc.rows]
        while fresh:
            produced = []
            current = [tuple(r) for r in acc.rows]
            for x in fresh:
                for y in current:
                    w = self.bracket(x, y)
                    if any(w) and acc.add(w):
                        produced.append(w)
            fresh = produced
        return acc.to_subspace()

    # Series and structural subspaces.  Results are cached per instance;
    # interning makes the cache shared across every appearance of the same
    # structure-constant table.

    def derived_series(self) -> list:
        cached = self._cache.get("derived_series")
        if cached is None:
            series = [self.full_space()]
            while True:
                nxt = self.product_space(series[-1], series[-1])
                if nxt.dim == series[-1].dim:
                    break
                series.append(nxt)
                if nxt.is_zero():
                    break
            cached = series
            self._cache["derived_series"] = cached
        return list(cached)

    def lower_central_series(self) -> list:
        cached = self._cache.get("lower_central_series")
        if cached is None:
            full = self.full_space()
            series = [full]
            while True:
                nxt = self.product_space(full, series[-1])
                if nxt.dim == series[-1].dim:
                    break
                series.append(nxt)
                if nxt.is_zero():
                    break
            cached = series
            self._cache["lower_central_series"] = cached
        return list(cached)

    def is_soluble(self) -> bool:
        return self.derived_series()[-1].is_zero()

    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1].is_zero()

    def is_abelian(self) -> bool:
        return all(not any(vec) for row in self.table for vec in row)

    def derived_subalgebra(self) -> Subspace:
        series = self.derived_series()
        return series[1] if len(series) > 1 else series[0]

    def _reduction_matrix(self, s: Subspace) -> Matrix:
        """Matrix of v |-> residual of v mod s; kernel is exactly s."""
        rows = [s.reduce(standard_vector(self.field, self.dim, i)) for i in range(self.dim)]
        return Matrix(self.field, rows, ncols=self.dim)

    def centralizer(self, s: Subspace) -> Subspace:
        """{x : [x, s] = 0}."""
        return self.centralizer_of_factor(s, self.zero_space())

    def centralizer_of_factor(self, a: Subspace, b: Subspace) -> Subspace:
        """{x : [x, a] <= b}; for b = 0 the ordinary centraliser."""
        if not b.is_zero() and not b <= a:
            raise NotNestedError("factor requires b <= a")
        if a.is_zero():
            return self.full_space()
        n = self.dim
        reduce_b = None if b.is_zero() else self._reduction_matrix(b)
        # x |-> [x, a] is x * M_a with M_a rows k = [e_k, a].
        blocks = []
        for avec in a.basis:
            rows = [self.bracket(standard_vector(self.field, n, k), avec) for k in range(n)]
            m = Matrix(self.field, rows, ncols=n)
            if reduce_b is not None:
                m = m * reduce_b
            blocks.append(m)
        stacked = Matrix(
            self.field,
            [sum((list(m.rows[k]) for m in blocks), []) for k in range(n)],
            ncols=n * len(blocks),
        )
        return Subspace.span(self.field, n, stacked.left_kernel())

    def centre(self) -> Subspace:
        cached = self._cache.get("centre")
        if cached is None:
            cached = self.centralizer(self.full_space())
            self._cache["centre"] = cached
        return cached

    def normalizer(self, s: Subspace) -> Subspace:
        """{x : [x, s] <= s}; the idealiser of the subspace."""
        return self.centralizer_of_factor(s, s)

    def core(self, s: Subspace) -> Subspace:
        """Largest ideal of the algebra contained in s."""
        cached = self._cache.get(("core", s))
        if cached is not None:
            return cached
        result = self._core_uncached(s)
        self._cache[("core", s)] = result
        return result

    def _core_uncached(self, s: Subspace) -> Subspace:
        n = self.dim
        current = s
        while True:
            if current.is_zero():
                return current
            reduce_k = self._reduction_matrix(current)
            blocks = []
            for i in range(n):
                rows = [
                    self.bracket(standard_vector(self.field, n, i), standard_vector(self.field, n, k))
                    for k in range(n)
                ]
                blocks.append(Matrix(self.field, rows, ncols=n) * reduce_k)
            stacked = Matrix(
                self.field,
                [sum((list(m.rows[k]) for m in blocks), []) for k in range(n)],
                ncols=n * n,
            )
            invariant = Subspace.span(self.field, n, stacked.left_kernel())
            nxt = invariant & current
            if nxt.dim == current.dim:
                return current
            current = nxt

    def nilradical(self) -> Subspace:
        """Largest nilpotent ideal, via centralisers of a chief series."""
        cached = self._cache.get("nilradical")
        if cached is None:
            if not self.is_soluble():
                raise NotSolubleError("nilradical computed for soluble algebras only")
            from .chief import chief_series

            out = self.full_space()
            for factor in chief_series(self).factors:
                out = out & self.centralizer_of_factor(factor.top, factor.bottom)
            cached = out
            self._cache["nilradical"] = cached
        return cached

    # Derived algebras on subspaces and quotients

    def restrict(self, s: Subspace) -> tuple:
        """Algebra structure on a subalgebra s; returns (algebra, inclusion map).

        Raises NotASubalgebraError when s is not bracket-closed.
        """
        cached = self._cache.get(("restrict", s))
        if cached is not None:
            return cached
        basis = s.basis
        m = len(basis)
        brackets = []
        for i in range(m):
            for j in range(i + 1, m):
                w = self.bracket(basis[i], basis[j])
                coords = s.coordinates(w)
                if coords is None:
                    raise NotASubalgebraError("bracket leaves the subspace")
                if any(coords):
                    brackets.append(((i, j), coords))
        sub = LieAlgebra(self.field, m, brackets)
        result = (sub, SubspaceMap(self, s))
        self._cache[("restrict", s)] = result
        return result

    def quotient(self, ideal: Subspace) -> tuple:
        """Quotient by an ideal; returns (algebra, quotient map)."""
        cached = self._cache.get(("quotient", ideal))
        if cached is not None:
            return cached
        if not self.is_ideal(ideal):
            raise NotAnIdealError("quotient requires an ideal")
        qmap = QuotientMap(self, ideal)
        free = qmap.free
        m = len(free)
        brackets = []
        for a in range(m):
            for b in range(a + 1, m):
                w = self.bracket(
                    standard_vector(self.field, self.dim, free[a]),
                    standard_vector(self.field, self.dim, free[b]),
                )
                coords = qmap.project(w)
                if any(coords):
                    brackets.append(((a, b), coords))
        quo = LieAlgebra(self.field, m, brackets)
        qmap.algebra = quo
        self._cache[("quotient", ideal)] = (quo, qmap)
        return quo, qmap


class SubspaceMap:
    """Coordinates of a subalgebra relative to its canonical basis."""

    __slots__ = ("parent", "space")

    def __init__(self, parent: LieAlgebra, space: Subspace):
        self.parent = parent
        self.space = space

    def include(self, coords: Sequence) -> tuple:
        """Subalgebra coordinates to ambient coordinates."""
        out = zero_vector(self.parent.field, self.parent.dim)
        for c, row in zip(coords, self.space.basis):
            if c:
                out = vec_add(self.parent.field, out, vec_scale(self.parent.field, c, row))
        return out

    def restrict_vector(self, vec: Sequence) -> tuple:
        coords = self.space.coordinates(vec)
        if coords is None:
            raise NotNestedError("vector lies outside the subalgebra")
        return coords

    def include_subspace(self, s: Subspace) -> Subspace:
        return Subspace.span(
            self.parent.field, self.parent.dim, [self.include(v) for v in s.basis]
        )

    def restrict_subspace(self, s: Subspace) -> Subspace:
        return Subspace.span(
            self.parent.field, len(self.space.basis), [self.restrict_vector(v) for v in s.basis]
        )


class QuotientMap:
    """Projection onto a quotient and its canonical linear section.

    Quotient coordinates are the residual entries at the ideal's free
    columns, so project . lift is the identity.
    """

    __slots__ = ("parent", "ideal", "free", "algebra")

    def __init__(self, parent: LieAlgebra, ideal: Subspace):
        self.parent = parent
        self.ideal = ideal
        self.free = ideal.free_columns()
        self.algebra = None

    def project(self, vec: Sequence) -> tuple:
        residual = self.ideal.reduce(vec)
        return tuple(residual[c] for c in self.free)

    def lift(self, qvec: Sequence) -> tuple:
        out = [self.parent.field.zero()] * self.parent.dim
        for c, x in zip(self.free, qvec):
            out[c] = x
        return tuple(out)

    def project_subspace(self, s: Subspace) -> Subspace:
        return Subspace.span(
            self.parent.field, len(self.free), [self.project(v) for v in s.basis]
        )

    def lift_subspace(self, s: Subspace) -> Subspace:
        """Full preimage: the lifted basis together with the ideal."""
        vecs = [self.lift(v) for v in s.basis] + list(self.ideal.basis)
        return Subspace.span(self.parent.field, self.parent.dim, vecs)
