"""Generation of soluble algebras and exhaustive subalgebra/ideal listings.

Every soluble algebra of dimension k+1 over F has a codimension-1 ideal
(any hyperplane containing [L, L]), so it is a one-dimensional split
extension of a soluble algebra of dimension k by a derivation.  Growing
dimension by dimension from the 1-dimensional algebra and extending by
every derivation therefore reaches every isomorphism type, with repetition
and without isomorphism deduplication.  When a step would exceed the
per-parent cap, a seeded sample of the derivation space keeps runs
reproducible.
"""

from __future__ import annotations

import random
from typing import Iterator, Sequence

from .algebra import LieAlgebra
from .chief import split_extension_by_derivation
from .derivations import derivation_algebra
from .errors import BudgetExceededError, ParseError, UnsupportedFieldError
from .fields import Field
from .linalg import Matrix, enumerate_subspaces

ENUMERATION_DIM_LIMIT = 5


class EnumerationBudget:
    """Bounds for the algebra stream: dimensions, fields, sampling."""

    __slots__ = ("max_dim", "fields", "per_step_cap", "seed")

    def __init__(
        self,
        max_dim: int,
        fields: Sequence[Field],
        per_step_cap: int | None = None,
        seed: int = 0,
    ):
        if not isinstance(max_dim, int) or max_dim < 1:
            raise ParseError("max_dim must be a positive integer")
        fields = tuple(fields)
        for f in fields:
            if f.p is None:
                raise UnsupportedFieldError("the algebra stream needs prime fields")
        if per_step_cap is not None and (not isinstance(per_step_cap, int) or per_step_cap < 1):
            raise ParseError("per_step_cap must be a positive integer")
        self.max_dim = max_dim
        self.fields = fields
        self.per_step_cap = per_step_cap
        self.seed = seed


def _mix(seed: int, p: int, level: int, parent_index: int) -> int:
    # plain integer mixing; never the builtin hash, whose string behaviour
    # varies between runs
    h = seed & 0xFFFFFFFFFFFFFFFF
    for part in (p, level, parent_index):
        h = (h * 1000003 + part + 0x9E3779B9) & 0xFFFFFFFFFFFFFFFF
    return h


def _derivation_from_index(der, index: int, p: int) -> Matrix:
    coeffs = []
    for _ in range(der.dim):
        coeffs.append(index % p)
        index //= p
    n = der.parent.dim
    acc = [[0] * n for _ in range(n)]
    for c, d in zip(coeffs, der.basis):
        if c:
            for r in range(n):
                row = d.matrix.rows[r]
                for k in range(n):
                    if row[k]:
                        acc[r][k] = (acc[r][k] + c * row[k]) % p
    return Matrix(der.parent.field, acc, ncols=n)


def enumerate_soluble(budget: EnumerationBudget) -> Iterator[LieAlgebra]:
    """Stream soluble algebras per the budget, dimension by dimension."""
    for field in budget.fields:
        p = field.p
        level = [LieAlgebra.abelian(field, 1)]
        yield level[0]
        for k in range(1, budget.max_dim):
            next_level = []
            for parent_index, parent in enumerate(level):
                der = derivation_algebra(parent)
                total = p**der.dim
                if budget.per_step_cap is not None and total > budget.per_step_cap:
                    rng = random.Random(_mix(budget.seed, p, k, parent_index))
                    indices = sorted(rng.sample(range(total), budget.per_step_cap))
                else:
                    indices = range(total)
                for index in indices:
                    d = _derivation_from_index(der, index, p)
                    child = split_extension_by_derivation(parent, d)
                    next_level.append(child)
                    yield child
            level = next_level


def _check_enumerable(algebra: LieAlgebra) -> None:
    if algebra.field.p is None:
        raise UnsupportedFieldError("exhaustive enumeration needs a finite field")
    if algebra.dim > ENUMERATION_DIM_LIMIT:
        raise BudgetExceededError(
            "exhaustive enumeration limited to dimension %d" % ENUMERATION_DIM_LIMIT
        )


def enumerate_subalgebras(algebra: LieAlgebra) -> list:
    """Every bracket-closed subspace, canonical and duplicate-free."""
    _check_enumerable(algebra)
    cached = algebra._cache.get("all_subalgebras")
    if cached is None:
        cached = [
            s for s in enumerate_subspaces(algebra.field, algebra.dim) if algebra.is_subalgebra(s)
        ]
        algebra._cache["all_subalgebras"] = cached
    return list(cached)


def enumerate_ideals(algebra: LieAlgebra) -> list:
    """Every bracket-invariant subspace, canonical and duplicate-free."""
    _check_enumerable(algebra)
    cached = algebra._cache.get("all_ideals")
    if cached is None:
        cached = [s for s in enumerate_subalgebras(algebra) if algebra.is_ideal(s)]
        algebra._cache["all_ideals"] = cached
    return list(cached)


def minimal_ideals_exhaustive(algebra: LieAlgebra) -> list:
    """All minimal nonzero ideals, straight from the ideal listing."""
    nonzero = [s for s in enumerate_ideals(algebra) if not s.is_zero()]
    return [a for a in nonzero if not any(b.dim < a.dim and b <= a for b in nonzero)]
