"""Saturated formations and the classification machinery built on them.

A formation is used here purely through membership of concrete algebras:
quotients, split extensions, and chain members.  Three instances are
provided; quotient-closure is property-tested rather than assumed.

A maximal subalgebra complements exactly one factor of any chief series
(it covers the rest), and it is classed normal precisely when that factor
is central relative to the formation; the equivalent quotient-by-core
membership test is evaluated independently and any disagreement is raised,
never swallowed.  Normalisers are the end points of descending chains of
critical maximal subalgebras, computed recursively on the restricted
algebras so interned structures share their caches.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable, Sequence

from .algebra import LieAlgebra
from .chief import ChiefFactor, LModule, SplitExtension, avoids, chief_series, covers
from .enumeration import enumerate_ideals, enumerate_subalgebras
from .errors import (
    CriteriaDisagreeError,
    NoCriticalDescentError,
    NotASubalgebraError,
    ParseError,
    UnsupportedFieldError,
)
from .linalg import Subspace


class Formation:
    """Named membership predicate over soluble Lie algebras."""

    __slots__ = ("name", "membership")

    def __init__(self, name: str, membership: Callable[[LieAlgebra], bool]):
        self.name = name
        self.membership = membership

    def contains(self, algebra: LieAlgebra) -> bool:
        return self.membership(algebra)

    def __repr__(self) -> str:
        return "Formation(%s)" % self.name


def _supersoluble(algebra: LieAlgebra) -> bool:
    try:
        series = chief_series(algebra)
    except UnsupportedFieldError:
        # no rational invariant line somewhere up the quotient tower, so
        # some chief factor has dimension above 1
        return False
    return all(f.dim == 1 for f in series.factors)


NILPOTENT = Formation("nilpotent", lambda L: L.is_nilpotent())
SUPERSOLUBLE = Formation("supersoluble", _supersoluble)
ALL_SOLUBLE = Formation("all-soluble", lambda L: L.is_soluble())

FORMATIONS = {f.name: f for f in (NILPOTENT, SUPERSOLUBLE, ALL_SOLUBLE)}


def formation_by_name(name: str) -> Formation:
    try:
        return FORMATIONS[name]
    except KeyError:
        raise ParseError(
            "unknown formation %r (have: %s)" % (name, ", ".join(sorted(FORMATIONS)))
        ) from None


def is_member(formation: Formation, algebra: LieAlgebra) -> bool:
    return formation.contains(algebra)


def is_f_central(algebra: LieAlgebra, factor: ChiefFactor, formation: Formation) -> bool:
    """Split extension of the factor by L over its centraliser lies in F."""
    cached = factor._central.get(formation.name)
    if cached is not None:
        return cached
    cent = algebra.centralizer_of_factor(factor.top, factor.bottom)
    quo, qmap = algebra.quotient(cent)
    view = factor.view()
    actions = [view.action_matrix(qmap.lift(x)) for x in quo.basis_vectors()]
    module = LModule(quo, actions, dim=view.dim)
    result = formation.contains(SplitExtension(module).algebra)
    factor._central[formation.name] = result
    return result


class Verdict(Enum):
    F_NORMAL = "f-normal"
    F_ABNORMAL = "f-abnormal"


class MaximalClassification:
    """Outcome of classifying one maximal subalgebra."""

    __slots__ = ("subalgebra", "verdict", "witness", "complemented")

    def __init__(self, subalgebra: Subspace, verdict: Verdict, witness, complemented: ChiefFactor):
        self.subalgebra = subalgebra
        self.verdict = verdict
        self.witness = witness
        self.complemented = complemented

    @property
    def is_normal(self) -> bool:
        return self.verdict is Verdict.F_NORMAL

    def __repr__(self) -> str:
        return "MaximalClassification(%s)" % self.verdict.value


class NormaliserChain:
    """Descending chain of subalgebras from the algebra to a normaliser."""

    __slots__ = ("chain",)

    def __init__(self, chain: Sequence[Subspace]):
        self.chain = tuple(chain)

    @property
    def terminal(self) -> Subspace:
        return self.chain[-1]

    def __len__(self) -> int:
        return len(self.chain)

    def __iter__(self):
        return iter(self.chain)

    def __repr__(self) -> str:
        return "NormaliserChain(%s)" % " > ".join(str(s.dim) for s in self.chain)


def _subalgebra_key(s: Subspace) -> tuple:
    return (s.dim, s.basis)


def maximal_subalgebras(algebra: LieAlgebra) -> list:
    """Maximal elements of the proper-subalgebra order, sorted canonically."""
    cached = algebra._cache.get("maximal_subalgebras")
    if cached is None:
        subs = [s for s in enumerate_subalgebras(algebra) if s.dim < algebra.dim]
        subs.sort(key=_subalgebra_key)
        maximal = []
        for s in subs:
            if not any(other.dim > s.dim and s <= other for other in subs if other is not s):
                maximal.append(s)
        cached = maximal
        algebra._cache["maximal_subalgebras"] = cached
    return list(cached)


def classify_maximal(
    algebra: LieAlgebra, maximal: Subspace, formation: Formation
) -> MaximalClassification:
    """Both Definition-style verdicts for one maximal subalgebra.

    Core criterion: the quotient by the largest ideal inside M lies in F.
    Complement criterion: the unique chief factor M complements is central
    relative to F.  They must agree; disagreement is an implementation bug
    and raises CriteriaDisagreeError.
    """
    cache_key = ("classify_maximal", maximal, formation.name)
    cached = algebra._cache.get(cache_key)
    if cached is not None:
        return cached
    core = algebra.core(maximal)
    quo, _ = algebra.quotient(core)
    core_verdict = formation.contains(quo)

    complemented = None
    for factor in chief_series(algebra).factors:
        if avoids(maximal, factor):
            if complemented is not None:
                raise CriteriaDisagreeError(
                    "maximal subalgebra avoids more than one chief factor"
                )
            complemented = factor
    if complemented is None:
        raise CriteriaDisagreeError("maximal subalgebra avoids no chief factor")
    if (maximal + complemented.top).dim != algebra.dim:
        # the avoided factor of a maximal subalgebra satisfies M + A = L
        raise CriteriaDisagreeError("avoided chief factor is not complemented")
    complement_verdict = is_f_central(algebra, complemented, formation)

    if core_verdict != complement_verdict:
        raise CriteriaDisagreeError(
            "core criterion says %s, complement criterion says %s"
            % (core_verdict, complement_verdict)
        )
    verdict = Verdict.F_NORMAL if core_verdict else Verdict.F_ABNORMAL
    witness = complemented if core_verdict else None
    result = MaximalClassification(maximal, verdict, witness, complemented)
    algebra._cache[cache_key] = result
    return result


def is_f_critical(algebra: LieAlgebra, maximal: Subspace, formation: Formation) -> bool:
    """Abnormal and M + N(L) = L."""
    if classify_maximal(algebra, maximal, formation).is_normal:
        return False
    return (maximal + algebra.nilradical()).dim == algebra.dim


def f_normalisers(algebra: LieAlgebra, formation: Formation) -> list:
    """All normaliser subalgebras with one witnessing chain each.

    Results are (subspace, chain) pairs in the algebra's coordinates,
    deduplicated by canonical subspace and sorted.
    """
    cache_key = ("f_normalisers", formation.name)
    cached = algebra._cache.get(cache_key)
    if cached is not None:
        return list(cached)
    full = algebra.full_space()
    if formation.contains(algebra):
        result = [(full, NormaliserChain([full]))]
        algebra._cache[cache_key] = result
        return list(result)
    if algebra.field.p is None:
        raise UnsupportedFieldError("normaliser computation needs a finite field")
    critical = [
        m for m in maximal_subalgebras(algebra) if is_f_critical(algebra, m, formation)
    ]
    if not critical:
        raise NoCriticalDescentError(
            "algebra outside the formation has no critical maximal subalgebra"
        )
    found = {}
    for m in critical:
        sub, inc = algebra.restrict(m)
        for v_sub, chain_sub in f_normalisers(sub, formation):
            v = inc.include_subspace(v_sub)
            if v not in found:
                lifted = [inc.include_subspace(c) for c in chain_sub]
                found[v] = NormaliserChain([full] + lifted)
    result = sorted(found.items(), key=lambda item: _subalgebra_key(item[0]))
    algebra._cache[cache_key] = result
    return list(result)


class CoverAvoidEntry:
    __slots__ = ("factor", "central", "covered", "avoided")

    def __init__(self, factor: ChiefFactor, central: bool, covered: bool, avoided: bool):
        self.factor = factor
        self.central = central
        self.covered = covered
        self.avoided = avoided

    @property
    def ok(self) -> bool:
        return self.covered if self.central else self.avoided


class CoverAvoidReport:
    """Per-factor cover/avoid verdicts for one subalgebra."""

    __slots__ = ("algebra", "subalgebra", "entries")

    def __init__(self, algebra: LieAlgebra, subalgebra: Subspace, entries):
        self.algebra = algebra
        self.subalgebra = subalgebra
        self.entries = tuple(entries)

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def violations(self) -> list:
        return [e for e in self.entries if not e.ok]


def cover_avoid_check(
    algebra: LieAlgebra, subalgebra: Subspace, formation: Formation
) -> CoverAvoidReport:
    """Covers every central factor, avoids every eccentric one."""
    entries = []
    for factor in chief_series(algebra).factors:
        central = is_f_central(algebra, factor, formation)
        entries.append(
            CoverAvoidEntry(factor, central, covers(subalgebra, factor), avoids(subalgebra, factor))
        )
    return CoverAvoidReport(algebra, subalgebra, entries)


def is_f_projector(algebra: LieAlgebra, subalgebra: Subspace, formation: Formation) -> bool:
    """Brute-force projector test.

    U must lie in F, and for every ideal K the image of U + K in the
    quotient must be F-maximal there: no strictly larger F-subalgebra of
    the quotient contains it.
    """
    if algebra.field.p is None:
        raise UnsupportedFieldError("projector test needs a finite field")
    if not algebra.is_subalgebra(subalgebra):
        raise NotASubalgebraError("projector test requires a subalgebra")
    sub_algebra, _ = algebra.restrict(subalgebra)
    if not formation.contains(sub_algebra):
        return False
    for ideal in enumerate_ideals(algebra):
        quo, qmap = algebra.quotient(ideal)
        image = qmap.project_subspace(subalgebra + ideal)
        image_algebra, _ = quo.restrict(image)
        if not formation.contains(image_algebra):
            return False
        for t in enumerate_subalgebras(quo):
            if image < t:
                talg, _ = quo.restrict(t)
                if formation.contains(talg):
                    return False
    return True
