"""Acceptance gate: seven exhaustive checks, one verdict line each.

Each test prints a single pass/fail line on the real terminal (bypassing
capture) so the gate can be read off a plain pytest run. The two sweep
universes are shared via session fixtures:

  * GF(2), max_dim 4, uncapped through dim 3, cap 200 at dim 4, seed 1
  * GF(3), max_dim 3, uncapped
"""

import random
from fractions import Fraction

import pytest

from lieform import (
    NILPOTENT,
    EnumerationBudget,
    Field,
    Matrix,
    SweepConfig,
    derivation_algebra,
    enumerate_ideals,
    enumerate_soluble,
    enumerate_subalgebras,
    enumerate_subspaces,
    f_normalisers,
    gaussian_binomial,
    inner_derivations,
    is_f_projector,
    is_intravariant_extension,
    is_intravariant_linear,
    is_member,
    maximal_subalgebras,
    minimal_ideals_exhaustive,
    sweep_run,
)
from support import brute_force_derivations, h3, r2

F2 = Field.gf(2)
F3 = Field.gf(3)
Q = Field.rationals()

RUNTIME_BUDGET_SECONDS = 600.0


@pytest.fixture(scope="session")
def sweep_gf2():
    config = SweepConfig(
        field="GF(2)",
        max_dim=4,
        formations=("nilpotent", "all-soluble"),
        per_step_cap=200,
        seed=1,
    )
    return sweep_run(config)


@pytest.fixture(scope="session")
def sweep_gf3():
    config = SweepConfig(
        field="GF(3)",
        max_dim=3,
        formations=("nilpotent", "all-soluble"),
    )
    return sweep_run(config)


def small_universe():
    return list(enumerate_soluble(EnumerationBudget(max_dim=3, fields=(F2,))))


def both_universes():
    gf2 = enumerate_soluble(
        EnumerationBudget(max_dim=4, fields=(F2,), per_step_cap=200, seed=1)
    )
    gf3 = enumerate_soluble(EnumerationBudget(max_dim=3, fields=(F3,)))
    return list(gf2) + list(gf3)


def report(capsys, number, label, detail, failures):
    verdict = "PASS" if not failures else "FAIL"
    with capsys.disabled():
        print("\nacceptance %d (%s): %s — %s" % (number, label, verdict, detail))
    assert not failures, "%s: %r" % (label, failures[:5])


def test_criterion_1_normalisers_intravariant(sweep_gf2, sweep_gf3, capsys):
    """Every computed normaliser passes both intravariance criteria."""
    failures = []
    for result in (sweep_gf2, sweep_gf3):
        failures += result.intravariance_failures
        failures += result.descent_failures
    elapsed = sweep_gf2.elapsed + sweep_gf3.elapsed
    checked = sweep_gf2.normalisers_checked + sweep_gf3.normalisers_checked
    algebras = sweep_gf2.algebras + sweep_gf3.algebras
    detail = "%d algebras, %d normalisers, %.1fs (budget %.0fs)" % (
        algebras,
        checked,
        elapsed,
        RUNTIME_BUDGET_SECONDS,
    )
    assert elapsed < RUNTIME_BUDGET_SECONDS
    report(capsys, 1, "normalisers intravariant", detail, failures)


def test_criterion_2_cover_avoid(sweep_gf2, sweep_gf3, capsys):
    """Every normaliser covers central and avoids eccentric chief factors."""
    failures = sweep_gf2.cover_avoid_failures + sweep_gf3.cover_avoid_failures
    checked = sweep_gf2.normalisers_checked + sweep_gf3.normalisers_checked
    report(capsys, 2, "cover-avoid", "%d normalisers" % checked, failures)


def test_criterion_3_classification_agreement(sweep_gf2, sweep_gf3, capsys):
    """Core criterion and complement criterion never disagree."""
    failures = sweep_gf2.criteria_disagreements + sweep_gf3.criteria_disagreements
    checked = sweep_gf2.maximals_classified + sweep_gf3.maximals_classified
    report(capsys, 3, "classification criteria", "%d maximals" % checked, failures)


def test_criterion_4_intravariance_criteria_agree(capsys):
    """Linear and extension criteria coincide on every subalgebra."""
    failures = []
    pairs = 0
    for a in small_universe():
        for sub in enumerate_subalgebras(a):
            pairs += 1
            if is_intravariant_linear(a, sub) != is_intravariant_extension(a, sub):
                failures.append((a.to_json(), sub.basis))
    report(capsys, 4, "intravariance criteria", "%d pairs" % pairs, failures)


def test_criterion_5_proof_objects(capsys):
    """The dichotomy, quotient image, and projector facts behind the proof."""
    failures = []
    triples = 0
    for a in small_universe():
        minimals = minimal_ideals_exhaustive(a)
        for u, _ in f_normalisers(a, NILPOTENT):
            for ideal in minimals:
                triples += 1
                meet = u & ideal
                if not (ideal <= u or meet.is_zero()):
                    failures.append(("dichotomy", a.to_json(), u.basis, ideal.basis))
                    continue
                quo, qmap = a.quotient(ideal)
                image = qmap.project_subspace(u)
                quotient_normalisers = {v for v, _ in f_normalisers(quo, NILPOTENT)}
                if image not in quotient_normalisers:
                    failures.append(("quotient", a.to_json(), u.basis, ideal.basis))
                if meet.is_zero():
                    joined, smap = a.restrict(u + ideal)
                    inside = smap.restrict_subspace(u)
                    if not is_f_projector(joined, inside, NILPOTENT):
                        failures.append(("projector", a.to_json(), u.basis, ideal.basis))
    report(capsys, 5, "proof objects", "%d (U, A) pairs" % triples, failures)


def test_criterion_6_oracles(capsys):
    """Nilradical, core, subspace counts, rank-nullity vs brute force."""
    failures = []
    algebras = 0
    for a in both_universes():
        algebras += 1
        ideals = enumerate_ideals(a)
        nilpotent_ideals = [s for s in ideals if a.restrict(s)[0].is_nilpotent()]
        nil = a.nilradical()
        if nil not in nilpotent_ideals or not all(s <= nil for s in nilpotent_ideals):
            failures.append(("nilradical", a.to_json()))
        for m in maximal_subalgebras(a):
            contained = [s for s in ideals if s <= m]
            biggest = max(contained, key=lambda s: s.dim)
            if a.core(m) != biggest or not all(s <= biggest for s in contained):
                failures.append(("core", a.to_json(), m.basis))

    for field, top in ((F2, 4), (F3, 3)):
        for n in range(1, top + 1):
            spaces = list(enumerate_subspaces(field, n))
            for k in range(n + 1):
                expected = gaussian_binomial(n, k, field.p)
                if sum(1 for s in spaces if s.dim == k) != expected:
                    failures.append(("count", field.p, n, k))

    matrices = 0
    for field in (F2, F3, Q):
        rng = random.Random(20260816 + (field.p or 0))
        for _ in range(1000):
            n, m = rng.randint(1, 5), rng.randint(1, 5)
            if field.p is None:
                rows = [[Fraction(rng.randint(-9, 9)) for _ in range(m)] for _ in range(n)]
            else:
                rows = [[rng.randrange(field.p) for _ in range(m)] for _ in range(n)]
            mat = Matrix(field, rows, ncols=m)
            matrices += 1
            if mat.rank() + len(mat.kernel()) != m:
                failures.append(("rank-nullity", str(field), rows))
            if mat.rank() + len(mat.left_kernel()) != n:
                failures.append(("rank-nullity-left", str(field), rows))

    detail = "%d algebras, %d random matrices" % (algebras, matrices)
    report(capsys, 6, "independent oracles", detail, failures)


def test_criterion_7_fixed_points(capsys):
    """Worked examples, every value recomputed from scratch here."""
    failures = []

    a = r2("GF(3)")
    pairs = f_normalisers(a, NILPOTENT)
    bases = {v.basis for v, _ in pairs}
    if bases != {((1, 0),), ((1, 1),), ((1, 2),)}:
        failures.append(("r2 normalisers", sorted(bases)))
    if not all(len(chain) == 2 and is_member(NILPOTENT, a.restrict(v)[0]) for v, chain in pairs):
        failures.append("r2 chains")

    der = derivation_algebra(a)
    if der.dim != 2 or inner_derivations(a).dim != 2:
        failures.append(("Der(r2)", der.dim, inner_derivations(a).dim))
    if len(brute_force_derivations(a)) != 3 ** 2:
        failures.append("Der(r2) brute count")

    b = h3("GF(2)")
    der_b = derivation_algebra(b)
    if der_b.dim != 6 or inner_derivations(b).dim != 2:
        failures.append(("Der(h3)", der_b.dim, inner_derivations(b).dim))
    if len(brute_force_derivations(b)) != 2 ** 6:
        failures.append("Der(h3) brute count")

    nil_pairs = f_normalisers(h3("GF(3)"), NILPOTENT)
    if len(nil_pairs) != 1 or not nil_pairs[0][0].is_full() or len(nil_pairs[0][1]) != 1:
        failures.append("h3 self-normalising")

    report(capsys, 7, "worked fixed points", "4 fixtures", failures)
