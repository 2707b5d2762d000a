"""Exhaustive verification sweeps over enumerated soluble algebras.

A sweep replays, for every algebra in a deterministic enumeration stream
and every requested formation: the classification of all maximal
subalgebras (both defining criteria must agree), the computation of the
normalisers with both intravariance checks on each, and the cover-avoid
report for each normaliser against a chief series.

Failures are collected as plain dicts with enough data to replay the
check from the command line, never raised, so one bad algebra cannot
mask later ones.  Worker processes split the stream by index stride and
the merged outcome is sorted canonically, making the result independent
of the process count.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field as dataclass_field
from multiprocessing import get_context
from typing import Iterable, Optional, Sequence

from .algebra import LieAlgebra
from .derivations import (
    derivation_matrix_strings,
    extension_defect,
    is_intravariant_linear,
)
from .enumeration import EnumerationBudget, enumerate_soluble
from .errors import CriteriaDisagreeError, NoCriticalDescentError, UnsupportedFieldError
from .fields import Field
from .formations import (
    Formation,
    classify_maximal,
    cover_avoid_check,
    f_normalisers,
    formation_by_name,
    maximal_subalgebras,
)
from .report import basis_strings, fingerprint


@dataclass(frozen=True)
class SweepConfig:
    """Plain-data sweep description; everything here survives pickling."""

    field: str = "GF(2)"
    max_dim: int = 3
    formations: Sequence[str] = ("nilpotent", "all-soluble")
    per_step_cap: Optional[int] = None
    seed: int = 0

    def budget(self) -> EnumerationBudget:
        return EnumerationBudget(
            max_dim=self.max_dim,
            fields=(Field.from_string(self.field),),
            per_step_cap=self.per_step_cap,
            seed=self.seed,
        )

    def formation_objects(self) -> list:
        return [formation_by_name(name) for name in self.formations]


@dataclass
class SweepResult:
    """Counts plus replayable failure records from one sweep."""

    algebras: int = 0
    maximals_classified: int = 0
    normalisers_checked: int = 0
    intravariance_failures: list = dataclass_field(default_factory=list)
    cover_avoid_failures: list = dataclass_field(default_factory=list)
    criteria_disagreements: list = dataclass_field(default_factory=list)
    descent_failures: list = dataclass_field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not (
            self.intravariance_failures
            or self.cover_avoid_failures
            or self.criteria_disagreements
            or self.descent_failures
        )

    def merge(self, other: "SweepResult") -> None:
        self.algebras += other.algebras
        self.maximals_classified += other.maximals_classified
        self.normalisers_checked += other.normalisers_checked
        self.intravariance_failures.extend(other.intravariance_failures)
        self.cover_avoid_failures.extend(other.cover_avoid_failures)
        self.criteria_disagreements.extend(other.criteria_disagreements)
        self.descent_failures.extend(other.descent_failures)

    def sort(self) -> None:
        def key(record):
            return (
                record.get("fingerprint", ""),
                record.get("formation", ""),
                str(record.get("subalgebra", "")),
                str(record.get("maximal", "")),
            )

        self.intravariance_failures.sort(key=key)
        self.cover_avoid_failures.sort(key=key)
        self.criteria_disagreements.sort(key=key)
        self.descent_failures.sort(key=key)

    def to_dict(self) -> dict:
        # elapsed time is deliberately left out: serialised sweep output
        # must be byte-identical across runs with the same flags and seed
        return {
            "algebras": self.algebras,
            "maximals_classified": self.maximals_classified,
            "normalisers_checked": self.normalisers_checked,
            "ok": self.ok,
            "intravariance_failures": self.intravariance_failures,
            "cover_avoid_failures": self.cover_avoid_failures,
            "criteria_disagreements": self.criteria_disagreements,
            "descent_failures": self.descent_failures,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SweepResult":
        result = cls(
            algebras=data["algebras"],
            maximals_classified=data["maximals_classified"],
            normalisers_checked=data["normalisers_checked"],
        )
        result.intravariance_failures = list(data["intravariance_failures"])
        result.cover_avoid_failures = list(data["cover_avoid_failures"])
        result.criteria_disagreements = list(data["criteria_disagreements"])
        result.descent_failures = list(data["descent_failures"])
        return result


def _base_record(algebra: LieAlgebra, formation: Formation) -> dict:
    return {
        "fingerprint": fingerprint(algebra),
        "algebra": algebra.to_dict(),
        "formation": formation.name,
    }


def check_algebra(algebra: LieAlgebra, formations: Iterable[Formation]) -> SweepResult:
    """Run every sweep check on one algebra; failures become records."""
    result = SweepResult(algebras=1)
    for formation in formations:
        for maximal in maximal_subalgebras(algebra):
            try:
                classify_maximal(algebra, maximal, formation)
                result.maximals_classified += 1
            except CriteriaDisagreeError as exc:
                record = _base_record(algebra, formation)
                record["maximal"] = basis_strings(maximal)
                record["detail"] = str(exc)
                result.criteria_disagreements.append(record)

        try:
            normalisers = f_normalisers(algebra, formation)
        except NoCriticalDescentError as exc:
            record = _base_record(algebra, formation)
            record["detail"] = str(exc)
            result.descent_failures.append(record)
            continue
        except CriteriaDisagreeError:
            # already recorded above through the classification pass
            continue

        for subspace, chain in normalisers:
            result.normalisers_checked += 1
            linear_ok = is_intravariant_linear(algebra, subspace)
            defect = extension_defect(algebra, subspace)
            if not linear_ok or defect is not None:
                record = _base_record(algebra, formation)
                record["subalgebra"] = basis_strings(subspace)
                record["chain"] = [
                    basis_strings(step) for step in chain
                ]
                record["linear_ok"] = linear_ok
                record["extension_ok"] = defect is None
                if defect is not None:
                    record["derivation"] = derivation_matrix_strings(defect)
                result.intravariance_failures.append(record)

            try:
                report = cover_avoid_check(algebra, subspace, formation)
            except UnsupportedFieldError:
                continue
            if not report.ok:
                record = _base_record(algebra, formation)
                record["subalgebra"] = basis_strings(subspace)
                record["violations"] = [
                    {
                        "factor_dims": [entry.factor.bottom.dim, entry.factor.top.dim],
                        "central": entry.central,
                        "covered": entry.covered,
                        "avoided": entry.avoided,
                    }
                    for entry in report.violations()
                ]
                result.cover_avoid_failures.append(record)
    return result


def _worker(args) -> dict:
    config, index, stride = args
    formations = config.formation_objects()
    partial = SweepResult()
    for position, algebra in enumerate(enumerate_soluble(config.budget())):
        if position % stride != index:
            continue
        partial.merge(check_algebra(algebra, formations))
    return partial.to_dict()


def sweep_run(config: SweepConfig, threads: int = 0) -> SweepResult:
    """Sweep the configured enumeration stream.

    threads <= 1 runs in-process; otherwise worker processes partition the
    stream by index stride.  Either way the merged result is sorted, so
    output bytes do not depend on the process count.
    """
    if threads <= 0:
        threads = int(os.environ.get("LIEFORM_THREADS", "1") or "1")
    started = time.perf_counter()
    result = SweepResult()
    if threads <= 1:
        formations = config.formation_objects()
        for algebra in enumerate_soluble(config.budget()):
            result.merge(check_algebra(algebra, formations))
    else:
        context = get_context("fork")
        jobs = [(config, index, threads) for index in range(threads)]
        with context.Pool(processes=threads) as pool:
            for partial in pool.map(_worker, jobs):
                result.merge(SweepResult.from_dict(partial))
    result.sort()
    result.elapsed = time.perf_counter() - started
    return result


def sweep_summary_lines(result: SweepResult) -> list:
    """Fixed-format text block for the CLI."""
    lines = [
        "algebras checked: %d" % result.algebras,
        "maximal subalgebras classified: %d" % result.maximals_classified,
        "normalisers checked: %d" % result.normalisers_checked,
        "intravariance failures: %d" % len(result.intravariance_failures),
        "cover-avoid failures: %d" % len(result.cover_avoid_failures),
        "criteria disagreements: %d" % len(result.criteria_disagreements),
        "descent failures: %d" % len(result.descent_failures),
        "result: %s" % ("ok" if result.ok else "FAIL"),
    ]
    return lines
