"""Exact-arithmetic structure theory for soluble Lie algebras.

Algebras are given by structure constants over Q or GF(p).  The library
computes chief series, classifies maximal subalgebras relative to a
saturated formation, builds normalisers through chains of critical
maximal subalgebras, computes derivation algebras, and checks the two
intravariance criteria; an enumeration of small soluble algebras feeds
the exhaustive property sweeps behind the `lieform` command.
"""

from .algebra import LieAlgebra, QuotientMap, SubspaceMap
from .chief import (
    ChiefFactor,
    ChiefSeries,
    FactorView,
    LModule,
    SplitExtension,
    avoids,
    chief_series,
    covers,
    is_irreducible,
    minimal_ideal,
    split_extension,
    split_extension_by_derivation,
)
from .derivations import (
    Derivation,
    DerivationAlgebra,
    derivation_algebra,
    derivation_from_strings,
    derivation_matrix_strings,
    extension_defect,
    inner_derivations,
    is_intravariant_extension,
    is_intravariant_linear,
    normalizer_fills_extension,
    stabilizing_derivations,
)
from .enumeration import (
    ENUMERATION_DIM_LIMIT,
    EnumerationBudget,
    enumerate_ideals,
    enumerate_soluble,
    enumerate_subalgebras,
    minimal_ideals_exhaustive,
)
from .errors import (
    AmbientMismatchError,
    BudgetExceededError,
    CriteriaDisagreeError,
    DimensionMismatchError,
    FieldMismatchError,
    InvalidModuleError,
    JacobiViolationError,
    LieformError,
    NoCriticalDescentError,
    NotADerivationError,
    NotAnIdealError,
    NotASubalgebraError,
    NotNestedError,
    NotSolubleError,
    ParseError,
    UnsupportedFieldError,
    ZeroAlgebraError,
)
from .fields import Field
from .formations import (
    ALL_SOLUBLE,
    FORMATIONS,
    NILPOTENT,
    SUPERSOLUBLE,
    CoverAvoidEntry,
    CoverAvoidReport,
    Formation,
    MaximalClassification,
    NormaliserChain,
    Verdict,
    classify_maximal,
    cover_avoid_check,
    f_normalisers,
    formation_by_name,
    is_f_central,
    is_f_critical,
    is_f_projector,
    is_member,
    maximal_subalgebras,
)
from .linalg import (
    EchelonAccumulator,
    Matrix,
    Subspace,
    enumerate_subspaces,
    gaussian_binomial,
    null_space,
    rref,
    solve,
)
from .report import AnalysisReport, basis_strings, fingerprint
from .sweep import SweepConfig, SweepResult, check_algebra, sweep_run

__version__ = "0.1.0"

__all__ = [
    "ALL_SOLUBLE",
    "AmbientMismatchError",
    "AnalysisReport",
    "BudgetExceededError",
    "ChiefFactor",
    "ChiefSeries",
    "CoverAvoidEntry",
    "CoverAvoidReport",
    "CriteriaDisagreeError",
    "Derivation",
    "DerivationAlgebra",
    "DimensionMismatchError",
    "ENUMERATION_DIM_LIMIT",
    "EchelonAccumulator",
    "EnumerationBudget",
    "FORMATIONS",
    "FactorView",
    "Field",
    "FieldMismatchError",
    "Formation",
    "InvalidModuleError",
    "JacobiViolationError",
    "LModule",
    "LieAlgebra",
    "LieformError",
    "Matrix",
    "MaximalClassification",
    "NILPOTENT",
    "NoCriticalDescentError",
    "NormaliserChain",
    "NotADerivationError",
    "NotAnIdealError",
    "NotASubalgebraError",
    "NotNestedError",
    "NotSolubleError",
    "ParseError",
    "QuotientMap",
    "SUPERSOLUBLE",
    "SplitExtension",
    "Subspace",
    "SubspaceMap",
    "SweepConfig",
    "SweepResult",
    "UnsupportedFieldError",
    "Verdict",
    "ZeroAlgebraError",
    "avoids",
    "basis_strings",
    "check_algebra",
    "chief_series",
    "classify_maximal",
    "cover_avoid_check",
    "covers",
    "derivation_algebra",
    "derivation_from_strings",
    "derivation_matrix_strings",
    "enumerate_ideals",
    "enumerate_soluble",
    "enumerate_subalgebras",
    "enumerate_subspaces",
    "extension_defect",
    "f_normalisers",
    "fingerprint",
    "formation_by_name",
    "gaussian_binomial",
    "inner_derivations",
    "is_f_central",
    "is_f_critical",
    "is_f_projector",
    "is_intravariant_extension",
    "is_intravariant_linear",
    "is_irreducible",
    "is_member",
    "maximal_subalgebras",
    "minimal_ideal",
    "minimal_ideals_exhaustive",
    "normalizer_fills_extension",
    "null_space",
    "rref",
    "solve",
    "split_extension",
    "split_extension_by_derivation",
    "stabilizing_derivations",
    "sweep_run",
]
