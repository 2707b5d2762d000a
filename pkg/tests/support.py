"""Shared fixture algebras used across the test modules."""

import itertools

from lieform import Derivation, LieAlgebra, Matrix, NotADerivationError


def brute_force_derivations(a):
    """Every matrix over GF(p) satisfying the Leibniz rule, by full scan."""
    p = a.field.p
    n = a.dim
    found = []
    for entries in itertools.product(range(p), repeat=n * n):
        m = Matrix(a.field, [entries[i * n : (i + 1) * n] for i in range(n)], ncols=n)
        try:
            Derivation(a, m, check=True)
        except NotADerivationError:
            continue
        found.append(m)
    return found


def algebra(field, dim, brackets):
    """Build from {(i, j): coefficient tuple} with 1-based i < j."""
    entries = [
        {"i": i, "j": j, "value": [str(v) for v in vec]}
        for (i, j), vec in sorted(brackets.items())
    ]
    return LieAlgebra.from_dict({"field": field, "dim": dim, "brackets": entries})


def r2(field="GF(3)"):
    # basis x, y with [x, y] = y
    return algebra(field, 2, {(1, 2): (0, 1)})


def h3(field="GF(3)"):
    # Heisenberg: [e1, e2] = e3, e3 central
    return algebra(field, 3, {(1, 2): (0, 0, 1)})


def abelian(field, dim):
    return algebra(field, dim, {})


def r2_plus_line(field="GF(3)"):
    # [e1, e2] = e2 with a central e3
    return algebra(field, 3, {(1, 2): (0, 1, 0)})


def rotation():
    # over Q: [e1,e2] = e3, [e1,e3] = -e2; the derived subalgebra
    # span{e2,e3} is a minimal ideal with no rational eigenline
    return algebra("Q", 3, {(1, 2): (0, 0, 1), (1, 3): (0, -1, 0)})


def rotation_plus_centre():
    # rotation block plus a central e4: the only minimal ideal a line
    # search can find is span{e4}
    return algebra("Q", 4, {(1, 2): (0, 0, 1, 0), (1, 3): (0, -1, 0, 0)})
