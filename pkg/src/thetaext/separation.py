"""Separation predicates: S(n), U(alpha), regular-U(alpha), regular."""

from __future__ import annotations

from . import kernels
from .ordinal import OMEGA, check_alpha, to_json
from .space import FiniteSpace


def _pairs(space: FiniteSpace):
    for x in range(space.n):
        for y in range(x + 1, space.n):
            yield x, y


def s_n_witness(space: FiniteSpace, n) -> tuple[str, str] | None:
    """First pair of distinct points that is not S(n)-separated, or None.

    For n = 0 the symmetric form is used: neither point lies in the closure
    of the other. For n >= 1 the relation is symmetric by construction.
    """
    n = check_alpha(n)
    table = space.theta_table(n)
    for x, y in _pairs(space):
        # x in cl_n{y} iff table[x] contains y
        if table[x] >> y & 1 or table[y] >> x & 1:
            return space.points[x], space.points[y]
    return None


def is_s_n(space: FiniteSpace, n) -> bool:
    return s_n_witness(space, n) is None


def _hull_closure(space: FiniteSpace, a: int, alpha) -> int:
    chain = kernels.hull_chain(space.nbhd, a, space.n if alpha is OMEGA else min(alpha, space.n))
    return kernels.hits(space.nbhd, chain[-1])


def u_alpha_witness(space: FiniteSpace, alpha) -> tuple[str, str] | None:
    alpha = check_alpha(alpha)
    if alpha == 0:
        raise ValueError("U(alpha) needs alpha >= 1")
    table = space.theta_table(alpha)
    for x, y in _pairs(space):
        if table[x] & table[y]:
            return space.points[x], space.points[y]
    return None


def is_u_alpha(space: FiniteSpace, alpha) -> bool:
    """Distinct points have alpha-hulls with disjoint closures.

    Minimal hulls have minimal closures, so checking them decides the
    existence of some separating pair of hulls.
    """
    return u_alpha_witness(space, alpha) is None


def regular_u_alpha_witness(space: FiniteSpace, alpha) -> tuple[str, list[str]] | None:
    alpha = check_alpha(alpha)
    if alpha == 0:
        raise ValueError("regular-U(alpha) needs alpha >= 1")
    table = space.theta_table(alpha)
    for f in space.closed_sets:
        if not f:
            continue
        around_f = _hull_closure(space, f, alpha)
        for x in range(space.n):
            if not f >> x & 1 and table[x] & around_f:
                return space.points[x], space.names(f)
    return None


def is_regular_u_alpha(space: FiniteSpace, alpha) -> bool:
    """A point and a closed set missing it have hulls with disjoint closures.

    Vacuously true when no such pair exists (e.g. indiscrete spaces).
    """
    return regular_u_alpha_witness(space, alpha) is None


def regular_witness(space: FiniteSpace) -> tuple[str, list[str]] | None:
    for f in space.closed_sets:
        if not f:
            continue
        around_f = kernels.spread(space.nbhd, f)
        for x in range(space.n):
            if not f >> x & 1 and space.nbhd[x] & around_f:
                return space.points[x], space.names(f)
    return None


def is_regular(space: FiniteSpace) -> bool:
    """Each point and each closed set missing it have disjoint neighbourhoods."""
    return regular_witness(space) is None


def classify(space: FiniteSpace, max_n: int = 3) -> dict:
    """Truth table of the separation axioms up to depth ``max_n``."""
    depths = list(range(max_n + 1))
    report = {
        "points": space.n,
        "discrete": space.is_discrete,
        "regular": is_regular(space),
        "S": {str(n): is_s_n(space, n) for n in depths},
        "U": {str(n): is_u_alpha(space, n) for n in depths if n >= 1},
        "regular_U": {str(n): is_regular_u_alpha(space, n) for n in depths if n >= 1},
    }
    report["S"][to_json(OMEGA)] = is_s_n(space, OMEGA)
    report["U"][to_json(OMEGA)] = is_u_alpha(space, OMEGA)
    report["regular_U"][to_json(OMEGA)] = is_regular_u_alpha(space, OMEGA)
    return report
