"""Closure, hull and theta-closure operators on finite spaces.

Everything is computed through the minimal-neighbourhood table. Two facts
carry the whole module:

* the pointwise-smallest k-hull of a set ``a`` is the top of the chain
  ``U_1 = min_nbhd(a)``, ``U_{j+1} = min_nbhd(closure(U_j))``, and its closure
  sits inside the closure of every other k-hull of ``a``;
* an open ``w`` is a k-hull of ``a`` iff ``a`` lies in ``shrink`` applied
  k-1 times to ``w``, since ``shrink(v)`` is the largest open set whose
  closure is inside ``v``.
"""

from __future__ import annotations

from . import kernels
from .ordinal import OMEGA, check_alpha, clamp
from .space import FiniteSpace, PointSet, SpaceMismatch


class NotOpen(ValueError):
    def __init__(self, s: PointSet):
        self.set = s
        super().__init__(f"{s!r} is not open")


class EmptySet(ValueError):
    def __init__(self):
        super().__init__("hulls are only defined for nonempty sets")


def _bits(space: FiniteSpace, s: PointSet) -> int:
    if s.space is not space and s.space != space:
        raise SpaceMismatch("point set does not belong to this space")
    return s.bits


def _positive(alpha):
    alpha = check_alpha(alpha)
    if alpha == 0:
        raise ValueError("hull depth must be at least 1")
    return alpha


def closure(space: FiniteSpace, m: PointSet) -> PointSet:
    """Smallest closed superset: the points whose minimal neighbourhood meets m."""
    return space.pset(kernels.hits(space.nbhd, _bits(space, m)))


def interior(space: FiniteSpace, m: PointSet) -> PointSet:
    bits = _bits(space, m)
    out = 0
    for x, p in enumerate(space.nbhd):
        if not p & ~bits:
            out |= 1 << x
    return space.pset(out)


def min_nbhd(space: FiniteSpace, a: PointSet) -> PointSet:
    """Smallest open superset of ``a``."""
    return space.pset(kernels.spread(space.nbhd, _bits(space, a)))


def shrink(space: FiniteSpace, v: PointSet) -> PointSet:
    """Largest open set whose closure lies in the open set ``v``."""
    bits = _bits(space, v)
    if not space.is_open(bits):
        raise NotOpen(v)
    return space.pset(kernels.shrink(space.nbhd, space.closed_nbhd, bits))


def shrink_power(space: FiniteSpace, v: PointSet, times) -> PointSet:
    """``shrink`` applied ``times`` times; OMEGA iterates to the fixpoint."""
    bits = _bits(space, v)
    if not space.is_open(bits):
        raise NotOpen(v)
    steps = space.n if times is OMEGA else times
    for _ in range(steps):
        nxt = kernels.shrink(space.nbhd, space.closed_nbhd, bits)
        if nxt == bits:
            break
        bits = nxt
    return space.pset(bits)


def hull_chain(space: FiniteSpace, a: PointSet, alpha) -> list[PointSet]:
    """The minimal chain ``U_1 <= ... <= U_alpha`` (OMEGA: up to its fixpoint)."""
    alpha = _positive(alpha)
    bits = _bits(space, a)
    if not bits:
        raise EmptySet()
    chain = kernels.hull_chain(space.nbhd, bits, clamp(alpha, space.n))
    if alpha is OMEGA:
        while len(chain) > 1 and chain[-1] == chain[-2]:
            chain.pop()
    return [space.pset(u) for u in chain]


def min_hull(space: FiniteSpace, a: PointSet, alpha) -> PointSet:
    """Pointwise-smallest ``alpha``-hull of the nonempty set ``a``."""
    return hull_chain(space, a, alpha)[-1]


def is_hull(space: FiniteSpace, w: PointSet, a: PointSet, alpha) -> bool:
    alpha = _positive(alpha)
    wb, ab = _bits(space, w), _bits(space, a)
    if not space.is_open(wb) or ab & ~wb:
        return False
    times = OMEGA if alpha is OMEGA else alpha - 1
    return not ab & ~shrink_power(space, w, times).bits


def theta_closure(space: FiniteSpace, m: PointSet, alpha) -> PointSet:
    """Depth-``alpha`` closure; depth 0 is the ordinary closure.

    For alpha >= 1 a point x is kept when the closure of its minimal
    alpha-hull meets ``m``. The minimal hull has the smallest closure of all
    alpha-hulls of x, so it decides whether some hull misses ``m``.
    """
    alpha = check_alpha(alpha)
    return space.pset(kernels.hits(space.theta_table(alpha), _bits(space, m)))


def theta_interior(space: FiniteSpace, m: PointSet, alpha) -> PointSet:
    return ~theta_closure(space, ~m, alpha)


def is_theta_closed(space: FiniteSpace, m: PointSet, alpha) -> bool:
    return theta_closure(space, m, alpha) == m
