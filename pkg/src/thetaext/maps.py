"""Maps defined on dense subsets: continuity, extension conditions, extensions.

All checkers reduce the quantifiers over families and
neighbourhoods to per-point tests on minimal neighbourhoods. For a point x
write ``F_x = f(P_x & S)``: the image of the trace of x's minimal
neighbourhood on the dense set. Then

* x lies in the closure of ``f^-1(A)`` iff ``A`` meets ``F_x``;
* the family condition for closed sets fails iff, for some x, the closures
  of the singletons of ``F_x`` have empty intersection (every closed set that
  meets ``F_x`` contains one of them), and likewise for arbitrary sets with
  depth-alpha closures.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping

from . import kernels
from .operators import shrink_power
from .ordinal import OMEGA, check_alpha, to_json
from .space import FiniteSpace, PointSet, SpaceError, bits_of

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**6


class NotDense(SpaceError):
    def __init__(self, s):
        super().__init__(f"{s!r} is not dense")


class MapError(SpaceError):
    """The map is not a total function from the dense set into Y."""


class NotContinuous(SpaceError):
    def __init__(self, kind: str, point: str):
        self.point = point
        super().__init__(f"map is not {kind} at {point!r}")


class NotSingleValued(ValueError):
    def __init__(self, point: str, values: list[str]):
        self.point, self.values = point, values
        super().__init__(f"candidate value at {point!r} is {values}, not a single point")


class EmptyValue(ValueError):
    def __init__(self, point: str):
        self.point = point
        super().__init__(f"candidate value at {point!r} is empty")


class BudgetExceeded(RuntimeError):
    def __init__(self, count: int, budget: int):
        super().__init__(f"{count} candidate extensions exceed the budget of {budget}")


def _fmap(x_space: FiniteSpace, y_space: FiniteSpace, mapping: Mapping[str, str], domain: int):
    fmap = [-1] * x_space.n
    for src, dst in mapping.items():
        i = x_space.index(src)
        if not domain >> i & 1:
            raise MapError(f"{src!r} is outside the map's domain")
        fmap[i] = y_space.index(dst)
    missing = [x_space.points[i] for i in bits_of(domain) if fmap[i] < 0]
    if missing:
        raise MapError(f"map is undefined at {missing}")
    return fmap


def is_continuous(x_space: FiniteSpace, y_space: FiniteSpace, mapping: Mapping[str, str],
                  domain: PointSet | None = None) -> bool:
    """Preimages of opens are open (in the subspace topology on ``domain``).

    Equivalent to: f(P_x & domain) lies inside P_f(x) for every x.
    """
    dom = x_space.full if domain is None else domain.bits
    fmap = _fmap(x_space, y_space, mapping, dom)
    return kernels.maps_into(x_space.nbhd, y_space.nbhd, fmap, dom) < 0


def is_theta_alpha_continuous(x_space: FiniteSpace, y_space: FiniteSpace,
                              mapping: Mapping[str, str], alpha,
                              domain: PointSet | None = None) -> bool:
    """Each alpha-hull U of f(x) has a neighbourhood W of x with f(W) in cl U.

    The minimal hull of f(x) has the smallest closure and the minimal
    neighbourhood of x is the smallest W, so one inclusion per point decides it.
    """
    alpha = check_alpha(alpha)
    if alpha == 0:
        raise ValueError("theta_alpha continuity needs alpha >= 1")
    dom = x_space.full if domain is None else domain.bits
    fmap = _fmap(x_space, y_space, mapping, dom)
    return kernels.maps_into(x_space.nbhd, y_space.theta_table(alpha), fmap, dom) < 0


class DenseMapInstance:
    """A map ``f: S -> Y`` on a dense subset ``S`` of ``X``.

    ``f_class`` names the continuity that is checked on construction:
    ``"continuous"``, ``"theta"`` (theta_alpha-continuity at ``f_alpha``) or
    ``"any"`` to skip the check.
    """

    __slots__ = ("x_space", "y_space", "dense", "fmap", "f_class", "f_alpha")

    def __init__(self, x_space: FiniteSpace, y_space: FiniteSpace, dense, mapping,
                 f_class: str = "continuous", f_alpha=1):
        if not isinstance(dense, PointSet):
            dense = x_space.subset(dense)
        if kernels.hits(x_space.nbhd, dense.bits) != x_space.full:
            raise NotDense(dense)
        self.x_space = x_space
        self.y_space = y_space
        self.dense = dense
        self.fmap = tuple(_fmap(x_space, y_space, mapping, dense.bits))
        self.f_class = f_class
        self.f_alpha = check_alpha(f_alpha)
        if f_class == "continuous":
            target = y_space.nbhd
        elif f_class == "theta":
            target = y_space.theta_table(self.f_alpha)
        elif f_class == "any":
            return
        else:
            raise ValueError(f"unknown map class {f_class!r}")
        bad = kernels.maps_into(x_space.nbhd, target, self.fmap, dense.bits)
        if bad >= 0:
            kind = "continuous" if f_class == "continuous" else f"theta_{to_json(self.f_alpha)}-continuous"
            raise NotContinuous(kind, x_space.points[bad])

    @classmethod
    def _trusted(cls, x_space, y_space, smask, fmap, f_class="continuous", f_alpha=1):
        inst = cls.__new__(cls)
        inst.x_space = x_space
        inst.y_space = y_space
        inst.dense = x_space.pset(smask)
        inst.fmap = tuple(fmap)
        inst.f_class = f_class
        inst.f_alpha = f_alpha
        return inst

    @property
    def mapping(self) -> dict[str, str]:
        x, y = self.x_space, self.y_space
        return {x.points[i]: y.points[self.fmap[i]] for i in bits_of(self.dense.bits)}

    def traces(self) -> list[int]:
        """``F_x`` for every x, as masks over Y."""
        s = self.dense.bits
        return [kernels.image(self.fmap, p & s) for p in self.x_space.nbhd]

    def preimage(self, v: int) -> int:
        """Mask of the points of S mapped into the Y-mask ``v``."""
        out = 0
        for i in bits_of(self.dense.bits):
            if v >> self.fmap[i] & 1:
                out |= 1 << i
        return out

    def to_dict(self) -> dict:
        return {
            "x_space": self.x_space.to_dict(),
            "y_space": self.y_space.to_dict(),
            "dense": self.dense.names(),
            "map": self.mapping,
        }

    @classmethod
    def from_dict(cls, data: dict, f_class: str = "continuous", f_alpha=1) -> DenseMapInstance:
        try:
            x = FiniteSpace.from_dict(data["x_space"])
            y = FiniteSpace.from_dict(data["y_space"])
            dense, mapping = data["dense"], data["map"]
        except KeyError as exc:
            raise SpaceError(f"instance JSON lacks {exc}") from None
        return cls(x, y, dense, mapping, f_class=f_class, f_alpha=f_alpha)

    def __eq__(self, other) -> bool:
        return (isinstance(other, DenseMapInstance) and self.x_space == other.x_space
                and self.y_space == other.y_space and self.dense == other.dense
                and self.fmap == other.fmap)

    def __hash__(self) -> int:
        return hash((self.x_space, self.y_space, self.dense.bits, self.fmap))

    def __repr__(self) -> str:
        return f"DenseMapInstance(S={self.dense!r}, f={self.mapping})"


@dataclass(frozen=True)
class ConditionVerdict:
    condition: str
    alpha: object
    holds: bool
    witness: dict | None = field(default=None)

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {"condition": self.condition, "alpha": to_json(self.alpha) if self.alpha is not None else None,
                "holds": self.holds, "witness": self.witness}


# candidate values

def _phi_masks(inst: DenseMapInstance, alpha) -> list[int]:
    table = inst.y_space.theta_table(alpha)
    return [kernels.hits(table, t) for t in inst.traces()]


def phi(inst: DenseMapInstance, x: str, alpha) -> PointSet:
    """Depth-alpha closure of ``f(P_x & S)``.

    The minimal neighbourhood of x is contained in every neighbourhood, and
    the closure operator is monotone, so it realises the intersection over
    all neighbourhoods of x.
    """
    alpha = check_alpha(alpha)
    i = inst.x_space.index(x)
    return inst.y_space.pset(_phi_masks(inst, alpha)[i])


def _interior_points(phis: list[int], v: int) -> int:
    out = 0
    for i, p in enumerate(phis):
        if not p & ~v:
            out |= 1 << i
    return out


def x_theta_interior_set(inst: DenseMapInstance, v: PointSet, alpha) -> PointSet:
    """Points x whose candidate value lies inside ``v``.

    A point with an empty candidate value is included (the inclusion holds
    vacuously); this cannot happen for a dense S, but is logged if it does.
    """
    alpha = check_alpha(alpha)
    phis = _phi_masks(inst, alpha)
    if not all(phis):
        log.warning("empty candidate value; point counted as interior")
    return inst.x_space.pset(_interior_points(phis, v.bits))


def _open_interior(space: FiniteSpace, m: int) -> int:
    out = 0
    for x, p in enumerate(space.nbhd):
        if not p & ~m:
            out |= 1 << x
    return out


# the four conditions

def _intersect_singletons(inst: DenseMapInstance, sing: tuple[int, ...]):
    """First x whose trace has singleton closures with empty intersection."""
    y = inst.y_space
    for i, t in enumerate(inst.traces()):
        common = y.full
        for j in bits_of(t):
            common &= sing[j]
        if not common:
            return i, t
    return None


def check_star(inst: DenseMapInstance) -> ConditionVerdict:
    """Family condition on closed subsets of Y, decided point by point."""
    y = inst.y_space
    sing = y.singleton_closures(0)
    bad = _intersect_singletons(inst, sing)
    if bad is None:
        return ConditionVerdict("star", None, True)
    i, t = bad
    family = [y.names(sing[j]) for j in bits_of(t)]
    return ConditionVerdict("star", None, False,
                            {"point": inst.x_space.points[i], "family": family})


def check_plus_alpha(inst: DenseMapInstance, alpha) -> ConditionVerdict:
    """Family condition on arbitrary subsets under depth-alpha closure."""
    alpha = check_alpha(alpha)
    if alpha == 0:
        raise ValueError("(+) needs alpha >= 1")
    y = inst.y_space
    bad = _intersect_singletons(inst, y.singleton_closures(alpha))
    if bad is None:
        return ConditionVerdict("plus", alpha, True)
    i, t = bad
    return ConditionVerdict("plus", alpha, False,
                            {"point": inst.x_space.points[i],
                             "family": [[y.points[j]] for j in bits_of(t)]})


def check_star_alpha(inst: DenseMapInstance, alpha) -> ConditionVerdict:
    """For every open V of Y the set of X-theta-interior points of f^-1(V) is open."""
    alpha = check_alpha(alpha)
    x, y = inst.x_space, inst.y_space
    phis = _phi_masks(inst, alpha)
    for v in y.opens:
        s = _interior_points(phis, v)
        if not x.is_open(s):
            return ConditionVerdict("star_alpha", alpha, False,
                                    {"open_set": y.names(v), "interior_points": x.names(s)})
    return ConditionVerdict("star_alpha", alpha, True)


def check_plusplus_alpha(inst: DenseMapInstance, alpha) -> ConditionVerdict:
    """Hull-sandwich condition.

    For each open w of Y that is an alpha-hull of some point, take the
    largest admissible first chain element ``u1 = shrink^(alpha-1)(w)``; the
    hulls of points are exactly the w with u1 nonempty. An open V between the
    interior-point sets of ``f^-1(u1)`` and ``f^-1(cl w)`` exists iff the first
    lies in the interior of the second.
    """
    alpha = check_alpha(alpha)
    if alpha == 0:
        raise ValueError("(++) needs alpha >= 1")
    x, y = inst.x_space, inst.y_space
    phis = _phi_masks(inst, alpha)
    times = OMEGA if alpha is OMEGA else alpha - 1
    for w in y.opens:
        u1 = shrink_power(y, y.pset(w), times).bits
        if not u1:
            continue
        lower = _interior_points(phis, u1)
        upper = _interior_points(phis, kernels.hits(y.nbhd, w))
        if lower & ~_open_interior(x, upper):
            point = y.points[(u1 & -u1).bit_length() - 1]
            return ConditionVerdict("plusplus", alpha, False,
                                    {"point": point, "hull": y.names(w), "first": y.names(u1),
                                     "lower": x.names(lower), "upper": x.names(upper)})
    return ConditionVerdict("plusplus", alpha, True)


def check_pairwise(inst: DenseMapInstance) -> ConditionVerdict:
    """Disjoint closed A, B of Y have disjoint closures of their preimages."""
    x, y = inst.x_space, inst.y_space
    closed = [c for c in y.closed_sets if c]
    pre = {c: kernels.hits(x.nbhd, inst.preimage(c)) for c in closed}
    for i, a in enumerate(closed):
        for b in closed[i + 1:]:
            if not a & b and pre[a] & pre[b]:
                return ConditionVerdict("pairwise", None, False,
                                        {"a": y.names(a), "b": y.names(b),
                                         "common": x.names(pre[a] & pre[b])})
    return ConditionVerdict("pairwise", None, True)


CONDITIONS = {
    "star": lambda inst, alpha: check_star(inst),
    "star_alpha": check_star_alpha,
    "plus": check_plus_alpha,
    "plusplus": check_plusplus_alpha,
    "pairwise": lambda inst, alpha: check_pairwise(inst),
}


def check(inst: DenseMapInstance, condition: str, alpha=1) -> ConditionVerdict:
    try:
        checker = CONDITIONS[condition]
    except KeyError:
        raise ValueError(f"unknown condition {condition!r}") from None
    return checker(inst, alpha)


# extensions

@dataclass(frozen=True)
class Extension:
    mapping: dict
    mode: str
    alpha: object
    continuous: bool
    theta_continuous: bool
    agrees_on_dense: bool

    def to_dict(self) -> dict:
        return {"map": self.mapping, "mode": self.mode, "alpha": to_json(self.alpha),
                "continuous": self.continuous, "theta_continuous": self.theta_continuous,
                "agrees_on_dense": self.agrees_on_dense}


def _target(y: FiniteSpace, mode: str, alpha):
    if mode == "continuous":
        return y.nbhd
    if mode == "theta":
        if alpha == 0:
            raise ValueError("theta mode needs alpha >= 1")
        return y.theta_table(alpha)
    raise ValueError(f"unknown mode {mode!r}")


def construct_extension(inst: DenseMapInstance, alpha, mode: str = "continuous") -> Extension:
    """Candidate extension x -> the single point of its candidate value.

    Raises :class:`NotSingleValued` or :class:`EmptyValue` when some value
    is not a singleton. The result reports whether it is continuous (and
    theta_alpha-continuous) and whether it restricts to f on S.
    """
    alpha = check_alpha(alpha)
    x, y = inst.x_space, inst.y_space
    _target(y, mode, alpha)
    phis = _phi_masks(inst, alpha)
    fmap = []
    for i, p in enumerate(phis):
        if not p:
            raise EmptyValue(x.points[i])
        if p & (p - 1):
            raise NotSingleValued(x.points[i], y.names(p))
        fmap.append(p.bit_length() - 1)
    agrees = all(fmap[i] == inst.fmap[i] for i in bits_of(inst.dense.bits))
    continuous = kernels.maps_into(x.nbhd, y.nbhd, fmap, x.full) < 0
    theta_alpha = alpha if alpha != 0 else 1
    theta = kernels.maps_into(x.nbhd, y.theta_table(theta_alpha), fmap, x.full) < 0
    mapping = {x.points[i]: y.points[fmap[i]] for i in range(x.n)}
    return Extension(mapping, mode, alpha, continuous, theta, agrees)


def extension_maps(inst: DenseMapInstance, mode: str, alpha, budget: int = DEFAULT_BUDGET,
                   limit: int = -1) -> list[tuple[int, ...]]:
    """Valid total extensions as index tuples (see :func:`brute_force_extensions`)."""
    x, y = inst.x_space, inst.y_space
    target = _target(y, mode, alpha)
    free = [i for i in range(x.n) if not inst.dense.bits >> i & 1]
    count = y.n ** len(free)
    if count > budget:
        raise BudgetExceeded(count, budget)
    return kernels.extensions(x.nbhd, target, list(inst.fmap), free, y.n, limit)


def brute_force_extensions(inst: DenseMapInstance, mode: str = "continuous", alpha=1,
                           budget: int = DEFAULT_BUDGET) -> list[dict[str, str]]:
    """Every total F: X -> Y with F = f on S that is continuous (mode
    ``continuous``) or theta_alpha-continuous (mode ``theta``)."""
    alpha = check_alpha(alpha)
    x, y = inst.x_space, inst.y_space
    found = extension_maps(inst, mode, alpha, budget)
    return [{x.points[i]: y.points[v] for i, v in enumerate(f)} for f in found]


def extension_exists(inst: DenseMapInstance, mode: str = "continuous", alpha=1,
                     budget: int = DEFAULT_BUDGET) -> bool:
    return bool(extension_maps(inst, mode, alpha, budget, limit=1))
