"""Finite topological spaces and point sets over them.

A space stores its points and, for each point x, the bitmask of the minimal
open neighbourhood ``P_x`` (the intersection of all opens containing x).
The open family is recovered from that table on demand: the opens are
exactly the unions of minimal neighbourhoods.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator

from . import kernels
from .ordinal import clamp


class SpaceError(ValueError):
    """Raised for a malformed space or point-set description."""


class MissingEmpty(SpaceError):
    def __init__(self):
        super().__init__("the open family does not contain the empty set")


class MissingUniverse(SpaceError):
    def __init__(self):
        super().__init__("the open family does not contain the whole point set")


class _PairError(SpaceError):
    verb = ""

    def __init__(self, a: list[str], b: list[str]):
        self.a, self.b = a, b
        super().__init__(f"not closed under {self.verb}: {set_repr(a)} and {set_repr(b)}")


class NotClosedUnderUnion(_PairError):
    verb = "union"


class NotClosedUnderIntersection(_PairError):
    verb = "intersection"


class UnknownPoint(SpaceError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"unknown point {point!r}")


class DuplicatePoint(SpaceError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"duplicate point {point!r}")


class SpaceMismatch(ValueError):
    """Two point sets from different spaces were combined."""


def set_repr(names: Iterable[str]) -> str:
    return "{" + ",".join(names) + "}"


def popcount(m: int) -> int:
    return bin(m).count("1")


def bits_of(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


class FiniteSpace:
    """An exact finite topological space.

    Build one with :meth:`from_opens` (validating an explicit open family),
    :meth:`from_nbhd` (a minimal-neighbourhood table) or the
    :meth:`discrete` / :meth:`indiscrete` shortcuts.
    """

    __slots__ = ("points", "n", "nbhd", "full", "_index", "_cache")

    def __init__(self, points: Iterable[str], nbhd: Iterable[int]):
        self.points = tuple(points)
        self.nbhd = tuple(nbhd)
        self.n = len(self.points)
        self.full = (1 << self.n) - 1
        self._index = {p: i for i, p in enumerate(self.points)}
        self._cache = {}
        if len(self._index) != self.n:
            seen = set()
            for p in self.points:
                if p in seen:
                    raise DuplicatePoint(p)
                seen.add(p)
        if len(self.nbhd) != self.n:
            raise SpaceError("neighbourhood table length differs from point count")

    # construction

    @classmethod
    def from_nbhd(cls, points, nbhd) -> FiniteSpace:
        """Space from a minimal-neighbourhood table; checks it is a preorder."""
        space = cls(points, nbhd)
        for x, p in enumerate(space.nbhd):
            if not p >> x & 1 or p & ~space.full:
                raise SpaceError(f"bad neighbourhood for point {space.points[x]!r}")
            for y in bits_of(p):
                if space.nbhd[y] & ~p:
                    raise SpaceError("neighbourhood table is not transitive")
        return space

    @classmethod
    def from_opens(cls, points, opens) -> FiniteSpace:
        """Validate an explicit open family and build the space.

        Raises the first violation found: an unknown point, a missing empty
        set or universe, or the first pair (in size-then-bit order) whose
        union or intersection is missing.
        """
        points = tuple(points)
        index = {}
        for i, p in enumerate(points):
            if p in index:
                raise DuplicatePoint(p)
            index[p] = i
        full = (1 << len(points)) - 1
        masks = set()
        for o in opens:
            m = 0
            for p in o:
                if p not in index:
                    raise UnknownPoint(p)
                m |= 1 << index[p]
            masks.add(m)
        if 0 not in masks:
            raise MissingEmpty()
        if full not in masks:
            raise MissingUniverse()
        ordered = sorted(masks, key=lambda m: (popcount(m), m))
        names = lambda m: [points[i] for i in bits_of(m)]  # noqa: E731
        for i, a in enumerate(ordered):
            for b in ordered[i + 1:]:
                if a | b not in masks:
                    raise NotClosedUnderUnion(names(a), names(b))
                if a & b not in masks:
                    raise NotClosedUnderIntersection(names(a), names(b))
        nbhd = []
        for x in range(len(points)):
            p = full
            for m in ordered:
                if m >> x & 1:
                    p &= m
            nbhd.append(p)
        space = cls(points, nbhd)
        space._cache["opens"] = tuple(ordered)
        return space

    @classmethod
    def discrete(cls, points) -> FiniteSpace:
        points = tuple(points)
        return cls(points, [1 << i for i in range(len(points))])

    @classmethod
    def indiscrete(cls, points) -> FiniteSpace:
        points = tuple(points)
        full = (1 << len(points)) - 1
        return cls(points, [full] * len(points))

    # derived tables

    @property
    def opens(self) -> tuple[int, ...]:
        """All open sets as bitmasks, ordered by size then value."""
        if "opens" not in self._cache:
            found = [m for m in range(self.full + 1) if kernels.spread(self.nbhd, m) == m]
            self._cache["opens"] = tuple(sorted(found, key=lambda m: (popcount(m), m)))
        return self._cache["opens"]

    @property
    def closed_sets(self) -> tuple[int, ...]:
        if "closed" not in self._cache:
            self._cache["closed"] = tuple(sorted((self.full & ~m for m in self.opens),
                                                 key=lambda m: (popcount(m), m)))
        return self._cache["closed"]

    @property
    def closed_nbhd(self) -> tuple[int, ...]:
        """Closure of every minimal neighbourhood."""
        if "cl_nbhd" not in self._cache:
            self._cache["cl_nbhd"] = tuple(kernels.hits(self.nbhd, p) for p in self.nbhd)
        return self._cache["cl_nbhd"]

    def theta_table(self, alpha) -> tuple[int, ...]:
        """Table whose hit-set is the depth-``alpha`` closure.

        Depth 0 is the minimal-neighbourhood table itself (ordinary closure);
        depth k >= 1 maps x to the closure of its minimal k-hull.
        """
        if alpha == 0:
            return self.nbhd
        k = clamp(alpha, self.n)
        tables = self._cache.get("theta")
        if tables is None or len(tables) < k:
            depth = max(k, self.n)
            tables = [tuple(t) for t in kernels.closed_hull_tables(self.nbhd, depth)]
            self._cache["theta"] = tables
        return tables[k - 1]

    def singleton_closures(self, alpha) -> tuple[int, ...]:
        """Depth-``alpha`` closure of every singleton."""
        key = ("sing", clamp(alpha, self.n) if alpha != 0 else 0)
        if key not in self._cache:
            table = self.theta_table(alpha)
            self._cache[key] = tuple(kernels.hits(table, 1 << y) for y in range(self.n))
        return self._cache[key]

    def is_open(self, m: int) -> bool:
        return kernels.spread(self.nbhd, m) == m

    def is_closed(self, m: int) -> bool:
        return kernels.hits(self.nbhd, m) == m

    @property
    def is_discrete(self) -> bool:
        return all(p == 1 << x for x, p in enumerate(self.nbhd))

    # point sets

    def index(self, point: str) -> int:
        try:
            return self._index[point]
        except KeyError:
            raise UnknownPoint(point) from None

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for p in names:
            m |= 1 << self.index(p)
        return m

    def subset(self, names: Iterable[str] = ()) -> PointSet:
        if isinstance(names, str):
            names = [names]
        return PointSet(self, self.mask(names))

    def pset(self, bits: int) -> PointSet:
        return PointSet(self, bits)

    @property
    def empty(self) -> PointSet:
        return PointSet(self, 0)

    @property
    def universe(self) -> PointSet:
        return PointSet(self, self.full)

    def names(self, m: int) -> list[str]:
        return [self.points[i] for i in bits_of(m)]

    # identity and persistence

    def __eq__(self, other) -> bool:
        return (isinstance(other, FiniteSpace) and self.points == other.points
                and self.nbhd == other.nbhd)

    def __hash__(self) -> int:
        return hash((self.points, self.nbhd))

    def __repr__(self) -> str:
        nb = ", ".join(f"{p}:{set_repr(self.names(m))}" for p, m in zip(self.points, self.nbhd))
        return f"FiniteSpace({nb})"

    def to_dict(self) -> dict:
        return {"points": list(self.points), "opens": [self.names(m) for m in self.opens]}

    @classmethod
    def from_dict(cls, data: dict) -> FiniteSpace:
        if not isinstance(data, dict) or "points" not in data or "opens" not in data:
            raise SpaceError("space JSON needs 'points' and 'opens'")
        points = data["points"]
        if not all(isinstance(p, str) for p in points):
            raise SpaceError("point names must be strings")
        return cls.from_opens(points, data["opens"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> FiniteSpace:
        return cls.from_dict(json.loads(text))


def validate_space(points, opens) -> FiniteSpace:
    """Return the space for an explicit open family or raise the first violation."""
    return FiniteSpace.from_opens(points, opens)


class PointSet:
    """A subset of one space's points, stored as a bitmask."""

    __slots__ = ("space", "bits")

    def __init__(self, space: FiniteSpace, bits: int):
        if bits & ~space.full:
            raise SpaceError("point set has bits outside the space")
        self.space = space
        self.bits = bits

    def _other(self, other: PointSet) -> int:
        if not isinstance(other, PointSet):
            return NotImplemented
        if other.space is not self.space and other.space != self.space:
            raise SpaceMismatch("point sets belong to different spaces")
        return other.bits

    def __or__(self, other):
        return PointSet(self.space, self.bits | self._other(other))

    def __and__(self, other):
        return PointSet(self.space, self.bits & self._other(other))

    def __sub__(self, other):
        return PointSet(self.space, self.bits & ~self._other(other))

    def __invert__(self):
        return PointSet(self.space, self.space.full & ~self.bits)

    def __le__(self, other) -> bool:
        return not self.bits & ~self._other(other)

    def __lt__(self, other) -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other) -> bool:
        return other <= self

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.bits == other.bits and self.space == other.space

    def __hash__(self) -> int:
        return hash(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __iter__(self) -> Iterator[str]:
        return iter(self.space.names(self.bits))

    def __contains__(self, point: str) -> bool:
        return bool(self.bits >> self.space.index(point) & 1)

    def names(self) -> list[str]:
        return self.space.names(self.bits)

    def __repr__(self) -> str:
        return set_repr(self.names())


__all__ = [
    "FiniteSpace",
    "PointSet",
    "validate_space",
    "SpaceError",
    "MissingEmpty",
    "MissingUniverse",
    "NotClosedUnderUnion",
    "NotClosedUnderIntersection",
    "UnknownPoint",
    "DuplicatePoint",
    "SpaceMismatch",
]
