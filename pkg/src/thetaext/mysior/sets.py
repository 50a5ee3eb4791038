"""Points and representable subsets of the Mysior space.

The space is the closed upper half-plane ``y >= 0`` plus one extra point
``z0 = (0, -1)``. Points with ``y > 0`` are isolated; a line point ``(c, 0)``
has basic neighbourhoods ``A1(c) ∪ A2(c)`` minus finite sets not containing
it, where ``A1(c)`` is the vertical segment over ``c`` and ``A2(c)`` the
diagonal segment ``{(c + y, y)}``, both of height 2; ``z0`` has the tails
``U_i = {z0} ∪ {x >= i}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .intervals import Interval, closed, point, q, q_json

HEIGHT = Fraction(2)


@dataclass(frozen=True, order=True)
class MPoint:
    kind: str  # "upper", "line" or "z0"
    x: Fraction | None = None
    y: Fraction | None = None

    def __post_init__(self):
        if self.kind == "z0":
            return
        object.__setattr__(self, "x", q(self.x))
        object.__setattr__(self, "y", q(self.y))
        if self.kind == "line" and self.y != 0:
            raise ValueError("line points have y = 0")
        if self.kind == "upper" and self.y <= 0:
            raise ValueError("upper points have y > 0")
        if self.kind not in ("upper", "line"):
            raise ValueError(f"unknown point kind {self.kind!r}")

    @classmethod
    def at(cls, x, y) -> MPoint:
        y = q(y)
        if y < 0:
            raise ValueError("points of the half-plane have y >= 0")
        return cls("line" if y == 0 else "upper", q(x), y)

    @property
    def is_z0(self) -> bool:
        return self.kind == "z0"

    def __str__(self) -> str:
        return "z0" if self.is_z0 else f"({self.x}, {self.y})"

    def to_dict(self) -> dict:
        if self.is_z0:
            return {"kind": "z0"}
        return {"kind": self.kind, "x": q_json(self.x), "y": q_json(self.y)}

    @classmethod
    def from_dict(cls, d: dict) -> MPoint:
        if d["kind"] == "z0":
            return Z0
        return cls.at(q(d["x"]), q(d.get("y", 0)))


Z0 = MPoint("z0")


def line_point(c) -> MPoint:
    return MPoint("line", q(c), Fraction(0))


# atoms

@dataclass(frozen=True)
class Pt:
    p: MPoint

    def contains(self, p: MPoint) -> bool:
        return p == self.p

    def x_bound(self):
        return None if self.p.is_z0 else self.p.x

    def to_dict(self) -> dict:
        return {"kind": "point", "point": self.p.to_dict()}


@dataclass(frozen=True)
class Line:
    """Line points ``(x, 0)`` with ``x`` in the interval."""
    iv: Interval

    def contains(self, p: MPoint) -> bool:
        return p.kind == "line" and p.x in self.iv

    def x_bound(self):
        return self.iv.hi if self.iv.hi is not None else "inf"

    def to_dict(self) -> dict:
        return {"kind": "line", "interval": self.iv.to_dict()}


@dataclass(frozen=True)
class VBand:
    """``{(x, y) : x in I, 0 <= y <= 2}``; ``A1(c)`` is ``VBand([c, c])``."""
    iv: Interval

    def contains(self, p: MPoint) -> bool:
        return not p.is_z0 and p.y <= HEIGHT and p.x in self.iv

    def x_bound(self):
        return self.iv.hi if self.iv.hi is not None else "inf"

    def to_dict(self) -> dict:
        return {"kind": "vband", "interval": self.iv.to_dict()}


@dataclass(frozen=True)
class DBand:
    """``{(x + y, y) : x in I, 0 <= y <= 2}``; ``A2(c)`` is ``DBand([c, c])``."""
    iv: Interval

    def contains(self, p: MPoint) -> bool:
        return not p.is_z0 and p.y <= HEIGHT and (p.x - p.y) in self.iv

    def x_bound(self):
        return self.iv.hi + HEIGHT if self.iv.hi is not None else "inf"

    def to_dict(self) -> dict:
        return {"kind": "dband", "interval": self.iv.to_dict()}


@dataclass(frozen=True)
class Tail:
    """``{(x, y) : x >= t}``, with ``z0`` when ``with_z0``; ``U_i`` is ``Tail(i)``."""
    t: Fraction
    with_z0: bool = True

    def __post_init__(self):
        object.__setattr__(self, "t", q(self.t))

    def contains(self, p: MPoint) -> bool:
        return self.with_z0 if p.is_z0 else p.x >= self.t

    def x_bound(self):
        return "inf"

    def to_dict(self) -> dict:
        return {"kind": "tail", "t": q_json(self.t), "z0": self.with_z0}


Atom = Pt | Line | VBand | DBand | Tail


def atom_from_dict(d: dict) -> Atom:
    kind = d["kind"]
    if kind == "point":
        return Pt(MPoint.from_dict(d["point"]))
    if kind == "z0":
        return Pt(Z0)
    if kind == "tail":
        return Tail(q(d["t"]), d.get("z0", True))
    cls = {"line": Line, "vband": VBand, "dband": DBand}.get(kind)
    if cls is None:
        raise ValueError(f"unknown atom kind {kind!r}")
    return cls(Interval.from_dict(d["interval"]))


@dataclass(frozen=True)
class SetExpr:
    """The union of ``atoms`` minus the finite point set ``minus``."""
    atoms: tuple = ()
    minus: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        object.__setattr__(self, "minus", frozenset(self.minus))

    def __contains__(self, p: MPoint) -> bool:
        return p not in self.minus and any(a.contains(p) for a in self.atoms)

    def __or__(self, other: SetExpr) -> SetExpr:
        # a removed point survives only if neither side keeps it
        minus = {p for p in self.minus | other.minus if p not in self and p not in other}
        return SetExpr(self.atoms + other.atoms, minus)

    def without(self, points: Iterable[MPoint]) -> SetExpr:
        return SetExpr(self.atoms, self.minus | frozenset(points))

    def x_bound(self):
        """Largest x-coordinate reached by the atoms, ``"inf"`` if unbounded, None if empty."""
        bounds = [a.x_bound() for a in self.atoms]
        bounds = [b for b in bounds if b is not None]
        if not bounds:
            return None
        if "inf" in bounds:
            return "inf"
        return max(bounds)

    def to_dict(self) -> dict:
        return {"atoms": [a.to_dict() for a in self.atoms],
                "minus": [p.to_dict() for p in sorted(self.minus)]}

    @classmethod
    def from_dict(cls, d: dict) -> SetExpr:
        return cls(tuple(atom_from_dict(a) for a in d.get("atoms", [])),
                   frozenset(MPoint.from_dict(p) for p in d.get("minus", [])))

    def __str__(self) -> str:
        parts = " ∪ ".join(_atom_str(a) for a in self.atoms) or "∅"
        if self.minus:
            parts += " ∖ {" + ", ".join(str(p) for p in sorted(self.minus)) + "}"
        return parts


def _atom_str(a: Atom) -> str:
    if isinstance(a, Pt):
        return "{" + str(a.p) + "}"
    if isinstance(a, Tail):
        return f"U({a.t})" if a.with_z0 else f"tail({a.t})"
    return f"{type(a).__name__}{a.iv}"


EMPTY = SetExpr()


def single(p: MPoint) -> SetExpr:
    return SetExpr((Pt(p),))


def A1(c) -> VBand:
    return VBand(point(c))


def A2(c) -> DBand:
    return DBand(point(c))


def basic_nbhd(c, removed: Iterable[MPoint] = ()) -> SetExpr:
    """``(A1(c) ∪ A2(c)) ∖ removed`` for a line point ``(c, 0)``."""
    removed = frozenset(removed)
    if line_point(c) in removed:
        raise ValueError("a basic neighbourhood keeps its centre")
    return SetExpr((A1(c), A2(c)), removed)


def U(i) -> SetExpr:
    """The basic neighbourhood ``U_i(z0)``."""
    return SetExpr((Tail(q(i), True),))


def L(i) -> SetExpr:
    """The unit segment ``L_i = {(x, 0) : i - 1 <= x <= i}``."""
    return SetExpr((Line(closed(q(i) - 1, q(i))),))


def whole_line() -> SetExpr:
    return SetExpr((Line(Interval(None, None)),))
