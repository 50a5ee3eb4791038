"""Closure, theta-closure, openness and inclusion on representable sets.

Inclusion and disjointness are decided exactly: every atom is a union of
cells of the arrangement cut out by the verticals, diagonals and horizontals
that bound the atoms, so testing one rational point per face, edge and
vertex of that arrangement (plus ``z0``) decides them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from ..ordinal import OMEGA, parse_alpha
from .intervals import Interval, covers_up_to_finite, open_interval, union
from .sets import HEIGHT, Z0, DBand, Line, MPoint, Pt, SetExpr, Tail, VBand, line_point


class NotRepresentable(ValueError):
    pass


# closure

def line_limits(atom) -> list[Interval]:
    """Line points ``c`` with ``(A1(c) ∪ A2(c)) ∩ atom`` infinite."""
    if isinstance(atom, (Pt, Line)):
        return []
    if isinstance(atom, Tail):
        return [open_interval(atom.t - HEIGHT, None)]
    if not isinstance(atom, (VBand, DBand)):
        raise NotRepresentable(f"unsupported atom {atom!r}")
    iv = atom.iv
    if iv.degenerate:
        return [iv]
    if isinstance(atom, VBand):
        # diagonals from c run over x in [c, c + 2]
        spread = Interval(None if iv.lo is None else iv.lo - HEIGHT, iv.hi, False, False)
    else:
        # verticals over c meet diagonal feet in [c - 2, c]
        spread = Interval(iv.lo, None if iv.hi is None else iv.hi + HEIGHT, False, False)
    return [iv, spread]


def limit_intervals(e: SetExpr) -> list[Interval]:
    return union(iv for a in e.atoms for iv in line_limits(a))


def m_closure(e: SetExpr) -> SetExpr:
    """Closure in the Mysior space.

    Adds the line points whose basic neighbourhoods all meet ``e`` (the
    intersection with ``A1 ∪ A2`` is infinite) and ``z0`` when ``e`` is
    unbounded to the right. Isolated points are never added.
    """
    limits = limit_intervals(e)
    unbounded = e.x_bound() == "inf"
    atoms = list(e.atoms) + [Line(iv) for iv in limits]
    if unbounded:
        atoms.append(Pt(Z0))
    minus = {p for p in e.minus
             if not (p.kind == "line" and any(p.x in iv for iv in limits))
             and not (p.is_z0 and unbounded)}
    return SetExpr(tuple(atoms), minus)


def m_theta_closure(e: SetExpr, alpha=1) -> SetExpr:
    """theta^alpha-closure for finite alpha, computed per point class.

    Isolated points and line points have clopen basic neighbourhoods
    ({p} and A1 ∪ A2), so they behave as for the closure. ``z0`` is outside
    the result exactly when ``e`` is bounded to the right and misses ``z0``:
    then a hull grown from a far tail has closure disjoint from ``e``.
    """
    alpha = parse_alpha(alpha)
    if alpha == OMEGA:
        raise NotRepresentable("omega-hulls of z0 are not uniform over representable sets")
    if alpha == 0:
        return m_closure(e)
    cl = m_closure(e)
    if Z0 in cl:
        return cl
    bound = e.x_bound()
    if bound is not None:
        from .certificates import z0_hull_chain
        start = (bound if isinstance(bound, Fraction) else Fraction(bound)).__floor__() + 2 * int(alpha) + 1
        last = z0_hull_chain(start, int(alpha))[-1]
        if not disjoint(m_closure(last), e):
            raise NotRepresentable("far hull of z0 unexpectedly meets the set")
    return cl


# exact decision by sampling the arrangement

def _lines(exprs) -> tuple[set, set, set]:
    vert, diag, horiz = set(), set(), {Fraction(0), HEIGHT}
    for e in exprs:
        pts = [a.p for a in e.atoms if isinstance(a, Pt)] + list(e.minus)
        for p in pts:
            if not p.is_z0:
                vert.add(p.x)
                diag.add(p.x - p.y)
                horiz.add(p.y)
        for a in e.atoms:
            if isinstance(a, (Line, VBand)):
                vert.update(a.iv.endpoints())
            elif isinstance(a, DBand):
                diag.update(a.iv.endpoints())
            elif isinstance(a, Tail):
                vert.add(a.t)
    return vert, diag, horiz


def _refine(values: list[Fraction]) -> list[Fraction]:
    """Each value, the midpoints between neighbours, and one point past each end."""
    if not values:
        return [Fraction(0)]
    out = [values[0] - 1]
    for a, b in zip(values, values[1:]):
        out += [a, (a + b) / 2]
    out += [values[-1], values[-1] + 1]
    return out


def sample_points(*exprs: SetExpr) -> Iterator[MPoint]:
    """One point in every face, edge and vertex of the arrangement, then ``z0``."""
    vert, diag, horiz = _lines(exprs)
    levels = set(horiz)
    levels.update(v - d for v in vert for d in diag if v - d >= 0)
    levels = sorted(levels)
    ys = []
    for a, b in zip(levels, levels[1:]):
        ys += [a, (a + b) / 2]
    ys += [levels[-1], levels[-1] + 1]
    for y in ys:
        xs = sorted(vert | {d + y for d in diag})
        for x in _refine(xs):
            yield MPoint.at(x, y)
    yield Z0


def subset_witness(a: SetExpr, b: SetExpr) -> MPoint | None:
    """A point of ``a`` outside ``b``, or None when ``a ⊆ b``."""
    for p in sample_points(a, b):
        if p in a and p not in b:
            return p
    return None


def subset(a: SetExpr, b: SetExpr) -> bool:
    return subset_witness(a, b) is None


def common_point(a: SetExpr, b: SetExpr) -> MPoint | None:
    for p in sample_points(a, b):
        if p in a and p in b:
            return p
    return None


def disjoint(a: SetExpr, b: SetExpr) -> bool:
    return common_point(a, b) is None


def equal(a: SetExpr, b: SetExpr) -> bool:
    return subset(a, b) and subset(b, a)


def is_empty(a: SetExpr) -> bool:
    return common_point(a, a) is None


# openness

def _vertical_pieces(atom, c: Fraction):
    """y-spans of ``A1(c)`` covered by the atom."""
    if isinstance(atom, (VBand, Line)) and c in atom.iv:
        return [(Fraction(0), HEIGHT if isinstance(atom, VBand) else Fraction(0))]
    if isinstance(atom, Tail) and c >= atom.t:
        return [(Fraction(0), HEIGHT)]
    if isinstance(atom, DBand):
        iv = atom.iv
        return [(None if iv.hi is None else c - iv.hi, None if iv.lo is None else c - iv.lo)]
    return []


def _diagonal_pieces(atom, c: Fraction):
    """y-spans of ``A2(c)`` covered by the atom."""
    if isinstance(atom, (DBand, Line)) and c in atom.iv:
        return [(Fraction(0), HEIGHT if isinstance(atom, DBand) else Fraction(0))]
    if isinstance(atom, Tail):
        return [(atom.t - c, None)]
    if isinstance(atom, VBand):
        iv = atom.iv
        return [(None if iv.lo is None else iv.lo - c, None if iv.hi is None else iv.hi - c)]
    return []


def _line_breakpoints(e: SetExpr) -> list[Fraction]:
    pts = set()
    for a in e.atoms:
        if isinstance(a, VBand):
            pts.update(v + d for v in a.iv.endpoints() for d in (0, -HEIGHT))
        elif isinstance(a, DBand):
            pts.update(v + d for v in a.iv.endpoints() for d in (0, HEIGHT))
        elif isinstance(a, Tail):
            pts.update((a.t, a.t - HEIGHT))
        elif isinstance(a, Line):
            pts.update(a.iv.endpoints())
        elif not a.p.is_z0:
            pts.add(a.p.x)
    pts.update(p.x for p in e.minus if not p.is_z0)
    return sorted(pts)


def open_witness(e: SetExpr) -> MPoint | None:
    """A point of ``e`` with no basic neighbourhood inside ``e``, or None if ``e`` is open.

    Exact: along the line the covering pattern of ``A1(c)`` and ``A2(c)`` only
    changes at finitely many breakpoints, so breakpoints and the gaps between
    them are tested.
    """
    if Z0 in e and not any(isinstance(a, Tail) for a in e.atoms):
        return Z0
    for c in _refine(_line_breakpoints(e)):
        p = line_point(c)
        if p not in e:
            continue
        vertical = [s for a in e.atoms for s in _vertical_pieces(a, c)]
        diagonal = [s for a in e.atoms for s in _diagonal_pieces(a, c)]
        if not (covers_up_to_finite(vertical, Fraction(0), HEIGHT)
                and covers_up_to_finite(diagonal, Fraction(0), HEIGHT)):
            return p
    return None


def is_open(e: SetExpr) -> bool:
    return open_witness(e) is None


def is_closed(e: SetExpr) -> bool:
    return subset(m_closure(e), e)


def is_clopen(e: SetExpr) -> bool:
    return is_open(e) and is_closed(e)
