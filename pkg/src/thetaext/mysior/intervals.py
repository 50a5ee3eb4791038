"""Exact rational intervals on the real line. ``None`` stands for an infinite end."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


def q(value) -> Fraction:
    """Coerce ints, strings such as ``"3/2"``, or ``[num, den]`` pairs to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; use an int, a string or a Fraction")
    if isinstance(value, (list, tuple)):
        num, den = value
        return Fraction(int(num), int(den))
    return Fraction(value)


def q_json(value: Fraction | None):
    return None if value is None else [value.numerator, value.denominator]


@dataclass(frozen=True)
class Interval:
    lo: Fraction | None
    hi: Fraction | None
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "lo", None if self.lo is None else q(self.lo))
        object.__setattr__(self, "hi", None if self.hi is None else q(self.hi))
        if self.lo is None:
            object.__setattr__(self, "lo_closed", False)
        if self.hi is None:
            object.__setattr__(self, "hi_closed", False)
        if self.lo is not None and self.hi is not None:
            if self.lo > self.hi or (self.lo == self.hi and not (self.lo_closed and self.hi_closed)):
                raise ValueError(f"empty interval {self}")

    def __contains__(self, x: Fraction) -> bool:
        if self.lo is not None and (x < self.lo or (x == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (x > self.hi or (x == self.hi and not self.hi_closed)):
            return False
        return True

    @property
    def degenerate(self) -> bool:
        return self.lo is not None and self.lo == self.hi

    def shifted(self, d_lo, d_hi, lo_closed=None, hi_closed=None) -> Interval:
        return Interval(None if self.lo is None else self.lo + d_lo,
                        None if self.hi is None else self.hi + d_hi,
                        self.lo_closed if lo_closed is None else lo_closed,
                        self.hi_closed if hi_closed is None else hi_closed)

    def endpoints(self) -> list[Fraction]:
        return [e for e in (self.lo, self.hi) if e is not None]

    def __str__(self) -> str:
        left = "(-inf" if self.lo is None else ("[" if self.lo_closed else "(") + str(self.lo)
        right = "inf)" if self.hi is None else str(self.hi) + ("]" if self.hi_closed else ")")
        return f"{left}, {right}"

    def to_dict(self) -> dict:
        return {"lo": q_json(self.lo), "hi": q_json(self.hi),
                "lo_closed": self.lo_closed, "hi_closed": self.hi_closed}

    @classmethod
    def from_dict(cls, d: dict) -> Interval:
        return cls(None if d.get("lo") is None else q(d["lo"]),
                   None if d.get("hi") is None else q(d["hi"]),
                   d.get("lo_closed", True), d.get("hi_closed", True))


def closed(a, b) -> Interval:
    return Interval(q(a), q(b), True, True)


def open_interval(a, b) -> Interval:
    return Interval(None if a is None else q(a), None if b is None else q(b), False, False)


def point(a) -> Interval:
    return Interval(q(a), q(a))


def _lo_key(iv: Interval):
    # sort by left end; closed before open at the same value
    return (0, 0, 0) if iv.lo is None else (1, iv.lo, 0 if iv.lo_closed else 1)


def _max_hi(a: Interval, b: Interval) -> tuple[Fraction | None, bool]:
    if a.hi is None or b.hi is None:
        return None, False
    if a.hi != b.hi:
        return (a.hi, a.hi_closed) if a.hi > b.hi else (b.hi, b.hi_closed)
    return a.hi, a.hi_closed or b.hi_closed


def union(intervals: Iterable[Interval]) -> list[Interval]:
    """Merge into a sorted list of pairwise disjoint, non-adjacent intervals."""
    out: list[Interval] = []
    for iv in sorted(intervals, key=_lo_key):
        if out:
            last = out[-1]
            touching = (last.hi is None or iv.lo is None or iv.lo < last.hi
                        or (iv.lo == last.hi and (iv.lo_closed or last.hi_closed)))
            if touching:
                hi, hi_closed = _max_hi(last, iv)
                out[-1] = Interval(last.lo, hi, last.lo_closed, hi_closed)
                continue
        out.append(iv)
    return out


def covers_up_to_finite(pieces: Iterable[tuple[Fraction | None, Fraction | None]], lo: Fraction, hi: Fraction) -> bool:
    """True iff [lo, hi] minus the union of the pieces is finite.

    Pieces are (a, b) spans with ``None`` for infinite ends; degenerate and
    empty spans contribute only finitely many points and are ignored.
    """
    spans = []
    for a, b in pieces:
        a = lo if a is None else max(a, lo)
        b = hi if b is None else min(b, hi)
        if a < b:
            spans.append((a, b))
    spans.sort()
    reach = lo
    for a, b in spans:
        if a > reach:
            return False
        reach = max(reach, b)
    return reach >= hi
