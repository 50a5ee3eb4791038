"""Exhaustive enumeration of finite topologies and dense-map instances.

Topologies on n labelled points are in bijection with preorders, and a
preorder is fixed by its minimal-neighbourhood table. Tables are grown one
point at a time: a preorder on points 0..n-1 is a preorder on 0..n-2 plus a
down-set D and an up-set U for the new point with every element of D below
every element of U.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Iterator

from . import kernels
from .maps import DenseMapInstance
from .ordinal import parse_alpha, to_json
from .separation import is_regular, is_regular_u_alpha, is_u_alpha
from .space import FiniteSpace, bits_of, popcount

MAX_POINTS = 6
DEFAULT_CAP = 5

X_LABELS = tuple(string.ascii_lowercase)
Y_LABELS = tuple(str(i) for i in range(10))


class CapExceeded(ValueError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"{n} points exceeds the enumeration cap of {cap}")


@lru_cache(maxsize=None)
def preorder_tables(n: int) -> tuple[tuple[int, ...], ...]:
    """Minimal-neighbourhood tables of all preorders on n labelled points.

    ``table[x]`` is the set of points above-or-equal x (its minimal open
    neighbourhood). Order is deterministic.
    """
    if n == 0:
        return ((),)
    out = []
    new = n - 1
    for old in preorder_tables(n - 1):
        # ups: sets U (points y with new <= y) that are up-closed;
        # downs: sets D (points x with x <= new) that are down-closed
        up_sets = [u for u in range(1 << new) if kernels.spread(old, u) == u]
        down_sets = [d for d in range(1 << new) if _down_closed(old, d)]
        for d in down_sets:
            for u in up_sets:
                if any(old[x] & u != u for x in bits_of(d)):
                    continue
                table = [old[x] | (1 << new) if d >> x & 1 else old[x] for x in range(new)]
                table.append((1 << new) | u)
                out.append(tuple(table))
    return tuple(out)


def _down_closed(table, d: int) -> bool:
    # x <= y iff y in table[x]; D is down-closed if y in D, x <= y imply x in D
    for x in range(len(table)):
        if not d >> x & 1 and table[x] & d:
            return False
    return True


def _invariants(table: tuple[int, ...]) -> list[tuple]:
    """Per-point isomorphism invariants: up-set and down-set sizes, refined once by neighbours."""
    n = len(table)
    down = [sum(1 for y in range(n) if table[y] >> x & 1) for x in range(n)]
    base = [(popcount(table[x]), down[x]) for x in range(n)]
    return [(base[x], tuple(sorted(base[y] for y in bits_of(table[x]))),
             tuple(sorted(base[y] for y in range(n) if table[y] >> x & 1))) for x in range(n)]


def canonical_table(table: tuple[int, ...]) -> tuple[int, ...]:
    """Smallest relabelling among those that sort points by their invariants.

    Isomorphic tables admit the same set of such relabellings up to the
    isomorphism, so the minimum is a canonical form.
    """
    n = len(table)
    inv = _invariants(table)
    classes = {}
    for x in sorted(range(n), key=lambda x: inv[x]):
        classes.setdefault(inv[x], []).append(x)
    blocks = []
    slot = 0
    for key in sorted(classes):
        members = classes[key]
        blocks.append((members, list(range(slot, slot + len(members)))))
        slot += len(members)
    best = None
    perm = [0] * n
    for choice in itertools.product(*(itertools.permutations(targets) for _, targets in blocks)):
        for (members, _), targets in zip(blocks, choice):
            for x, t in zip(members, targets):
                perm[x] = t
        relabelled = [0] * n
        for x in range(n):
            m = 0
            for y in bits_of(table[x]):
                m |= 1 << perm[y]
            relabelled[perm[x]] = m
        cand = tuple(relabelled)
        if best is None or cand < best:
            best = cand
    return best


@lru_cache(maxsize=None)
def _unlabelled(n: int) -> tuple[tuple[int, ...], ...]:
    seen = {}
    for t in preorder_tables(n):
        c = canonical_table(t)
        if c not in seen:
            seen[c] = t
    return tuple(seen.values())


def enumerate_topologies(n: int, up_to_homeomorphism: bool = False, labels=None,
                         cap: int = DEFAULT_CAP) -> Iterator[FiniteSpace]:
    """Every topology on n points, each once.

    With ``up_to_homeomorphism`` one representative per homeomorphism class
    is produced (the first labelled table met in enumeration order).
    """
    if n > min(cap, MAX_POINTS):
        raise CapExceeded(n, min(cap, MAX_POINTS))
    labels = tuple(labels) if labels is not None else Y_LABELS[:n]
    tables = _unlabelled(n) if up_to_homeomorphism else preorder_tables(n)
    for t in tables:
        yield FiniteSpace(labels[:n], t)


Y_CLASSES = ("any", "regular", "regular_u_alpha", "u_alpha", "discrete")
F_CLASSES = ("continuous", "theta", "any")


@dataclass(frozen=True)
class InstanceFilter:
    max_x_points: int = 3
    max_y_points: int = 2
    y_class: str = "any"
    y_alpha: object = 1
    f_class: str = "continuous"
    f_alpha: object = 1
    up_to_homeomorphism: bool = False
    min_x_points: int = 1
    min_y_points: int = 1
    proper_dense: bool = False

    def __post_init__(self):
        if self.max_x_points < 1 or self.max_y_points < 1:
            raise ValueError("point bounds must be at least 1")
        if self.y_class not in Y_CLASSES:
            raise ValueError(f"unknown codomain class {self.y_class!r}")
        if self.f_class not in F_CLASSES:
            raise ValueError(f"unknown map class {self.f_class!r}")
        object.__setattr__(self, "y_alpha", parse_alpha(self.y_alpha))
        object.__setattr__(self, "f_alpha", parse_alpha(self.f_alpha))

    def y_ok(self, y: FiniteSpace) -> bool:
        if self.y_class == "any":
            return True
        if self.y_class == "discrete":
            return y.is_discrete
        if self.y_class == "regular":
            return is_regular(y)
        if self.y_class == "regular_u_alpha":
            return is_regular_u_alpha(y, self.y_alpha)
        return is_u_alpha(y, self.y_alpha)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["y_alpha"] = to_json(self.y_alpha)
        d["f_alpha"] = to_json(self.f_alpha)
        return d


def x_spaces(flt: InstanceFilter, cap: int = DEFAULT_CAP) -> list[FiniteSpace]:
    out = []
    for nx in range(flt.min_x_points, flt.max_x_points + 1):
        out.extend(enumerate_topologies(nx, flt.up_to_homeomorphism, X_LABELS, cap))
    return out


def y_spaces(flt: InstanceFilter, cap: int = DEFAULT_CAP) -> list[FiniteSpace]:
    out = []
    for ny in range(flt.min_y_points, flt.max_y_points + 1):
        out.extend(y for y in enumerate_topologies(ny, flt.up_to_homeomorphism, Y_LABELS, cap)
                   if flt.y_ok(y))
    return out


def dense_subsets(x: FiniteSpace, proper: bool = False) -> list[int]:
    out = []
    for s in range(1, x.full + 1):
        if proper and s == x.full:
            continue
        if kernels.hits(x.nbhd, s) == x.full:
            out.append(s)
    return out


def instances_for_x(x: FiniteSpace, ys: list[FiniteSpace], flt: InstanceFilter) -> Iterator[DenseMapInstance]:
    """All instances over one domain space, in canonical order."""
    for s in dense_subsets(x, flt.proper_dense):
        members = list(bits_of(s))
        for y in ys:
            if flt.f_class == "continuous":
                target = y.nbhd
            elif flt.f_class == "theta":
                target = y.theta_table(flt.f_alpha)
            else:
                target = None
            fmap = [-1] * x.n
            for values in itertools.product(range(y.n), repeat=len(members)):
                for i, v in zip(members, values):
                    fmap[i] = v
                if target is not None and kernels.maps_into(x.nbhd, target, fmap, s) >= 0:
                    continue
                yield DenseMapInstance._trusted(x, y, s, fmap, flt.f_class, flt.f_alpha)


def enumerate_instances(flt: InstanceFilter, cap: int = DEFAULT_CAP) -> Iterator[DenseMapInstance]:
    """Every (X, S dense, Y, f) within the filter's bounds, deterministically ordered."""
    ys = y_spaces(flt, cap)
    for x in x_spaces(flt, cap):
        yield from instances_for_x(x, ys, flt)
