"""Brute-force reference implementations.

These follow the definitions literally (quantifying over whole open
families, all hull chains, all families of sets, all total maps) and never
use minimal neighbourhoods, so they can check the fast paths. They are only
practical on spaces of a handful of points.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import kernels
from .ordinal import OMEGA
from .space import FiniteSpace, bits_of


def raw_topologies(n: int) -> list[frozenset[int]]:
    """All open families on n points, by filtering every candidate family."""
    full = (1 << n) - 1
    middle = [m for m in range(1, full)]
    out = []
    for choice in range(1 << len(middle)):
        fam = {0, full}
        fam.update(m for j, m in enumerate(middle) if choice >> j & 1)
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            out.append(frozenset(fam))
    return out


def closure(space: FiniteSpace, m: int) -> int:
    """Intersection of all closed supersets."""
    out = space.full
    for o in space.opens:
        c = space.full & ~o
        if not m & ~c:
            out &= c
    return out


def interior(space: FiniteSpace, m: int) -> int:
    out = 0
    for o in space.opens:
        if not o & ~m:
            out |= o
    return out


def _depth(space: FiniteSpace, alpha) -> int:
    # a chain longer than the number of points repeats itself
    return space.n + 1 if alpha is OMEGA else alpha


def hull_chains(space: FiniteSpace, a: int, alpha) -> list[tuple[int, ...]]:
    """Every chain (U_1, ..., U_alpha) of open neighbourhoods of ``a`` with
    cl U_k inside U_{k+1}. OMEGA is treated as a long finite depth."""
    opens = [o for o in space.opens if not a & ~o]
    chains = [(o,) for o in opens]
    for _ in range(_depth(space, alpha) - 1):
        chains = [c + (o,) for c in chains for o in opens if not closure(space, c[-1]) & ~o]
    return chains


def hulls(space: FiniteSpace, a: int, alpha) -> set[int]:
    """All alpha-hulls of ``a``, via reachable chain tops."""
    opens = [o for o in space.opens if not a & ~o]
    tops = set(opens)
    for _ in range(_depth(space, alpha) - 1):
        tops = {o for o in opens if any(not closure(space, t) & ~o for t in tops)}
    return tops


def theta_closure(space: FiniteSpace, m: int, alpha) -> int:
    """x is outside iff some alpha-hull of x has closure missing ``m``."""
    if alpha == 0:
        return closure(space, m)
    out = 0
    for x in range(space.n):
        if all(closure(space, u) & m for u in hulls(space, 1 << x, alpha)):
            out |= 1 << x
    return out


def classical_theta_closure(space: FiniteSpace, m: int) -> int:
    """x is inside iff the closure of every open neighbourhood of x meets m."""
    out = 0
    for x in range(space.n):
        if all(closure(space, o) & m for o in space.opens if o >> x & 1):
            out |= 1 << x
    return out


def is_continuous(x: FiniteSpace, y: FiniteSpace, fmap, domain: int | None = None) -> bool:
    """Preimage of every open of Y is open in the subspace ``domain``."""
    dom = x.full if domain is None else domain
    traces = {o & dom for o in x.opens}
    for v in y.opens:
        pre = sum(1 << i for i in bits_of(dom) if v >> fmap[i] & 1)
        if pre not in traces:
            return False
    return True


def is_theta_continuous(x: FiniteSpace, y: FiniteSpace, fmap, alpha, domain: int | None = None) -> bool:
    """Every alpha-hull U of f(p) admits a neighbourhood W of p with f(W) in cl U."""
    dom = x.full if domain is None else domain
    for p in bits_of(dom):
        nbhds = [o & dom for o in x.opens if o >> p & 1]
        for u in hulls(y, 1 << fmap[p], alpha):
            cu = closure(y, u)
            if not any(all(cu >> fmap[i] & 1 for i in bits_of(w)) for w in nbhds):
                return False
    return True


@lru_cache(maxsize=None)
def _theta_closures_of_all_subsets(y: FiniteSpace, alpha) -> tuple[int, ...]:
    return tuple(theta_closure(y, a, alpha) for a in range(y.full + 1))


def _preimage_closure(inst, a: int) -> int:
    return closure(inst.x_space, inst.preimage(a))


def star_by_families(inst) -> bool:
    """Condition on every family of closed subsets of Y."""
    y = inst.y_space
    closed = [c for c in y.closed_sets]
    pre = [_preimage_closure(inst, c) for c in closed]
    return kernels.family_violation(closed, pre, y.full, inst.x_space.full) < 0


def plus_by_families(inst, alpha) -> bool:
    """Condition on every family of arbitrary subsets of Y."""
    y = inst.y_space
    subsets = list(range(y.full + 1))
    tc = _theta_closures_of_all_subsets(y, alpha)
    pre = [_preimage_closure(inst, a) for a in subsets]
    return kernels.family_violation([tc[a] for a in subsets], pre, y.full, inst.x_space.full) < 0


def phi(inst, p: int, alpha) -> int:
    """Intersection over all open neighbourhoods P of p of cl_alpha f(P & S)."""
    x, y = inst.x_space, inst.y_space
    tc = _theta_closures_of_all_subsets(y, alpha)
    out = y.full
    for o in x.opens:
        if o >> p & 1:
            img = 0
            for i in bits_of(o & inst.dense.bits):
                img |= 1 << inst.fmap[i]
            out &= tc[img]
    return out


def interior_points(inst, v: int, alpha) -> int:
    return sum(1 << p for p in range(inst.x_space.n) if not phi(inst, p, alpha) & ~v)


def plusplus_by_chains(inst, alpha) -> bool:
    """Every hull chain of every point of Y admits a sandwiched open V of X."""
    x, y = inst.x_space, inst.y_space
    for q in range(y.n):
        for chain in hull_chains(y, 1 << q, alpha):
            lower = interior_points(inst, chain[0], alpha)
            upper = interior_points(inst, closure(y, chain[-1]), alpha)
            if not any(not lower & ~v and not v & ~upper for v in x.opens):
                return False
    return True


def extensions(inst, mode: str, alpha) -> list[tuple[int, ...]]:
    """Every total extension that is continuous or theta_alpha-continuous."""
    x, y = inst.x_space, inst.y_space
    free = [i for i in range(x.n) if not inst.dense.bits >> i & 1]
    out = []
    for values in itertools.product(range(y.n), repeat=len(free)):
        f = list(inst.fmap)
        for i, v in zip(free, values):
            f[i] = v
        ok = is_continuous(x, y, f) if mode == "continuous" else is_theta_continuous(x, y, f, alpha)
        if ok:
            out.append(tuple(f))
    return out
