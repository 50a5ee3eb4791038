"""Pure-Python bitmask kernels.

Every space is handed to these functions as its minimal-neighbourhood table:
``nbhd[x]`` is the bitmask of the smallest open set containing point ``x``.
The compiled module ``_kernels`` exports the same functions with the same
signatures; ``thetaext.kernels`` picks one at import time.
"""


def hits(table, m):
    """Mask of the points x with ``table[x] & m`` nonzero."""
    out = 0
    bit = 1
    for t in table:
        if t & m:
            out |= bit
        bit <<= 1
    return out


def spread(table, a):
    """Union of ``table[x]`` over the points x of ``a``."""
    out = 0
    while a:
        low = a & -a
        out |= table[low.bit_length() - 1]
        a ^= low
    return out


def hull_chain(nbhd, a, depth):
    """Minimal hull chain of ``a``: ``[U_1, ..., U_depth]``."""
    u = spread(nbhd, a)
    chain = [u]
    for _ in range(depth - 1):
        u = spread(nbhd, hits(nbhd, u))
        chain.append(u)
    return chain


def closed_hull_tables(nbhd, depth):
    """``tables[k - 1][x]`` is the closure of the minimal k-hull of ``{x}``."""
    cur = [hits(nbhd, p) for p in nbhd]
    tables = [cur]
    for _ in range(depth - 1):
        cur = [hits(nbhd, spread(nbhd, c)) for c in cur]
        tables.append(cur)
    return tables


def shrink(nbhd, closed_nbhd, v):
    """Union of the ``nbhd[x]`` whose closure lies inside ``v``."""
    out = 0
    outside = ~v
    for p, c in zip(nbhd, closed_nbhd):
        if not c & outside:
            out |= p
    return out


def image(fmap, a):
    out = 0
    while a:
        low = a & -a
        out |= 1 << fmap[low.bit_length() - 1]
        a ^= low
    return out


def maps_into(src_nbhd, target, fmap, domain):
    """First x in ``domain`` with f(nbhd[x] & domain) not inside target[f(x)].

    Returns -1 when there is none, i.e. when f sends every minimal
    neighbourhood into the target set of its centre's image.
    """
    a = domain
    while a:
        low = a & -a
        x = low.bit_length() - 1
        img = image(fmap, src_nbhd[x] & domain)
        if img & ~target[fmap[x]]:
            return x
        a ^= low
    return -1


def extensions(src_nbhd, target, fmap, free, ny, limit):
    """All completions of the partial map ``fmap`` on the ``free`` points.

    A completion F is kept when F(nbhd[x]) lies inside ``target[F(x)]`` for
    every x. At most ``limit`` completions are returned (limit < 0: all).
    """
    n = len(src_nbhd)
    full = (1 << n) - 1
    f = list(fmap)
    k = len(free)
    found = []
    for i in free:
        f[i] = 0
    while True:
        if maps_into(src_nbhd, target, f, full) < 0:
            found.append(tuple(f))
            if 0 <= limit <= len(found):
                return found
        j = 0
        while j < k:
            i = free[j]
            f[i] += 1
            if f[i] < ny:
                break
            f[i] = 0
            j += 1
        if j == k:
            return found


def family_violation(a_masks, pre_masks, a_full, pre_full):
    """Smallest family (bitmask over members) whose a-part has empty
    intersection while its pre-part does not; -1 if no family qualifies."""
    k = len(a_masks)
    size = 1 << k
    a_and = [a_full] * size
    p_and = [pre_full] * size
    for fam in range(1, size):
        low = fam & -fam
        j = low.bit_length() - 1
        rest = fam ^ low
        a_and[fam] = a_and[rest] & a_masks[j]
        p_and[fam] = p_and[rest] & pre_masks[j]
        if not a_and[fam] and p_and[fam]:
            return fam
    return -1
