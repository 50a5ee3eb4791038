# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free as cfree

ctypedef unsigned long long mask_t

DEF MAXN = 64


cdef inline int _load(object seq, mask_t* out) except -1:
    cdef int n = len(seq)
    cdef int i
    if n > MAXN:
        raise ValueError("at most 64 points are supported")
    for i in range(n):
        out[i] = <mask_t>seq[i]
    return n


cdef inline int _lowbit(mask_t a) nogil:
    return __builtin_ctzll(a)


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline mask_t _hits(mask_t* table, int n, mask_t m) nogil:
    cdef mask_t out = 0
    cdef int x
    for x in range(n):
        if table[x] & m:
            out |= (<mask_t>1) << x
    return out


cdef inline mask_t _spread(mask_t* table, mask_t a) nogil:
    cdef mask_t out = 0
    while a:
        out |= table[_lowbit(a)]
        a &= a - 1
    return out


cdef inline mask_t _image(int* f, mask_t a) nogil:
    cdef mask_t out = 0
    while a:
        out |= (<mask_t>1) << f[_lowbit(a)]
        a &= a - 1
    return out


cdef inline int _maps_into(mask_t* src, mask_t* target, int* f, mask_t domain) nogil:
    cdef mask_t a = domain
    cdef int x
    while a:
        x = _lowbit(a)
        if _image(f, src[x] & domain) & ~target[f[x]]:
            return x
        a &= a - 1
    return -1


def hits(table, m):
    cdef mask_t t[MAXN]
    cdef int n = _load(table, t)
    return _hits(t, n, <mask_t>m)


def spread(table, a):
    cdef mask_t t[MAXN]
    _load(table, t)
    return _spread(t, <mask_t>a)


def hull_chain(nbhd, a, int depth):
    cdef mask_t t[MAXN]
    cdef int n = _load(nbhd, t)
    cdef mask_t u = _spread(t, <mask_t>a)
    cdef int k
    chain = [u]
    for k in range(depth - 1):
        u = _spread(t, _hits(t, n, u))
        chain.append(u)
    return chain


def closed_hull_tables(nbhd, int depth):
    cdef mask_t t[MAXN]
    cdef mask_t cur[MAXN]
    cdef int n = _load(nbhd, t)
    cdef int x, k
    for x in range(n):
        cur[x] = _hits(t, n, t[x])
    tables = [[cur[x] for x in range(n)]]
    for k in range(depth - 1):
        for x in range(n):
            cur[x] = _hits(t, n, _spread(t, cur[x]))
        tables.append([cur[x] for x in range(n)])
    return tables


def shrink(nbhd, closed_nbhd, v):
    cdef mask_t t[MAXN]
    cdef mask_t c[MAXN]
    cdef int n = _load(nbhd, t)
    _load(closed_nbhd, c)
    cdef mask_t outside = ~(<mask_t>v)
    cdef mask_t out = 0
    cdef int x
    for x in range(n):
        if not (c[x] & outside):
            out |= t[x]
    return out


def image(fmap, a):
    cdef int f[MAXN]
    cdef int i
    for i in range(len(fmap)):
        f[i] = fmap[i]
    return _image(f, <mask_t>a)


def maps_into(src_nbhd, target, fmap, domain):
    cdef mask_t s[MAXN]
    cdef mask_t tg[MAXN]
    cdef int f[MAXN]
    cdef int n = _load(src_nbhd, s)
    cdef int i
    _load(target, tg)
    for i in range(n):
        f[i] = fmap[i]
    return _maps_into(s, tg, f, <mask_t>domain)


def extensions(src_nbhd, target, fmap, free, int ny, long long limit):
    cdef mask_t s[MAXN]
    cdef mask_t tg[MAXN]
    cdef int f[MAXN]
    cdef int fr[MAXN]
    cdef int n = _load(src_nbhd, s)
    cdef int k = len(free)
    cdef int i, j
    cdef mask_t full = ((<mask_t>1) << n) - 1 if n < 64 else ~(<mask_t>0)
    _load(target, tg)
    for i in range(n):
        f[i] = fmap[i]
    for j in range(k):
        fr[j] = free[j]
        f[fr[j]] = 0
    found = []
    while True:
        if _maps_into(s, tg, f, full) < 0:
            found.append(tuple([f[i] for i in range(n)]))
            if 0 <= limit <= len(found):
                return found
        j = 0
        while j < k:
            f[fr[j]] += 1
            if f[fr[j]] < ny:
                break
            f[fr[j]] = 0
            j += 1
        if j == k:
            return found


def family_violation(a_masks, pre_masks, a_full, pre_full):
    cdef int k = len(a_masks)
    if k > 24:
        raise ValueError("family enumeration is limited to 24 members")
    cdef long size = 1 << k
    cdef mask_t* a_and = <mask_t*>malloc(size * sizeof(mask_t))
    cdef mask_t* p_and = <mask_t*>malloc(size * sizeof(mask_t))
    cdef mask_t am[24]
    cdef mask_t pm[24]
    cdef long fam, low
    cdef int j
    cdef long result = -1
    if a_and == NULL or p_and == NULL:
        cfree(a_and)
        cfree(p_and)
        raise MemoryError()
    for j in range(k):
        am[j] = a_masks[j]
        pm[j] = pre_masks[j]
    a_and[0] = <mask_t>a_full
    p_and[0] = <mask_t>pre_full
    with nogil:
        for fam in range(1, size):
            low = fam & -fam
            j = __builtin_ctzll(<mask_t>low)
            a_and[fam] = a_and[fam ^ low] & am[j]
            p_and[fam] = p_and[fam ^ low] & pm[j]
            if a_and[fam] == 0 and p_and[fam] != 0:
                result = fam
                break
    cfree(a_and)
    cfree(p_and)
    return result
