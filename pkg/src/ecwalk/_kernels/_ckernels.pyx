# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; same functions and results as ``_pykernels``.

Coordinates are held in signed 64-bit words, so the modulus must stay below
``MAX_MODULUS`` (products of two residues then fit without overflow).
"""

from libc.stdlib cimport malloc, free

NAME = "cython"
MAX_MODULUS = 2**31

ctypedef long long i64


cdef inline i64 _inv(i64 a, i64 p) noexcept nogil:
    # extended Euclid; a is a nonzero residue
    cdef i64 r0 = p, r1 = a, t0 = 0, t1 = 1, q, tmp
    while r1 != 0:
        q = r0 // r1
        tmp = r0 - q * r1
        r0 = r1
        r1 = tmp
        tmp = t0 - q * t1
        t0 = t1
        t1 = tmp
    if t0 < 0:
        t0 += p
    return t0


cdef inline bint _add(i64 p, i64 a, i64* x, i64* y, bint* inf,
                      i64 gx, i64 gy) noexcept nogil:
    # acc <- acc + G in place; G is affine
    cdef i64 lam, x3, num, den
    if inf[0]:
        x[0] = gx
        y[0] = gy
        inf[0] = False
        return True
    if x[0] == gx:
        if y[0] != gy or y[0] == 0:
            inf[0] = True
            return True
        num = (3 * (x[0] * x[0] % p) + a) % p
        den = (2 * y[0]) % p
    else:
        num = (gy - y[0]) % p
        if num < 0:
            num += p
        den = (gx - x[0]) % p
        if den < 0:
            den += p
    lam = num * _inv(den, p) % p
    x3 = (lam * lam - x[0] - gx) % p
    if x3 < 0:
        x3 += p
    num = (x[0] - x3) % p
    if num < 0:
        num += p
    y[0] = (lam * num - y[0]) % p
    if y[0] < 0:
        y[0] += p
    x[0] = x3
    return True


def _check(p):
    if not 3 < p < MAX_MODULUS:
        raise OverflowError(f"modulus {p} outside the compiled kernel range")


def walk(p, a, gx, gy, target, max_adds):
    _check(p)
    cdef i64 cp = p, ca = a % p, cgx = gx, cgy = gy
    cdef i64 tx = 0, ty = 0, limit = max_adds
    cdef bint tinf = target is None
    if not tinf:
        tx, ty = target
    cdef i64 x = cgx, y = cgy, adds = 0
    cdef bint inf = False
    with nogil:
        while True:
            if inf == tinf and (inf or (x == tx and y == ty)):
                break
            if adds >= limit:
                adds = -1
                break
            _add(cp, ca, &x, &y, &inf, cgx, cgy)
            adds += 1
    return adds


def count_points(p, a, b):
    _check(p)
    cdef i64 cp = p, ca = a % p, cb = b % p, x, y, rhs, total = 1
    cdef unsigned char* is_square = <unsigned char*>malloc(cp)
    if is_square == NULL:
        raise MemoryError()
    try:
        with nogil:
            for x in range(cp):
                is_square[x] = 0
            for y in range(cp):
                is_square[y * y % cp] = 1
            for x in range(cp):
                rhs = ((x * x % cp + ca) * x + cb) % cp
                if rhs == 0:
                    total += 1
                elif is_square[rhs]:
                    total += 2
    finally:
        free(is_square)
    return total
