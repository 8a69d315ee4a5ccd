"""Pure-Python hot loops over raw integer coordinates.

Reference implementation for the compiled kernels; the two modules expose
identical functions with identical results. The identity is ``None``.
"""

NAME = "python"


def _add(p, a, P, Q):
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y1 != y2 or y1 == 0:
            return None
        lam = (3 * x1 * x1 + a) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return x3, (lam * (x1 - x3) - y1) % p


def walk(p, a, gx, gy, target, max_adds):
    """Add ``(gx, gy)`` to an accumulator starting at itself until it equals
    ``target`` (``None`` for the identity).

    Returns the number of additions performed, or -1 once ``max_adds``
    additions have failed to reach the target.
    """
    G = (gx, gy)
    acc = G
    adds = 0
    while True:
        if acc == target:
            return adds
        if adds >= max_adds:
            return -1
        acc = _add(p, a, acc, G)
        adds += 1


def count_points(p, a, b):
    """#E(F_p) by enumerating x against a table of squares."""
    is_square = bytearray(p)
    for y in range(p):
        is_square[y * y % p] = 1
    total = 1
    for x in range(p):
        rhs = ((x * x + a) * x + b) % p
        if rhs == 0:
            total += 1
        elif is_square[rhs]:
            total += 2
    return total
