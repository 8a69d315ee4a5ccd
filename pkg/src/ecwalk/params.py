"""Domain parameters (p, a, b, G, n, h) for desk-scale curves.

Point counts come from exhaustive enumeration, so every routine here that
needs #E(F_p) refuses moduli above ``ENUMERATION_CAP``.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import _kernels, counting
from .curve import (
    INFINITY,
    AffinePoint,
    CurveParams,
    Point,
    _scalar_mul,
    format_point,
    is_on_curve,
    iter_affine_points,
    parse_point,
    validate_curve,
)
from .errors import (
    CapExceeded,
    CofactorMismatch,
    CompositeOrder,
    FormatError,
    HasseViolation,
    NoPrimeOrderSubgroup,
    NotOnCurve,
    OffCurveGenerator,
    ParamsViolation,
    SingularCurve,
    WrongOrder,
)
from .field import is_prime, prime_factors
from .seeding import make_rng

log = logging.getLogger(__name__)

ENUMERATION_CAP = 10**7


@dataclass(frozen=True)
class DomainParams:
    curve: CurveParams
    G: Point
    n: int
    h: int

    @property
    def p(self) -> int:
        return self.curve.p.p

    @property
    def a(self) -> int:
        return self.curve.a.value

    @property
    def b(self) -> int:
        return self.curve.b.value

    @property
    def bits(self) -> int:
        """Bit length of the key space, ceil(log2 n)."""
        return (self.n - 1).bit_length()

    def __repr__(self) -> str:
        return f"DomainParams(p={self.p}, a={self.a}, b={self.b}, G={self.G!r}, n={self.n}, h={self.h})"

    def to_dict(self) -> dict:
        return {
            "p": str(self.p),
            "a": str(self.a),
            "b": str(self.b),
            "g": format_point(self.G),
            "n": str(self.n),
            "h": str(self.h),
        }

    @classmethod
    def from_dict(cls, data: dict) -> DomainParams:
        """Parse the file form; the base point must lie on the curve."""
        try:
            p, a, b, n, h = (_parse_int(data[key], key) for key in ("p", "a", "b", "n", "h"))
            g = data["g"]
        except KeyError as exc:
            raise FormatError(f"domain parameters missing field {exc.args[0]!r}") from exc
        except TypeError as exc:
            raise FormatError("domain parameters must be an object") from exc
        curve = CurveParams.of(p, a, b)
        try:
            G = parse_point(curve, g)
        except NotOnCurve as exc:
            raise OffCurveGenerator(f"base point {g!r} is not on {curve!r}") from exc
        return cls(curve, G, n, h)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> DomainParams:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)


def _parse_int(value, name: str) -> int:
    if isinstance(value, bool):
        raise FormatError(f"field {name!r} must be a decimal integer")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and value.strip().lstrip("-").isdigit():
        return int(value.strip(), 10)
    raise FormatError(f"field {name!r} must be a decimal integer, got {value!r}")


def in_hasse_interval(count: int, p: int) -> bool:
    # |N - (p + 1)| <= 2 sqrt(p), squared to stay in integers
    return (count - p - 1) ** 2 <= 4 * p


def count_points(c: CurveParams, cap: int = ENUMERATION_CAP) -> int:
    """#E(F_p), counting INFINITY, by enumeration over x."""
    if c.p.p > cap:
        raise CapExceeded(f"p = {c.p.p} is above the enumeration cap {cap}")
    return _kernels.count_points(c.p.p, c.a.value, c.b.value)


def point_order(c: CurveParams, P: Point, cap: int | None = None) -> int:
    """Smallest m >= 1 with m*P = INFINITY, found by repeated addition.

    ``cap`` bounds the order searched for and defaults to #E(F_p).
    """
    if not is_on_curve(c, P):
        raise NotOnCurve(f"{P!r} is not on {c!r}")
    if P is INFINITY:
        return 1
    if cap is None:
        cap = count_points(c)
    x, y = P.coords()
    adds = _kernels.walk(c.p.p, c.a.value, x, y, None, cap - 1)
    if adds < 0:
        counting.record(max(cap - 1, 0))
        raise CapExceeded(f"order of {P!r} exceeds {cap}")
    counting.record(adds)
    return adds + 1


def build_domain_params(c: CurveParams, seed: int = 0, cap: int = ENUMERATION_CAP) -> DomainParams:
    """Deterministic domain parameters for the curve ``c``.

    The subgroup order n is the largest prime factor of #E(F_p) and G is
    h*P for the first point P (ascending x, then smaller y) that the
    cofactor does not send to INFINITY. The construction uses no
    randomness, so ``seed`` does not affect the result.
    """
    validate_curve(c)
    N = count_points(c, cap)
    n = prime_factors(N)[-1] if N > 1 else 1
    if n < 3:
        raise NoPrimeOrderSubgroup(f"#E = {N} has no prime factor >= 3 on {c!r}")
    h = N // n
    for P in iter_affine_points(c):
        G = _scalar_mul(c, h, P)
        if G is not INFINITY:
            break
    else:  # pragma: no cover - a prime factor of N always has points of that order
        raise NoPrimeOrderSubgroup(f"no point of order {n} found on {c!r}")
    return DomainParams(c, G, n, h)


def check_params(d: DomainParams, cap: int = ENUMERATION_CAP) -> list[ParamsViolation]:
    """Every violated invariant of ``d``, in a fixed order."""
    c = validate_curve(d.curve)
    found: list[ParamsViolation] = []
    g_ok = d.G is not INFINITY and is_on_curve(c, d.G)
    if not g_ok:
        what = "is the identity" if d.G is INFINITY else "is not on the curve"
        found.append(OffCurveGenerator(f"base point {d.G!r} {what}"))
    if not is_prime(d.n):
        found.append(CompositeOrder(f"n = {d.n} is not prime"))
    if g_ok and (d.n < 1 or _scalar_mul(c, d.n, d.G) is not INFINITY):
        found.append(WrongOrder(f"n*G != INFINITY for n = {d.n}"))
    N = count_points(c, cap)
    if d.n * d.h != N:
        found.append(CofactorMismatch(f"n*h = {d.n * d.h} but #E = {N}"))
    if not in_hasse_interval(N, c.p.p):
        found.append(HasseViolation(f"#E = {N} lies outside the Hasse interval for p = {c.p.p}"))
    return found


def validate_params(d: DomainParams, cap: int = ENUMERATION_CAP) -> DomainParams:
    """Return ``d`` if all invariants hold; otherwise raise the first violation.

    The raised exception's ``violations`` attribute lists all of them.
    """
    found = check_params(d, cap)
    if found:
        first = found[0]
        first.violations = found
        raise first
    return d


def random_point(c: CurveParams, seed: int) -> AffinePoint:
    rng = make_rng(seed)
    p = c.p.p
    while True:
        x = c.p(rng.randrange(p))
        y = c.rhs(x).sqrt()
        if y is not None:
            return AffinePoint(x, y)


def _coefficient_pairs(p: int):
    # anti-diagonals a + b = s: no single degenerate family (a = 0 or b = 0)
    # can stall the scan for long
    for s in range(2 * p - 1):
        for a in range(max(0, s - p + 1), min(s, p - 1) + 1):
            yield a, s - a


def _search_one(p: int, want_prime_order: bool, cap: int) -> DomainParams | None:
    for a, b in _coefficient_pairs(p):
        c = CurveParams.of(p, a, b)
        try:
            validate_curve(c)
        except SingularCurve:
            continue
        N = count_points(c, cap)
        if not in_hasse_interval(N, p):
            raise HasseViolation(f"#E = {N} outside the Hasse interval for {c!r}")
        if want_prime_order and not is_prime(N):
            continue
        try:
            return build_domain_params(c, cap=cap)
        except NoPrimeOrderSubgroup:
            continue
    return None


def curve_search(
    p_min: int,
    p_max: int,
    want_prime_order: bool = True,
    cap: int = ENUMERATION_CAP,
    workers: int = 1,
) -> list[DomainParams]:
    """The first qualifying curve for each prime p in ``[p_min, p_max]``.

    Results are in ascending p whatever ``workers`` is.
    """
    if p_max > cap:
        raise CapExceeded(f"p_max = {p_max} is above the enumeration cap {cap}")
    primes = [p for p in range(max(p_min, 5), p_max + 1) if is_prime(p)]

    def search(p):
        return _search_one(p, want_prime_order, cap)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            found = list(pool.map(search, primes))
    else:
        found = [search(p) for p in primes]
    result = [d for d in found if d is not None]
    log.debug("curve_search [%d, %d]: %d primes, %d curves", p_min, p_max, len(primes), len(result))
    return result
