"""Short Weierstrass curves y^2 = x^3 + ax + b over F_p and their group law.

Points are either :data:`INFINITY` (the identity) or an :class:`AffinePoint`.
Public functions check that their point arguments lie on the curve; the
underscore helpers trust their inputs and are what the loops use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import counting
from .errors import FormatError, NotOnCurve, SingularCurve
from .field import FieldElement, PrimeModulus


class _Infinity:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


@dataclass(frozen=True)
class AffinePoint:
    x: FieldElement
    y: FieldElement

    def __repr__(self) -> str:
        return f"({self.x.value}, {self.y.value})"

    def coords(self) -> tuple[int, int]:
        return self.x.value, self.y.value


Point = Union[AffinePoint, _Infinity]


@dataclass(frozen=True)
class CurveParams:
    p: PrimeModulus
    a: FieldElement
    b: FieldElement

    @classmethod
    def of(cls, p: int, a: int, b: int) -> CurveParams:
        modulus = PrimeModulus(p)
        return cls(modulus, modulus(a), modulus(b))

    def __repr__(self) -> str:
        return f"CurveParams(p={self.p.p}, a={self.a.value}, b={self.b.value})"

    def point(self, x: int, y: int) -> AffinePoint:
        """Build an affine point from integers, rejecting off-curve input."""
        P = AffinePoint(self.p(x), self.p(y))
        if not is_on_curve(self, P):
            raise NotOnCurve(f"({x}, {y}) is not on {self!r}")
        return P

    def rhs(self, x: FieldElement) -> FieldElement:
        return x * x * x + self.a * x + self.b

    def discriminant_term(self) -> FieldElement:
        return 4 * self.a**3 + 27 * self.b**2


def validate_curve(c: CurveParams) -> CurveParams:
    if c.discriminant_term().value == 0:
        raise SingularCurve(f"{c!r} is singular (4a^3 + 27b^2 = 0 mod p)")
    return c


def is_on_curve(c: CurveParams, P: Point) -> bool:
    if P is INFINITY:
        return True
    if P.x.modulus.p != c.p.p or P.y.modulus.p != c.p.p:
        return False
    return P.y * P.y == c.rhs(P.x)


def _require_on_curve(c: CurveParams, *points: Point) -> None:
    for P in points:
        if not is_on_curve(c, P):
            raise NotOnCurve(f"{P!r} is not on {c!r}")


def _neg(P: Point) -> Point:
    if P is INFINITY:
        return P
    return AffinePoint(P.x, -P.y)


def _add(c: CurveParams, P: Point, Q: Point) -> Point:
    counting.record()
    if P is INFINITY:
        return Q
    if Q is INFINITY:
        return P
    if P.x == Q.x:
        if P.y != Q.y or P.y.value == 0:
            # inverse pair, or doubling a point of order 2
            return INFINITY
        lam = (3 * P.x * P.x + c.a) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    y3 = lam * (P.x - x3) - P.y
    return AffinePoint(x3, y3)


def point_neg(c: CurveParams, P: Point) -> Point:
    _require_on_curve(c, P)
    return _neg(P)


def point_add(c: CurveParams, P: Point, Q: Point) -> Point:
    """Chord-and-tangent sum of two curve points (doubling when ``P == Q``)."""
    _require_on_curve(c, P, Q)
    return _add(c, P, Q)


def _scalar_mul_naive(c: CurveParams, k: int, P: Point) -> Point:
    if k == 0 or P is INFINITY:
        return INFINITY
    acc = P
    for _ in range(k - 1):
        acc = _add(c, acc, P)
    return acc


def scalar_mul_naive(c: CurveParams, k: int, P: Point) -> Point:
    """``P`` added to itself ``k`` times, one group operation per step.

    Performs exactly ``k - 1`` additions for ``k >= 1`` and ``P != INFINITY``.
    """
    if k < 0:
        raise ValueError("scalar must be nonnegative")
    _require_on_curve(c, P)
    return _scalar_mul_naive(c, k, P)


def _scalar_mul(c: CurveParams, k: int, P: Point) -> Point:
    if k == 0 or P is INFINITY:
        return INFINITY
    acc = P
    # left-to-right: at most 2 * (bit_length - 1) group operations
    for bit in bin(k)[3:]:
        acc = _add(c, acc, acc)
        if bit == "1":
            acc = _add(c, acc, P)
    return acc


def scalar_mul(c: CurveParams, k: int, P: Point) -> Point:
    """Double-and-add scalar multiplication; no reduction of ``k`` is applied."""
    if k < 0:
        raise ValueError("scalar must be nonnegative")
    _require_on_curve(c, P)
    return _scalar_mul(c, k, P)


def iter_affine_points(c: CurveParams):
    """Affine points by ascending x, the smaller y first."""
    for x in range(c.p.p):
        fx = c.p(x)
        y = c.rhs(fx).sqrt()
        if y is None:
            continue
        yield AffinePoint(fx, y)
        if y.value != 0:
            yield AffinePoint(fx, -y)


def enumerate_points(c: CurveParams) -> list[Point]:
    return [INFINITY, *iter_affine_points(c)]


def format_point(P: Point):
    """Text form used in files: ``"infinity"`` or ``["x", "y"]``."""
    if P is INFINITY:
        return "infinity"
    return [str(P.x.value), str(P.y.value)]


def parse_point(c: CurveParams, data) -> Point:
    """Inverse of :func:`format_point`; also accepts the CLI form ``"x,y"``."""
    if isinstance(data, str):
        text = data.strip()
        if text.lower() == "infinity":
            return INFINITY
        data = [part.strip() for part in text.strip("()[]").split(",")]
    if not isinstance(data, (list, tuple)) or len(data) != 2:
        raise FormatError(f"malformed point {data!r}")
    try:
        x, y = (int(str(v), 10) for v in data)
    except ValueError as exc:
        raise FormatError(f"malformed point {data!r}") from exc
    if not (0 <= x < c.p.p and 0 <= y < c.p.p):
        raise FormatError(f"point coordinates {data!r} are not canonical residues mod {c.p.p}")
    return c.point(x, y)
