"""Discrete-log solvers with exact group-operation accounting.

``linear_walk`` is the brute-force recovery: start from G and keep adding G,
counting, until the accumulator equals Q. Recovering d costs exactly d-1
additions. ``bsgs`` is baby-step giant-step, used as an independent oracle
and as the square-root baseline.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from math import isqrt

from . import _kernels, counting
from .counting import OpCounter, count_ops  # noqa: F401  (re-exported)
from .curve import INFINITY, Point, _add, _neg, _scalar_mul, is_on_curve
from .errors import CapExceeded, IdentityTarget, NotInSubgroup, NotOnCurve
from .params import DomainParams

DEFAULT_WALK_CAP = 10**8
DEFAULT_TABLE_CAP = 10**7

METHODS = ("linear_walk", "bsgs")


@dataclass(frozen=True)
class AttackResult:
    d_recovered: int
    method: str
    group_ops: int
    iterations: int
    wall_time: float

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "d": str(self.d_recovered),
            "group_ops": self.group_ops,
            "iterations": self.iterations,
            "seconds": self.wall_time,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _check_target(params: DomainParams, Q: Point) -> None:
    if not is_on_curve(params.curve, Q):
        raise NotOnCurve(f"{Q!r} is not on {params.curve!r}")
    if Q is INFINITY:
        raise IdentityTarget("Q is the identity; no d in [1, n-1] maps to it")


def linear_walk(params: DomainParams, Q: Point, cap: int | None = DEFAULT_WALK_CAP) -> AttackResult:
    """Recover d from Q = d*G by accumulating G and counting the steps.

    The accumulator starts at G with k = 1, so d costs exactly d-1
    additions; at most n-1 additions are made before giving up with
    :class:`NotInSubgroup`. ``cap`` (None for no cap) bounds the additions
    independently of n.
    """
    _check_target(params, Q)
    limit = params.n - 1
    capped = cap is not None and cap < limit
    max_adds = cap if capped else limit
    gx, gy = params.G.coords()
    start = time.perf_counter()
    adds = _kernels.walk(params.p, params.a, gx, gy, Q.coords(), max_adds)
    elapsed = time.perf_counter() - start
    if adds < 0:
        counting.record(max_adds)
        if capped:
            raise CapExceeded(f"linear walk hit the cap of {cap} additions")
        raise NotInSubgroup(f"Q not reached after {limit} additions; Q is not in <G>", group_ops=limit)
    counting.record(adds)
    return AttackResult(adds + 1, "linear_walk", adds, adds + 1, elapsed)


def _key(P: Point):
    return None if P is INFINITY else P.coords()


def bsgs(params: DomainParams, Q: Point, table_cap: int = DEFAULT_TABLE_CAP) -> AttackResult:
    """Baby-step giant-step with m = ceil(sqrt(n)); at most 2m - 1 group operations."""
    _check_target(params, Q)
    c, G, n = params.curve, params.G, params.n
    m = isqrt(n - 1) + 1
    if m > table_cap:
        raise CapExceeded(f"baby-step table of {m} entries exceeds the cap {table_cap}")
    start = time.perf_counter()
    with count_ops() as ops:
        table = {None: 0, G.coords(): 1}
        P = G
        for j in range(2, m):
            P = _add(c, P, G)
            table.setdefault(_key(P), j)
        stride = _neg(_add(c, P, G))
        R = Q
        for i in range(m + 1):
            j = table.get(_key(R))
            if j is not None:
                d = (i * m + j) % n
                return AttackResult(d, "bsgs", ops.point_adds, i + 1, time.perf_counter() - start)
            if i < m:
                R = _add(c, R, stride)
    raise NotInSubgroup(f"no collision after {m + 1} giant steps; Q is not in <G>", group_ops=ops.point_adds)


def solve(params: DomainParams, Q: Point, method: str, cap: int | None = DEFAULT_WALK_CAP) -> AttackResult:
    if method == "linear_walk":
        return linear_walk(params, Q, cap)
    if method == "bsgs":
        return bsgs(params, Q)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def verify_solution(params: DomainParams, Q: Point, d: int) -> bool:
    if not 1 <= d <= params.n - 1:
        return False
    if not is_on_curve(params.curve, Q):
        return False
    return _scalar_mul(params.curve, d, params.G) == Q
