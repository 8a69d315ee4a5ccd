"""Key pairs: a private scalar d in [1, n-1] and its public point Q = d*G.

Keys come from a seeded, non-cryptographic generator so that experiments are
reproducible. Never use them to protect anything.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass

from . import counting
from .curve import INFINITY, Point, _scalar_mul, format_point, parse_point
from .errors import FormatError, KeyOutOfRange
from .params import DomainParams, _parse_int
from .seeding import make_rng

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class KeyPair:
    d: int | None
    Q: Point

    def to_dict(self, public_only: bool = False) -> dict:
        data = {} if public_only or self.d is None else {"d": str(self.d)}
        data["q"] = format_point(self.Q)
        return data

    def to_json(self, public_only: bool = False) -> str:
        return json.dumps(self.to_dict(public_only), separators=(",", ":"))

    @classmethod
    def from_dict(cls, params: DomainParams, data: dict) -> KeyPair:
        if not isinstance(data, dict) or "q" not in data:
            raise FormatError("key file needs a 'q' field")
        d = _parse_int(data["d"], "d") if "d" in data else None
        return cls(d, parse_point(params.curve, data["q"]))

    @classmethod
    def from_json(cls, params: DomainParams, text: str) -> KeyPair:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(params, data)


def sample_private(n: int, seed: int) -> int:
    """Uniform d in [1, n-1] by rejection over ceil(log2 n)-bit draws."""
    rng = make_rng(seed)
    width = (n - 1).bit_length()
    while True:
        d = rng.getrandbits(width)
        if 1 <= d <= n - 1:
            return d


def derive_public(params: DomainParams, d: int) -> Point:
    if not 1 <= d <= params.n - 1:
        raise KeyOutOfRange(f"private key {d} outside [1, {params.n - 1}]")
    with counting.count_ops() as ops:
        Q = _scalar_mul(params.curve, d, params.G)
    log.debug("derive_public: d=%d took %d group operations", d, ops.point_adds)
    return Q


def keygen(params: DomainParams, seed: int) -> KeyPair:
    d = sample_private(params.n, seed)
    Q = derive_public(params, d)
    assert Q is not INFINITY
    return KeyPair(d, Q)
