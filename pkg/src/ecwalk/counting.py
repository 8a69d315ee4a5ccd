"""Group-operation instrumentation.

Every evaluation of the group law inside a ``count_ops()`` scope bumps the
scope's counter by one; doublings count the same as additions. Scopes nest
(an outer counter also sees the inner scope's work) and are tracked in a
context variable, so counters never leak across threads.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass

_active: ContextVar[tuple[OpCounter, ...]] = ContextVar("ecwalk_op_counters", default=())


@dataclass
class OpCounter:
    point_adds: int = 0
    point_doublings_included: bool = True


def record(n: int = 1) -> None:
    for counter in _active.get():
        counter.point_adds += n


@contextmanager
def count_ops():
    counter = OpCounter()
    token = _active.set(_active.get() + (counter,))
    try:
        yield counter
    finally:
        _active.reset(token)
