"""Attack-cost measurement, scaling fits and report emission.

Operation counts are the ground truth; wall time is recorded for
information only and never feeds a fit.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import counting, dlp
from .errors import ConfigError, FormatError, InsufficientData, WorkbenchError
from .field import is_prime
from .keys import derive_public, sample_private
from .params import ENUMERATION_CAP, DomainParams, _search_one, curve_search, validate_params
from .seeding import derive_seed

log = logging.getLogger(__name__)

CSV_COLUMNS = ("curve_id", "p", "n", "bits", "d", "method", "group_ops", "keygen_ops", "seconds")


@dataclass
class BenchConfig:
    curve_suite: dict[str, DomainParams]
    trials_per_curve: int = 20
    seed: int = 0
    methods: tuple[str, ...] = dlp.METHODS
    op_cap: int = dlp.DEFAULT_WALK_CAP
    exhaustive: bool = False
    workers: int = 1

    def validate(self) -> BenchConfig:
        if self.trials_per_curve < 1:
            raise ConfigError("trials_per_curve must be >= 1")
        if not self.methods:
            raise ConfigError("methods must not be empty")
        unknown = set(self.methods) - set(dlp.METHODS)
        if unknown:
            raise ConfigError(f"unknown methods {sorted(unknown)}")
        if len(set(self.methods)) != len(self.methods):
            raise ConfigError("methods must not repeat")
        if not self.curve_suite:
            raise ConfigError("curve suite is empty")
        for curve_id, params in self.curve_suite.items():
            validate_params(params)
            if "linear_walk" in self.methods and params.n > self.op_cap:
                raise ConfigError(f"curve {curve_id}: n = {params.n} exceeds op_cap {self.op_cap}")
        return self

    @classmethod
    def from_dict(cls, data: dict) -> BenchConfig:
        """Build from the config file form.

        The suite is given by exactly one of ``curves`` (domain-parameter
        objects with an optional ``id``), ``search`` (``p_min``, ``p_max``,
        optional ``prime_order``) or ``bit_classes`` (``min_bits``,
        ``max_bits``, optional ``fraction``).
        """
        if not isinstance(data, dict):
            raise ConfigError("bench config must be an object")
        sources = [key for key in ("curves", "search", "bit_classes") if key in data]
        if len(sources) != 1:
            raise ConfigError("config needs exactly one of 'curves', 'search', 'bit_classes'")
        if "curves" in data:
            suite = {}
            for entry in data["curves"]:
                params = DomainParams.from_dict(entry)
                suite[_unique_id(suite, entry.get("id") or default_curve_id(params))] = params
        elif "search" in data:
            s = data["search"]
            found = curve_search(int(s["p_min"]), int(s["p_max"]), bool(s.get("prime_order", True)),
                                 workers=int(data.get("workers", 1)))
            suite = make_suite(found)
        else:
            s = data["bit_classes"]
            suite = make_suite(bit_class_suite(int(s["min_bits"]), int(s["max_bits"]),
                                               float(s.get("fraction", 0.6))))
        try:
            return cls(
                curve_suite=suite,
                trials_per_curve=int(data.get("trials_per_curve", 20)),
                seed=int(data.get("seed", 0)),
                methods=tuple(data.get("methods", dlp.METHODS)),
                op_cap=int(data.get("op_cap", dlp.DEFAULT_WALK_CAP)),
                exhaustive=bool(data.get("exhaustive", False)),
                workers=int(data.get("workers", 1)),
            )
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad config value: {exc}") from exc


def default_curve_id(params: DomainParams) -> str:
    return f"e{params.p}"


def _unique_id(suite: dict, curve_id: str) -> str:
    if curve_id not in suite:
        return curve_id
    i = 2
    while f"{curve_id}-{i}" in suite:
        i += 1
    return f"{curve_id}-{i}"


def make_suite(curves) -> dict[str, DomainParams]:
    suite: dict[str, DomainParams] = {}
    for params in curves:
        suite[_unique_id(suite, default_curve_id(params))] = params
    return suite


def bit_class_suite(min_bits: int, max_bits: int, fraction: float = 0.6) -> list[DomainParams]:
    """One prime-order curve per key bit length, with n near ``fraction * 2**bits``.

    Keeping n at the same relative position in every class makes the mean
    walk cost double from one class to the next.
    """
    if not 0.5 < fraction < 1:
        raise ConfigError("fraction must lie in (0.5, 1)")
    suite = []
    for bits in range(min_bits, max_bits + 1):
        p = math.ceil(fraction * 2**bits)
        while True:
            if p > ENUMERATION_CAP or p > 2**bits:
                raise ConfigError(f"no prime-order curve found for {bits} bits")
            if is_prime(p):
                params = _search_one(p, True, ENUMERATION_CAP)
                if params is not None and params.bits == bits:
                    suite.append(params)
                    break
            p += 1
    return suite


@dataclass
class BenchRecord:
    curve_id: str
    p: int
    n: int
    bits: int
    d: int
    method: str
    group_ops: int
    keygen_ops: int
    seconds: float
    status: str = "ok"

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def csv_row(self) -> list[str]:
        return [self.curve_id, str(self.p), str(self.n), str(self.bits), str(self.d), self.method,
                str(self.group_ops), str(self.keygen_ops), f"{self.seconds:.9f}"]


def _run_trial(config: BenchConfig, curve_id: str, params: DomainParams, t: int) -> list[BenchRecord]:
    if config.exhaustive:
        d = t + 1
    else:
        d = sample_private(params.n, derive_seed(config.seed, curve_id, t))
    with counting.count_ops() as keygen:
        Q = derive_public(params, d)
    records = []
    for method in config.methods:
        base = dict(curve_id=curve_id, p=params.p, n=params.n, bits=params.bits, d=d,
                    method=method, keygen_ops=keygen.point_adds)
        try:
            result = dlp.solve(params, Q, method, cap=config.op_cap)
        except WorkbenchError as exc:
            records.append(BenchRecord(**base, group_ops=getattr(exc, "group_ops", 0),
                                       seconds=0.0, status=type(exc).__name__))
            continue
        status = "ok" if result.d_recovered == d else "WrongKey"
        records.append(BenchRecord(**base, group_ops=result.group_ops, seconds=result.wall_time,
                                   status=status))
    return records


def run_suite(config: BenchConfig) -> list[BenchRecord]:
    """Run every (curve, trial, method) and return records in that order."""
    config.validate()
    tasks = []
    for curve_id, params in config.curve_suite.items():
        trials = params.n - 1 if config.exhaustive else config.trials_per_curve
        tasks.extend((curve_id, params, t) for t in range(trials))

    def run(task):
        return _run_trial(config, *task)

    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            chunks = list(pool.map(run, tasks))
    else:
        chunks = [run(task) for task in tasks]
    records = [r for chunk in chunks for r in chunk]
    failed = sum(not r.ok for r in records)
    if failed:
        log.warning("%d of %d trials failed", failed, len(records))
    return records


@dataclass
class LinearFit:
    slope: float
    intercept: float
    residual: float
    exact: bool
    points: int


@dataclass
class BitClass:
    count: int
    mean_n: float
    mean_group_ops: float
    max_keygen_ops: int


@dataclass
class ScalingReport:
    fits: dict[str, LinearFit | None]
    per_bit: dict[str, dict[int, BitClass]]
    ratios: dict[str, dict[int, float]]
    bsgs_within_bound: bool | None
    keygen_within_bound: bool
    failed_trials: int = 0
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "fits": {m: (asdict(f) if f else None) for m, f in self.fits.items()},
            "per_bit": {m: {str(b): asdict(c) for b, c in table.items()} for m, table in self.per_bit.items()},
            "ratios": {m: {str(b): r for b, r in table.items()} for m, table in self.ratios.items()},
            "bsgs_within_bound": self.bsgs_within_bound,
            "keygen_within_bound": self.keygen_within_bound,
            "failed_trials": self.failed_trials,
            "notes": self.notes,
        }


def least_squares(xs, ys) -> LinearFit:
    """Ordinary least squares in exact rational arithmetic."""
    xs = [Fraction(x) for x in xs]
    ys = [Fraction(y) for y in ys]
    k = len(xs)
    sx, sy = sum(xs), sum(ys)
    sxx = sum(x * x for x in xs)
    sxy = sum(x * y for x, y in zip(xs, ys))
    denom = k * sxx - sx * sx
    if denom == 0:
        raise InsufficientData("need at least two distinct x values to fit")
    slope = (k * sxy - sx * sy) / denom
    intercept = (sy - slope * sx) / k
    residual = sum((y - slope * x - intercept) ** 2 for x, y in zip(xs, ys))
    return LinearFit(float(slope), float(intercept), float(residual), residual == 0, k)


def bsgs_bound(n: int) -> int:
    return 2 * (math.isqrt(n - 1) + 1) + 1


def fit_scaling(records: list[BenchRecord]) -> ScalingReport:
    """Fit walk cost against d and bsgs cost against sqrt(n); tabulate by key bits."""
    ok = [r for r in records if r.ok]
    if not ok:
        raise InsufficientData("no successful records")
    by_method: dict[str, list[BenchRecord]] = {}
    for r in ok:
        by_method.setdefault(r.method, []).append(r)

    fits: dict[str, LinearFit | None] = {}
    notes = []
    for method, rows in by_method.items():
        if method == "linear_walk":
            if len({r.d for r in rows}) < 2:
                raise InsufficientData("linear_walk needs at least two distinct d values")
            fits[method] = least_squares([r.d for r in rows], [r.group_ops for r in rows])
        elif method == "bsgs":
            if len({r.n for r in rows}) < 2:
                fits[method] = None
                notes.append("bsgs fit skipped: fewer than two distinct group orders")
            else:
                fits[method] = least_squares([math.sqrt(r.n) for r in rows], [r.group_ops for r in rows])

    per_bit: dict[str, dict[int, BitClass]] = {}
    ratios: dict[str, dict[int, float]] = {}
    for method, rows in by_method.items():
        groups: dict[int, list[BenchRecord]] = {}
        for r in rows:
            groups.setdefault(r.bits, []).append(r)
        table = {
            bits: BitClass(
                count=len(g),
                mean_n=sum(r.n for r in g) / len(g),
                mean_group_ops=sum(r.group_ops for r in g) / len(g),
                max_keygen_ops=max(r.keygen_ops for r in g),
            )
            for bits, g in sorted(groups.items())
        }
        per_bit[method] = table
        ratios[method] = {
            bits: table[bits].mean_group_ops / table[bits - 1].mean_group_ops
            for bits in table
            if bits - 1 in table and table[bits - 1].mean_group_ops > 0
        }

    bsgs_rows = by_method.get("bsgs")
    return ScalingReport(
        fits=fits,
        per_bit=per_bit,
        ratios=ratios,
        bsgs_within_bound=None if not bsgs_rows else all(r.group_ops <= bsgs_bound(r.n) for r in bsgs_rows),
        keygen_within_bound=all(r.keygen_ops <= 2 * r.bits for r in ok),
        failed_trials=len(records) - len(ok),
        notes=notes,
    )


def emit_report(records: list[BenchRecord], report: ScalingReport | None, format: str = "csv") -> str:
    """Render records as CSV (successful rows only) or as a JSON document.

    The JSON form lists every record with its status and carries the
    scaling report alongside.
    """
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in records:
            if r.ok:
                writer.writerow(r.csv_row())
        return buf.getvalue()
    if format in ("structured", "json"):
        doc = {
            "columns": list(CSV_COLUMNS) + ["status"],
            "records": [asdict(r) for r in records],
            "report": report.to_dict() if report is not None else None,
        }
        return json.dumps(doc, indent=2) + "\n"
    raise ValueError(f"unknown report format {format!r}")


def parse_csv(text: str) -> list[BenchRecord]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise InsufficientData("empty CSV") from None
    if tuple(header) != CSV_COLUMNS:
        raise FormatError(f"unexpected CSV header {header}")
    records = []
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        try:
            cid, p, n, bits, d, method, ops, kops, secs = row
            records.append(BenchRecord(cid, int(p), int(n), int(bits), int(d), method,
                                       int(ops), int(kops), float(secs)))
        except ValueError as exc:
            raise FormatError(f"CSV line {lineno}: {exc}") from exc
    return records
