"""Verification report entries and their aggregation over momentum samples."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field

import numpy as np

PASS, FAIL, INFO = "pass", "fail", "info"
UPPER, LOWER = "upper", "lower"


@dataclass
class CheckResult:
    """One named check.

    ``bound == "upper"``: passes when ``max_residual <= tolerance``.
    ``bound == "lower"``: the check asserts a quantity stays *above*
    ``tolerance``; ``max_residual`` then holds the smallest value seen.
    """

    name: str
    anchor: str
    max_residual: float
    tolerance: float
    samples: int = 1
    worst_momentum: list = field(default_factory=lambda: [0.0, 0.0, 0.0])
    status: str = PASS
    bound: str = UPPER

    @property
    def passed(self) -> bool:
        return self.status != FAIL


def _status(value, tol, bound, info):
    if info:
        return INFO
    if not np.isfinite(value):
        return FAIL
    ok = value <= tol if bound == UPPER else value > tol
    return PASS if ok else FAIL


def check(name, anchor, value, tol, *, momentum=(0.0, 0.0, 0.0), bound=UPPER, info=False) -> CheckResult:
    value = float(value)
    return CheckResult(
        name, anchor, value, float(tol), 1, [float(x) for x in momentum], _status(value, tol, bound, info), bound
    )


def aggregate(name, anchor, tol, samples, fn, *, bound=UPPER, info=False) -> CheckResult:
    """Evaluate ``fn(ctx)`` over ``samples`` and keep the worst value with its momentum."""
    worst, worst_p, n = None, [0.0, 0.0, 0.0], 0
    for ctx in samples:
        v = float(fn(ctx))
        n += 1
        if worst is None or (v > worst if bound == UPPER else v < worst) or not np.isfinite(v):
            worst, worst_p = v, [float(x) for x in ctx.p]
            if not np.isfinite(v):
                break
    if worst is None:
        raise ValueError(f"check {name!r} received no samples")
    return CheckResult(name, anchor, worst, float(tol), n, worst_p, _status(worst, tol, bound, info), bound)


def combine(name, anchor, results) -> CheckResult:
    """Merge per-sample results of the same check (same bound and tolerance)."""
    results = list(results)
    first = results[0]
    pick = max if first.bound == UPPER else min
    worst = pick(results, key=lambda r: r.max_residual)
    info = first.status == INFO
    return CheckResult(
        name,
        anchor,
        worst.max_residual,
        first.tolerance,
        sum(r.samples for r in results),
        worst.worst_momentum,
        _status(worst.max_residual, first.tolerance, first.bound, info),
        first.bound,
    )


@dataclass
class VerificationReport:
    suite: str
    checks: list

    def sorted(self) -> "VerificationReport":
        return VerificationReport(self.suite, sorted(self.checks, key=lambda c: c.name))

    @property
    def failed(self) -> list:
        return [c for c in self.checks if c.status == FAIL]

    def to_json(self) -> str:
        payload = {"suite": self.suite, "checks": [asdict(c) for c in self.sorted().checks]}
        return json.dumps(payload, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        cols = ["name", "anchor", "max_residual", "tolerance", "samples", "worst_momentum", "status", "bound"]
        w.writerow(cols)
        for c in self.sorted().checks:
            d = asdict(c)
            d["max_residual"] = repr(d["max_residual"])
            d["worst_momentum"] = " ".join(repr(x) for x in d["worst_momentum"])
            w.writerow([d[k] for k in cols])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        for c in self.sorted().checks:
            op = "<=" if c.bound == UPPER else ">"
            lines.append(
                f"[{c.status.upper():4}] {c.name:<48} {c.max_residual:11.3e} {op} {c.tolerance:8.1e}"
                f"  n={c.samples:<5d} p=({', '.join(f'{x:.4g}' for x in c.worst_momentum)})  {c.anchor}"
            )
        n_fail = len(self.failed)
        lines.append(f"{len(self.checks)} checks, {n_fail} failed")
        return "\n".join(lines) + "\n"
