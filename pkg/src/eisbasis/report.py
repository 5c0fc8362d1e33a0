"""Verification reports: one record per checked identity instance."""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field


def _jsonable(v):
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    return str(v)


@dataclass
class VerificationReport:
    identity: str
    params: dict
    residual: float
    tolerance: float
    wall_ms: float = 0.0
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        r = float(self.residual)
        if math.isnan(r):
            r = math.inf
        self.residual = abs(r)

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance

    def to_dict(self, with_time: bool = True) -> dict:
        out = {
            "identity": self.identity,
            "params": _jsonable(self.params),
            "residual": _jsonable(self.residual),
            "tolerance": self.tolerance,
            "pass": self.passed,
        }
        if self.notes:
            out["notes"] = _jsonable(self.notes)
        if with_time:
            out["wall_ms"] = round(self.wall_ms, 3)
        return out

    def to_json(self, with_time: bool = True) -> str:
        return json.dumps(self.to_dict(with_time), sort_keys=True)


class timed:
    """Context manager that records elapsed milliseconds in .ms."""

    def __enter__(self):
        self._t0 = time.perf_counter()
        self.ms = 0.0
        return self

    def __exit__(self, *exc):
        self.ms = (time.perf_counter() - self._t0) * 1000.0
        return False


def report(identity: str, params: dict, residual: float, tolerance: float, clock=None, **notes) -> VerificationReport:
    return VerificationReport(identity, params, residual, tolerance, clock.ms if clock else 0.0, notes)


def exact_residual(ok: bool) -> float:
    """Residual convention for exact identities: 0 on equality, 1 otherwise."""
    return 0.0 if ok else 1.0


__all__ = ["VerificationReport", "exact_residual", "report", "timed"]
