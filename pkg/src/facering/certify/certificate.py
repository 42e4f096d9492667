"""Machine-readable verdicts."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction

PASS = "pass"
FAIL = "fail"
REPORT = "report-only"
VERDICTS = (PASS, FAIL, REPORT)


@dataclass
class Certificate:
    check: str
    verdict: str
    witness: dict = field(default_factory=dict)
    input_fingerprint: dict = field(default_factory=dict)
    error_probability_bound: Fraction = Fraction(0)
    seed: int | None = None
    runtime_ms: float = 0.0

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        self.error_probability_bound = Fraction(self.error_probability_bound)

    @property
    def passed(self):
        return self.verdict == PASS

    @property
    def failed(self):
        return self.verdict == FAIL

    def to_json(self):
        b = self.error_probability_bound
        return {
            "check": self.check,
            "input_fingerprint": self.input_fingerprint,
            "verdict": self.verdict,
            "witness": _jsonable(self.witness),
            "error_probability_bound": f"{b.numerator}/{b.denominator}",
            "seed": self.seed,
            "runtime_ms": round(self.runtime_ms, 3),
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            check=data["check"],
            verdict=data["verdict"],
            witness=data.get("witness", {}),
            input_fingerprint=data.get("input_fingerprint", {}),
            error_probability_bound=Fraction(data.get("error_probability_bound", "0")),
            seed=data.get("seed"),
            runtime_ms=data.get("runtime_ms", 0.0),
        )


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def fingerprint(complex=None, coords=None, domain=None, seed=None, extra=None):
    out = {}
    if complex is not None:
        out["complex"] = complex.fingerprint()
        out["vertex_order"] = [str(v) for v in complex.vertices]
    if coords is not None:
        out["field"] = coords.domain.describe()
        out["coordinate_mode"] = coords.mode
        if coords.seed is not None:
            out["coordinate_seed"] = coords.seed
    elif domain is not None:
        out["field"] = domain.describe()
    if seed is not None:
        out["seed"] = seed
    if extra:
        out.update(extra)
    return out


def algebra_fingerprint(alg, seed=None, extra=None):
    return fingerprint(alg.complex, alg.coords, seed=seed, extra=extra)


@contextmanager
def timed():
    box = {"ms": 0.0}
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        box["ms"] = (time.perf_counter() - t0) * 1000.0
