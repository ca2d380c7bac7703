"""Verification outcome record shared by the check modules and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class ReportRecord:
    """One verification outcome; ``passed`` is always residual <= tolerance."""

    identity: str
    params: dict = field(default_factory=dict)
    residual: float = 0.0
    tolerance: float = 0.0
    passed: bool = False
    runtime_ms: int = 0

    @classmethod
    def from_residual(cls, identity: str, params: dict, residual: float,
                      tolerance: float, runtime_ms: int = 0) -> "ReportRecord":
        return cls(identity=identity, params=params, residual=float(residual),
                   tolerance=float(tolerance),
                   passed=bool(residual <= tolerance),
                   runtime_ms=int(runtime_ms))

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": {k: repr(v) if isinstance(v, complex) else v
                       for k, v in self.params.items()},
            "residual": self.residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "runtime_ms": self.runtime_ms,
        }
