from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    """Outcome of one check.

    A failing report always names at least one witness (a walk, or a short
    description of what is missing), so a failure can be reproduced.
    """

    claim_id: str
    instance: str
    passed: bool
    witnesses: list[str] = field(default_factory=list)
    detail: str = ""
    index: int | None = None
    elapsed: float = 0.0
    budget_used: int = 0
    counts: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.passed and not self.witnesses:
            raise ValueError("a failing report needs a witness")

    def __bool__(self) -> bool:
        return self.passed

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["verdict"] = self.verdict
        return d

    def line(self) -> str:
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{self.verdict.upper()}] {self.claim_id}: {self.instance}{extra}"
