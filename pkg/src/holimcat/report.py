"""Check reports with a stable JSON rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .simpl import PROXY


@dataclass
class Report:
    check: str
    passed: bool
    summary: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    proxy: bool = True

    def to_dict(self) -> dict:
        out = {"check": self.check, "passed": self.passed}
        if self.proxy:
            out["weak_equivalence_test"] = PROXY
        out["summary"] = self.summary
        out["notes"] = list(self.notes)
        out["rows"] = self.rows
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def headline(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        bits = [f"{k}={v}" for k, v in self.summary.items()
                if isinstance(v, (int, str, bool))]
        tail = f" ({PROXY})" if self.proxy else ""
        return f"{self.check}: {verdict} " + " ".join(bits) + tail
