from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of a verification: a flag plus the first counterexample, if any."""

    name: str
    ok: bool
    details: dict = field(default_factory=dict)
    witness: dict | None = None

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        out = {"check": self.name, "ok": self.ok, "details": self.details}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def first_difference(a: dict, b: dict):
    """First key (in sorted order) where two coefficient maps disagree."""
    for k in sorted(set(a) | set(b)):
        if a.get(k, 0) != b.get(k, 0):
            return k, a.get(k, 0), b.get(k, 0)
    return None
