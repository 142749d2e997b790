"""
Verification certificate schema using Pydantic.

A certificate is the structured report of a verification run: one entry per
requested check with its verdict, witness data and timing. The canonical JSON
form leaves out timestamps and durations so identical inputs produce
byte-identical output.
"""

import json
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from src import __version__

SCHEMA_VERSION = 1


class CheckVerdict(str, Enum):
    """Outcome of a single check."""
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"  # criterion is sufficient only, or input refused


def truncate_witness(witness: Dict[str, Any], max_items: int) -> Tuple[Dict[str, Any], bool]:
    """
    Cut list-valued witness entries down to ``max_items`` elements.

    Returns:
        Tuple of (possibly shortened witness, whether anything was cut)
    """
    truncated = False
    out: Dict[str, Any] = {}
    for key, value in witness.items():
        if isinstance(value, (list, tuple)) and len(value) > max_items:
            out[key] = list(value[:max_items])
            truncated = True
        elif isinstance(value, dict) and len(value) > max_items:
            out[key] = dict(list(value.items())[:max_items])
            truncated = True
        else:
            out[key] = value
    return out, truncated


class CheckResult(BaseModel):
    """Result of one named check."""
    name: str
    verdict: CheckVerdict
    summary: str = ""
    witness: Dict[str, Any] = Field(default_factory=dict)
    truncated: bool = False
    duration: float = 0.0

    @classmethod
    def build(
        cls,
        name: str,
        verdict: CheckVerdict,
        summary: str = "",
        witness: Optional[Dict[str, Any]] = None,
        max_items: Optional[int] = None,
    ) -> "CheckResult":
        witness = dict(witness or {})
        truncated = False
        if max_items is not None:
            witness, truncated = truncate_witness(witness, max_items)
        return cls(name=name, verdict=verdict, summary=summary, witness=witness, truncated=truncated)

    @property
    def passed(self) -> bool:
        return self.verdict is CheckVerdict.PASS


class Certificate(BaseModel):
    """
    Structured verification report.

    Attributes:
        schema_version: JSON schema version (serialized as ``schema``)
        subject: construction name or digest of the input file
        parameters: construction parameters (d, n, m, sigma, variant, ...)
        checks: one result per requested check, in pipeline order
        toolkit_version: version of the package that produced the report
        generated_at: creation time, excluded from the canonical form
        notes: free-form remarks such as asserted preconditions
    """
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    subject: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckResult] = Field(default_factory=list)
    toolkit_version: str = __version__
    generated_at: Optional[datetime] = None
    notes: List[str] = Field(default_factory=list)

    def add(self, result: CheckResult) -> CheckResult:
        """Append a check result; each check name may appear only once."""
        if any(c.name == result.name for c in self.checks):
            raise ValueError(f"Check '{result.name}' already recorded")
        self.checks.append(result)
        return result

    def check(self, name: str) -> CheckResult:
        for result in self.checks:
            if result.name == name:
                return result
        raise KeyError(name)

    @property
    def verdict(self) -> CheckVerdict:
        verdicts = {c.verdict for c in self.checks}
        if CheckVerdict.FAIL in verdicts:
            return CheckVerdict.FAIL
        if CheckVerdict.INCONCLUSIVE in verdicts:
            return CheckVerdict.INCONCLUSIVE
        return CheckVerdict.PASS

    @property
    def passed(self) -> bool:
        return self.verdict is CheckVerdict.PASS

    def exit_code(self) -> int:
        """0 all PASS, 1 any FAIL, 2 INCONCLUSIVE without FAIL."""
        return {CheckVerdict.PASS: 0, CheckVerdict.FAIL: 1, CheckVerdict.INCONCLUSIVE: 2}[self.verdict]

    def stamp(self) -> "Certificate":
        self.generated_at = datetime.now()
        return self

    def canonical_json(self, indent: int = 2) -> str:
        data = self.model_dump(
            mode="json",
            by_alias=True,
            exclude={"generated_at": True, "checks": {"__all__": {"duration"}}},
        )
        data["verdict"] = self.verdict.value
        return json.dumps(data, sort_keys=True, indent=indent)

    def to_json(self, indent: int = 2) -> str:
        data = self.model_dump(mode="json", by_alias=True)
        data["verdict"] = self.verdict.value
        return json.dumps(data, sort_keys=True, indent=indent)
