from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, computed_field

from core.scalar import format_rational

DERIVED = "derived"


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    # beobachtete Abweichung von einer gedruckten Formel, kein Fehlschlag
    FLAG = "flag"


def show(value: Any) -> str:
    """Exakte Zeichenkette für Berichte: Zahlen als Dezimal- bzw. p/q-String."""
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return format_rational(value)
    if isinstance(value, list):
        return "[" + ", ".join(show(x) for x in value) + "]"
    if isinstance(value, tuple):
        return "(" + ", ".join(show(x) for x in value) + ")"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{show(k)}: {show(x)}" for k, x in value.items()) + "}"
    return str(value)


class ResultEntry(BaseModel):
    name: str = Field(description="Name der berechneten Größe")
    value: str = Field(description="Exakter Wert als Dezimal- oder p/q-String")
    params: Dict[str, str] = Field(default_factory=dict, description="Parameter der Größe")
    anchor: str = Field(default=DERIVED, description="Wörtlicher Ankertext oder 'derived'")
    latex: Optional[str] = Field(default=None, description="LaTeX-Darstellung, falls vorhanden")

    @classmethod
    def of(cls, name: str, value: Any, anchor: str = DERIVED, latex: Optional[str] = None, **params) -> "ResultEntry":
        return cls(
            name=name,
            value=show(value),
            params={key: show(x) for key, x in params.items()},
            anchor=anchor,
            latex=latex,
        )


class CheckResult(BaseModel):
    suite: str
    name: str
    status: CheckStatus
    d: Optional[int] = None
    expected: Optional[str] = None
    actual: Optional[str] = None
    anchor: str = DERIVED
    detail: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.status is CheckStatus.FAIL


def expect(
    suite: str, name: str, actual: Any, expected: Any, anchor: str = DERIVED, d: Optional[int] = None
) -> CheckResult:
    """Exakter Vergleich actual == expected als Prüfergebnis."""
    return CheckResult(
        suite=suite,
        name=name,
        status=CheckStatus.PASS if actual == expected else CheckStatus.FAIL,
        d=d,
        expected=show(expected),
        actual=show(actual),
        anchor=anchor,
    )


def flag(suite: str, name: str, detail: str, anchor: str = DERIVED, d: Optional[int] = None) -> CheckResult:
    return CheckResult(suite=suite, name=name, status=CheckStatus.FLAG, d=d, anchor=anchor, detail=detail)


class Report(BaseModel):
    command: str
    parameters: Dict[str, str] = Field(default_factory=dict)
    results: List[ResultEntry] = Field(default_factory=list)
    checks: List[CheckResult] = Field(default_factory=list)
    # nur im Textmodus, JSON bleibt über Läufe hinweg byte-identisch
    timing_seconds: Optional[float] = Field(default=None, exclude=True)

    @computed_field
    @property
    def status(self) -> str:
        return CheckStatus.FAIL.value if any(c.failed for c in self.checks) else CheckStatus.PASS.value

    @property
    def exit_code(self) -> int:
        return 1 if self.status == CheckStatus.FAIL.value else 0
