import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from core.scalar import format_rational
from solver.closed_form import CLOSED_FORM_QUOTES, ClosedFormVariant, closed_form
from solver.tr_class import TrClass, solve_tr_class

logger = logging.getLogger(__name__)

HIGHERDELTAS_RATIO = 48


@dataclass(frozen=True)
class TypoFlag:
    """Beobachtete Abweichung zwischen gelöster Klasse und gedruckter Formel."""

    name: str
    detail: str
    quote: str
    is_failure: bool = False


@dataclass
class TrClassReport:
    solved: TrClass
    closed_forms: Dict[ClosedFormVariant, TrClass]
    flags: List[TypoFlag] = field(default_factory=list)

    @property
    def d(self) -> int:
        return self.solved.d

    @property
    def closed_form_corrected(self) -> TrClass:
        return self.closed_forms[ClosedFormVariant.CORRECTED]

    @property
    def closed_form_as_printed(self) -> TrClass:
        return self.closed_forms[ClosedFormVariant.AS_PRINTED]

    def diffs(self, variant: ClosedFormVariant) -> Dict[str, Fraction]:
        """solved − Variante, je Koeffizient (A, B0, B1, ...)."""
        names = TrClass.coefficient_names(self.d)
        pairs = zip(self.solved.coefficients(), self.closed_forms[variant].coefficients())
        return {name: s - c for name, (s, c) in zip(names, pairs)}

    def mismatched(self, variant: ClosedFormVariant) -> List[str]:
        return [name for name, diff in self.diffs(variant).items() if diff != 0]

    def matches(self, variant: ClosedFormVariant) -> bool:
        return not self.mismatched(variant)

    @property
    def has_failure(self) -> bool:
        return any(flag.is_failure for flag in self.flags)


def _higherdeltas_ratio(corrected: TrClass, printed: TrClass) -> Optional[Fraction]:
    """Gemeinsames Verhältnis B_i(korrigiert)/B_i(gedruckt), falls für alle i ≥ 1 gleich."""
    ratios = {c / p for c, p in zip(corrected.B[1:], printed.B[1:]) if p != 0}
    return ratios.pop() if len(ratios) == 1 else None


def _flags(report: TrClassReport) -> List[TypoFlag]:
    flags = []
    corrected_mismatch = report.mismatched(ClosedFormVariant.CORRECTED)
    if corrected_mismatch:
        flags.append(
            TypoFlag(
                name="closed_form_mismatch",
                detail=f"gelöste Klasse weicht in {', '.join(corrected_mismatch)} von der korrigierten Formel ab",
                quote=CLOSED_FORM_QUOTES[ClosedFormVariant.CORRECTED],
                is_failure=True,
            )
        )

    as_printed_mismatch = report.mismatched(ClosedFormVariant.AS_PRINTED)
    if not corrected_mismatch and as_printed_mismatch:
        flags.append(
            TypoFlag(
                name="a_constant_1885",
                detail=(
                    f"Lesart 1885d reproduziert die Lösung, 1885 weicht ab in {', '.join(as_printed_mismatch)} "
                    f"(Δ = {format_rational(report.diffs(ClosedFormVariant.AS_PRINTED)['A'])})"
                ),
                quote=CLOSED_FORM_QUOTES[ClosedFormVariant.AS_PRINTED],
            )
        )

    ratio = _higherdeltas_ratio(
        report.closed_form_corrected, report.closed_forms[ClosedFormVariant.HIGHERDELTAS_PRINTED]
    )
    if ratio is not None and ratio != 1:
        flags.append(
            TypoFlag(
                name=f"higherdeltas_factor_{format_rational(ratio)}",
                detail=f"Vorfaktor der b_i weicht um den Faktor {format_rational(ratio)} ab",
                quote=CLOSED_FORM_QUOTES[ClosedFormVariant.HIGHERDELTAS_PRINTED],
                is_failure=ratio != HIGHERDELTAS_RATIO,
            )
        )
    return flags


def compare_report(d: int) -> TrClassReport:
    report = TrClassReport(
        solved=solve_tr_class(d),
        closed_forms={variant: closed_form(d, variant) for variant in ClosedFormVariant},
    )
    report.flags = _flags(report)
    for flag in report.flags:
        log = logger.error if flag.is_failure else logger.info
        log("%s TR̄_%d: %s", "❌" if flag.is_failure else "🔍", d, flag.detail)
    return report


def coefficient_rows(report: TrClassReport) -> List[Tuple[str, Fraction, Fraction, Fraction]]:
    """Zeilen (Name, gelöst, korrigiert, wie gedruckt) für Tabellen."""
    names = TrClass.coefficient_names(report.d)
    return list(
        zip(
            names,
            report.solved.coefficients(),
            report.closed_form_corrected.coefficients(),
            report.closed_form_as_printed.coefficients(),
        )
    )
