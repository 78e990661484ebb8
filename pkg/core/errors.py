from typing import Optional


class TripleCheckError(Exception):
    """Basisklasse für alle fachlichen Fehler der Bibliothek."""


class UnderdeterminedSystemError(TripleCheckError):
    def __init__(self, rank: int, width: int):
        self.rank = rank
        self.width = width
        self.deficiency = width - rank
        super().__init__(
            f"underdetermined: Rangdefizit {self.deficiency} (Rang {rank} bei {width} Unbekannten)"
        )


class InconsistentSystemError(TripleCheckError):
    def __init__(self, label: str):
        self.label = label
        super().__init__(f"inconsistent: Zeile '{label}' ist nicht erfüllbar")


class InvalidSpecialClassError(TripleCheckError, ValueError):
    def __init__(self, c: int, n: int):
        self.c = c
        self.n = n
        super().__init__(
            f"invalid special class: σ_(0,{c}) existiert nicht in G(1,{n}), erlaubt ist 1 ≤ c ≤ {n - 1}"
        )


class InvalidSchubertIndexError(TripleCheckError, ValueError):
    def __init__(self, a: int, b: int, n: int):
        super().__init__(
            f"invalid Schubert index: ({a},{b}) verletzt 0 ≤ a ≤ b ≤ {n - 1}"
        )


class NotTopDegreeError(TripleCheckError, ValueError):
    def __init__(self, degree: int, top_degree: int):
        self.degree = degree
        self.top_degree = top_degree
        super().__init__(
            f"not top degree: Summe der Kodimensionen {degree}, erwartet {top_degree}"
        )


class InvariantDomainError(TripleCheckError, ValueError):
    def __init__(self, name: str, message: str):
        self.name = name
        super().__init__(f"domain: {name} {message}")


class PullbackUndefinedError(TripleCheckError, ValueError):
    def __init__(self, g: int, d: Optional[int] = None):
        self.g = g
        self.d = d
        detail = f"g={g}" if d is None else f"g={g}, d={d} (erwartet g={2 * d - 3})"
        super().__init__(f"pullback undefined: χ ist für {detail} nicht definiert")


class ConstraintDegeneracyError(TripleCheckError):
    def __init__(self, d: int, cause: Exception):
        self.d = d
        super().__init__(f"constraint degeneracy: System für d={d} nicht eindeutig lösbar ({cause})")


class InvalidPointError(TripleCheckError, ValueError):
    def __init__(self, point, curve):
        super().__init__(f"invalid point: {point} liegt nicht auf {curve}")


class SearchExhaustedError(TripleCheckError):
    def __init__(self, n: int, p_max: int):
        self.n = n
        self.p_max = p_max
        super().__init__(
            f"search exhausted: keine Kurve mit voller {n}-Torsion für Primzahlen ≤ {p_max}"
        )


class NoSolutionsOverFieldError(TripleCheckError):
    def __init__(self, n: int, target):
        self.n = n
        self.target = target
        super().__init__(
            f"no solutions over this field: {target} ist kein {n}-faches (neu samplen)"
        )


class InsufficientTorsionError(TripleCheckError, ValueError):
    def __init__(self, n: int, found: int):
        super().__init__(
            f"insufficient torsion: E[{n}] hat nur {found} rationale Punkte statt {n * n}"
        )


class DegenerateMapError(TripleCheckError, ValueError):
    def __init__(self, description: str):
        super().__init__(f"degenerate: {description} ist konstant")


class DerivationInconsistencyError(TripleCheckError):
    def __init__(self, detail: str):
        super().__init__(f"derivation inconsistency: {detail}")
