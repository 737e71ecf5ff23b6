"""Exception hierarchy shared across the package."""


class PlatError(Exception):
    """Base class for all domain errors."""


class BridgeMismatch(PlatError):
    """Union of tangles with different bridge numbers."""


class TooManyCrossings(PlatError):
    """Diagram exceeds the state-sum crossing cap."""


class OutOfDeskRange(PlatError):
    """Parameter outside the supported desk-scale bounds."""


class EqualIndices(PlatError):
    """Cross-section requested for a sector paired with itself."""


class SectorMismatch(PlatError):
    """Sums require equal sector counts."""


class NotValidated(PlatError):
    """Operation requires a validated diagram."""


class NotUnlink(PlatError):
    """A consecutive union was refuted as an unlink."""

    def __init__(self, sector: int, reason: str):
        super().__init__(f"union at sector {sector} is not an unlink: {reason}")
        self.sector = sector
        self.reason = reason


class InconclusiveValidation(PlatError):
    """Strict certification failed to reduce a union to crossingless form."""

    def __init__(self, sector: int, detail: str = ""):
        msg = f"strict certification inconclusive at sector {sector}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.sector = sector


class FramingViolation(PlatError):
    """Framing sum outside {0, +1, -1} at a same-component gap."""

    def __init__(self, gap: int, total: int):
        super().__init__(f"framing sum {total} at gap {gap} must be 0 or +-1")
        self.gap = gap
        self.total = total


class NotNormalPosition(PlatError):
    """Conjugator fails to bring the arc to the basepoint column."""

    def __init__(self, sector: int):
        super().__init__(f"arc {sector}: conjugator does not reach the basepoint column")
        self.sector = sector


class MalformedString(PlatError):
    """Surgery string violates the token grammar."""


class StrandMismatch(PlatError):
    """Braid word on the wrong number of strands."""


class WidthOutOfRange(PlatError):
    """Perturbation width must satisfy 0 <= m <= n-2."""


class NotAForest(PlatError):
    """Cap/band incidence graph contains a cycle."""


class NotNormalizable(PlatError):
    """Tangle could not be reduced to crossingless normal position."""


class CannotCertifyMerge(PlatError):
    """A merge hypothesis failed certification."""


class TooFewSectors(PlatError):
    """Transfer needs at least four sectors."""


class InvalidLoop(PlatError):
    """Sequence of extended rationals is not a Farey loop."""


class InvalidGraph(PlatError):
    """Graph is not n-valent properly n-edge-colored."""


class InvalidBraid(PlatError):
    """Braid fails the plat-convention certificates."""


class OddVector(PlatError):
    """Twist vector must have even positive length."""


class ParseError(PlatError):
    """Text input failed to parse; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
