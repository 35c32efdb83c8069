"""Exception types shared across the engine."""


class QdmodError(Exception):
    """Base class for all engine errors."""


class ZeroConstantTerm(QdmodError):
    """Series inversion of a non-unit (vanishing constant term)."""


class NonUnitRadicand(QdmodError):
    """Series square root requires constant term 1."""


class NonvanishingConstant(QdmodError):
    """Substituted series must vanish at the origin."""


class NonUnitLeadingCoefficient(QdmodError):
    """Series-mode division by a leading coefficient that is not a unit."""


class ResourceLimit(QdmodError):
    """Configured step cap exceeded."""


class InfiniteRank(QdmodError):
    """Standard-monomial staircase is unbounded."""


class PoleAtHZero(QdmodError):
    """Negative h powers survive the semiclassical substitution."""


class DeepPole(QdmodError):
    """Connection entry with h-pole order > 1."""


class NonIntegrable(QdmodError):
    """Cross-direction determinations of an integration disagree."""


class UnreachableConstantTerm(QdmodError):
    """theta carries a q-constant term, so no gauge with Q0(0)=I exists."""


class DegreeObstruction(QdmodError):
    """A gauge coefficient has no homogeneous solution of the mandated degree."""


class BlockPatternViolation(QdmodError):
    """Q0 violates the block vanishing pattern required for the Jacobian block."""


class SingularBasis(QdmodError):
    """The candidate de-quantization map is not an isomorphism at q = 0."""


class InconsistentTable(QdmodError):
    """Matrix-derived and reduction-derived product entries disagree."""


class ExprSyntaxError(QdmodError):
    """Operator expression syntax error, with offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class UnknownSymbol(QdmodError):
    """Symbol outside the declared variable set."""


class ValidationError(QdmodError):
    """Problem file violates its invariants; carries all violations."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class MathCheckFailure(QdmodError):
    """A mathematical consistency check (rank, flatness, homogeneity) failed."""
