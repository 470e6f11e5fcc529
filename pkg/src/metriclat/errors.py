"""Exception types shared across the package.

Every checker that rejects its input raises one of these with a short
message; machine-readable witness data, when available, sits on the
``witness`` attribute.
"""


class MetricLatticeError(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAPoset(MetricLatticeError):
    """Order relation fails reflexivity/antisymmetry/transitivity."""


class NotALattice(MetricLatticeError):
    """Some pair has no least upper bound or greatest lower bound."""


class TooLarge(MetricLatticeError):
    """Construction would exceed the 4096-element materialization cap."""


class ClosureTooLarge(MetricLatticeError):
    """Union/intersection closure of the generators exceeds the cap."""


class NotClosed(MetricLatticeError):
    """Subset is not closed under join/meet; witness is the offending pair."""


class NotModular(MetricLatticeError):
    """Valuation violates v(f)+v(g) = v(f^g)+v(fvg)."""


class NotIsotone(MetricLatticeError):
    """Valuation decreases somewhere along the order."""


class NoBottom(MetricLatticeError):
    """Lattice has no least element.

    Unreachable through FiniteLattice (construction guarantees a bottom);
    kept so callers of valuation_from_difference can catch a stable type.
    """


class CutLawViolated(MetricLatticeError):
    """Pair table violates w(f,g) = w(f,gvh) + w(f^h,g)."""


class UltraAxiomViolated(MetricLatticeError):
    """Pair table violates an ultravaluation axiom."""


class IntervaluationAxiomViolated(MetricLatticeError):
    """Pair table violates an intervaluation axiom for the given op."""


class ReconstructionMismatch(MetricLatticeError):
    """Extracted atom weights do not regenerate the input table."""


class GridMismatch(MetricLatticeError):
    """Distances or bounds are not integer multiples of the step."""


class NoBasepoint(MetricLatticeError):
    """Metric space has no designated basepoint."""


class MetricNotCertified(MetricLatticeError):
    """Table lacks the positive valuation/ultra/intervaluation certificate."""


class HypothesisUnmet(MetricLatticeError):
    """Cross-check preconditions (distributive lattice, positive valuation)
    do not hold; witness explains which one failed."""
