"""Exact metric structure on finite lattices.

Valuations, ultravaluations and intervaluations with law checkers and
derived metrics, d-irreducibility oracles, approximation bases, and
lattices of grid-quantized Lipschitz functions. All arithmetic is exact
(fractions.Fraction; the compiled kernels run on lossless integer
encodings).
"""

from .analysis import (
    BaseReport,
    IrreducibilityReport,
    PuzzleReport,
    discrete_metric,
    family_d_irreducible_witness,
    find_join_irred_not_d_irred,
    irreducibility_report,
    is_d_irreducible,
    is_d_irreducible_downset,
    minimal_zero_base,
    mli,
    puzzle_criterion,
    puzzle_report,
    r_base_check,
    theorem_crosscheck,
)
from .errors import (
    ClosureTooLarge,
    CutLawViolated,
    GridMismatch,
    HypothesisUnmet,
    IntervaluationAxiomViolated,
    MetricLatticeError,
    MetricNotCertified,
    NoBasepoint,
    NoBottom,
    NotALattice,
    NotAPoset,
    NotClosed,
    NotIsotone,
    NotModular,
    ReconstructionMismatch,
    TooLarge,
    UltraAxiomViolated,
)
from .function_lattices import (
    INNER,
    OUTER,
    FiniteMetricSpace,
    GridLipschitzLattice,
    all_lambda_cones,
    basepoint_metric,
    build_lipschitz_lattice,
    hypograph,
    hypograph_set_lattice,
    l1_metric,
    lambda_cone,
    lp_metric,
    peak_metric,
    sup_metric,
)
from .generators import (
    DivisorLattice,
    SetLattice,
    SubspaceLattice,
    chain_grid_points,
    divisor_lattice,
    product_chain_lattice,
    set_lattice_from_members,
    sublattice,
    subset_lattice,
    subspace_lattice,
)
from .intervaluation import (
    ADD,
    DEFAULT_OPS,
    LP,
    MAX,
    CombineOp,
    Intervaluation,
    OpFit,
    check_intervaluation,
    check_op_axioms,
    check_prop_intervaluation,
    compatible_ops,
    metric_from_intervaluation,
    op_axiom_certificates,
    pointwise_sup_intervaluation,
    w_from_metric,
)
from .kernels import active_backend, compiled_available
from .lattice import MAX_ELEMENTS, FiniteLattice, build_from_leq
from .rational import parse_rational, rat_str
from .ultravaluation import (
    check_ultravaluation,
    extract_kappa,
    from_kappa,
    metric_from_ultravaluation,
)
from .valuation import (
    MetricTable,
    ValuationClass,
    check_cut_law,
    check_metric_axioms,
    check_modular_law,
    classify_valuation,
    difference_valuation,
    metric_from_valuation,
    valuation_from_difference,
    w_nonnegative_violations,
    w_positive_violations,
)

__version__ = "0.1.0"

__all__ = [
    "ADD",
    "BaseReport",
    "ClosureTooLarge",
    "CombineOp",
    "CutLawViolated",
    "DEFAULT_OPS",
    "DivisorLattice",
    "FiniteLattice",
    "FiniteMetricSpace",
    "GridLipschitzLattice",
    "GridMismatch",
    "HypothesisUnmet",
    "INNER",
    "Intervaluation",
    "IntervaluationAxiomViolated",
    "IrreducibilityReport",
    "LP",
    "MAX",
    "MAX_ELEMENTS",
    "MetricLatticeError",
    "MetricNotCertified",
    "MetricTable",
    "NoBasepoint",
    "NoBottom",
    "NotALattice",
    "NotAPoset",
    "NotClosed",
    "NotIsotone",
    "NotModular",
    "OUTER",
    "OpFit",
    "PuzzleReport",
    "ReconstructionMismatch",
    "SetLattice",
    "SubspaceLattice",
    "TooLarge",
    "UltraAxiomViolated",
    "ValuationClass",
    "active_backend",
    "all_lambda_cones",
    "basepoint_metric",
    "build_from_leq",
    "build_lipschitz_lattice",
    "chain_grid_points",
    "check_cut_law",
    "check_intervaluation",
    "check_metric_axioms",
    "check_modular_law",
    "check_op_axioms",
    "check_prop_intervaluation",
    "check_ultravaluation",
    "classify_valuation",
    "compatible_ops",
    "compiled_available",
    "difference_valuation",
    "discrete_metric",
    "divisor_lattice",
    "extract_kappa",
    "family_d_irreducible_witness",
    "find_join_irred_not_d_irred",
    "from_kappa",
    "hypograph",
    "hypograph_set_lattice",
    "irreducibility_report",
    "is_d_irreducible",
    "is_d_irreducible_downset",
    "l1_metric",
    "lambda_cone",
    "lp_metric",
    "metric_from_intervaluation",
    "metric_from_ultravaluation",
    "metric_from_valuation",
    "minimal_zero_base",
    "mli",
    "op_axiom_certificates",
    "parse_rational",
    "peak_metric",
    "pointwise_sup_intervaluation",
    "product_chain_lattice",
    "puzzle_criterion",
    "puzzle_report",
    "r_base_check",
    "rat_str",
    "set_lattice_from_members",
    "sublattice",
    "subset_lattice",
    "subspace_lattice",
    "sup_metric",
    "theorem_crosscheck",
    "valuation_from_difference",
    "w_from_metric",
    "w_nonnegative_violations",
    "w_positive_violations",
]
