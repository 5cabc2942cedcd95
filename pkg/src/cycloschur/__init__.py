"""Exact arithmetic around roots of unity: cyclotomic polynomials, Schur
values at primitive roots, and unimodularity of the root vector systems."""

from .cyclotomic import (
    CycloElement,
    IntPolynomial,
    cyclo_add,
    cyclo_div,
    cyclo_is_rational_integer,
    cyclo_mul,
    cyclo_neg,
    cyclotomic_poly,
    euler_phi,
    inverse_cyclotomic_series,
    power_coord_bound,
    primitive_exponents,
)
from .symfunc import (
    BoxScanReport,
    Partition,
    alternant_at_roots,
    box_size,
    complete_at_roots,
    elementary_at_roots,
    partitions_in_box,
    schur_at_roots,
    schur_at_roots_bialternant,
    schur_box_scan,
)
from .unimodular import (
    NetworkInstance,
    NonUnimodularWitness,
    RationalMatrix,
    TUReport,
    UnimodularityReport,
    VectorSystem,
    augment_identity,
    bipartite_construction,
    det_exact,
    disjoint_sum,
    find_nonunimodular_witness,
    is_maximal_circuit,
    is_totally_unimodular,
    is_unimodular_system,
    maximal_circuit,
    network_matrix,
    sample_unimodularity,
    tensor_product,
)
from .reduction import (
    ConditionStarReport,
    FactorShape,
    SplitCertificate,
    TheoremReport,
    condition_star,
    coprime_split,
    factor_shape,
    omega_n_system,
    prime_power_split,
    verify_theorem,
    z_n_system,
)

__version__ = "0.1.0"

__all__ = [
    "BoxScanReport", "ConditionStarReport", "CycloElement", "FactorShape",
    "IntPolynomial", "NetworkInstance", "NonUnimodularWitness", "Partition",
    "RationalMatrix", "SplitCertificate", "TheoremReport", "TUReport",
    "UnimodularityReport", "VectorSystem",
    "alternant_at_roots", "augment_identity", "bipartite_construction",
    "box_size", "complete_at_roots", "condition_star", "coprime_split",
    "cyclo_add", "cyclo_div", "cyclo_is_rational_integer", "cyclo_mul",
    "cyclo_neg", "cyclotomic_poly", "det_exact", "disjoint_sum",
    "elementary_at_roots", "euler_phi", "factor_shape",
    "find_nonunimodular_witness", "inverse_cyclotomic_series",
    "is_maximal_circuit", "is_totally_unimodular", "is_unimodular_system",
    "maximal_circuit", "network_matrix", "omega_n_system",
    "partitions_in_box", "power_coord_bound", "prime_power_split",
    "primitive_exponents", "sample_unimodularity", "schur_at_roots",
    "schur_at_roots_bialternant", "schur_box_scan", "tensor_product",
    "verify_theorem", "z_n_system",
]
