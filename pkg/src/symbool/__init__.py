"""Symmetric Boolean functions, annihilator spaces, and algebraic immunity."""

from .gf2kernel import (
    BitMatrix,
    Gf2Eliminator,
    nullspace_basis,
    rank,
    solve,
    transpose,
)
from .boolfn import (
    AiWitness,
    AnfCoeffs,
    AnnihilatorSpace,
    TruthTable,
    algebraic_immunity,
    anf_to_str,
    annihilator_space,
    brute_force_annihilator_exists,
    is_balanced,
    is_symmetric,
    moebius,
    moebius_inverse,
    permute_variables,
    support_weights,
    weight,
)
from .symfn import (
    SanfVector,
    SymValueVector,
    compress,
    expand,
    is_trivial_balanced,
    majority_family,
    preceq,
    sanf_to_value,
    sigma,
    sym_degree,
    sym_weight,
    value_to_sanf,
)
from .constructions import (
    GapAnnihilator,
    GapSystem,
    gap_annihilator,
    max_ai_necessary_condition,
    necessary_condition_annihilator,
    refute_max_ai,
    sigma_factorize,
    solve_gap_system,
)
from .surveyor import (
    SurveyRecord,
    VerificationReport,
    balanced_nontrivial_vectors,
    count_trivial_balanced,
    enumerate_symmetric,
    records_to_csv,
    records_to_json,
    report_to_json,
    survey,
    trivial_balanced_vectors,
    verify_theorems,
)

__version__ = "0.1.0"

__all__ = [
    "AiWitness",
    "AnfCoeffs",
    "AnnihilatorSpace",
    "BitMatrix",
    "GapAnnihilator",
    "GapSystem",
    "Gf2Eliminator",
    "SanfVector",
    "SurveyRecord",
    "SymValueVector",
    "TruthTable",
    "VerificationReport",
    "algebraic_immunity",
    "anf_to_str",
    "annihilator_space",
    "balanced_nontrivial_vectors",
    "brute_force_annihilator_exists",
    "compress",
    "count_trivial_balanced",
    "enumerate_symmetric",
    "expand",
    "gap_annihilator",
    "is_balanced",
    "is_symmetric",
    "is_trivial_balanced",
    "majority_family",
    "max_ai_necessary_condition",
    "moebius",
    "moebius_inverse",
    "necessary_condition_annihilator",
    "nullspace_basis",
    "permute_variables",
    "preceq",
    "rank",
    "records_to_csv",
    "records_to_json",
    "refute_max_ai",
    "report_to_json",
    "sanf_to_value",
    "sigma",
    "sigma_factorize",
    "solve",
    "solve_gap_system",
    "support_weights",
    "survey",
    "sym_degree",
    "sym_weight",
    "transpose",
    "trivial_balanced_vectors",
    "value_to_sanf",
    "verify_theorems",
    "weight",
]
