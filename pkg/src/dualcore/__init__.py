"""Exact dual-core style generalized inverses over *-rings.

The package computes canonical witnesses, verifies candidates axiom by
axiom, and cross-checks every equivalence theorem against brute-force
oracles on finite rings and randomized exact matrix corpora.
"""

from .battery import (
    THEOREMS,
    TheoremBatteryReport,
    resolve_corpus,
    run_battery,
    theorem_tags,
)
from .errors import (
    CorpusTooLarge,
    DescriptorMismatch,
    DualcoreError,
    NotIdempotent,
    NotInvertible,
    ParseError,
)
from .finite import ElementSet, FiniteRing, set_direct_sum, solve_all
from .ginverse import (
    ALL_KINDS,
    COMPUTE_KINDS,
    VERIFY_ONLY_KINDS,
    DecompositionResult,
    PseudoCoreResult,
    WitnessReport,
    coincidence_check,
    exists_by_criteria,
    final_equivalences,
    inv_13,
    inv_14,
    left_bc_inverse,
    left_dual_bc_core,
    left_dual_bc_core_all_formulas,
    left_dual_core,
    left_dual_pseudo_core,
    left_dual_v_core,
    left_invertible,
    mixed_inverse_identities,
    moore_penrose,
    mp_equivalences,
    nilpotent_decomposition,
    pierce_representation_check,
    right_bc_inverse,
    strongly_left_bc_inverse,
    verify,
)
from .oracle import SolutionSet, brute_force, random_matrix_corpus, rational_matrix_ring
from .rings import (
    El,
    MatrixRing,
    PierceBlocks,
    RingDescriptor,
    descriptor_from_json,
    is_idempotent,
    is_projection,
    pierce_blocks,
    ring_from_descriptor,
)
from .scalars import GaussianRationalField, PrimeField, RationalField, field_from_tag

__version__ = "0.1.0"

__all__ = [
    "ALL_KINDS",
    "COMPUTE_KINDS",
    "CorpusTooLarge",
    "DecompositionResult",
    "DescriptorMismatch",
    "DualcoreError",
    "El",
    "ElementSet",
    "FiniteRing",
    "GaussianRationalField",
    "MatrixRing",
    "NotIdempotent",
    "NotInvertible",
    "ParseError",
    "PierceBlocks",
    "PrimeField",
    "PseudoCoreResult",
    "RationalField",
    "RingDescriptor",
    "SolutionSet",
    "THEOREMS",
    "TheoremBatteryReport",
    "VERIFY_ONLY_KINDS",
    "WitnessReport",
    "brute_force",
    "coincidence_check",
    "descriptor_from_json",
    "exists_by_criteria",
    "field_from_tag",
    "final_equivalences",
    "inv_13",
    "inv_14",
    "is_idempotent",
    "is_projection",
    "left_bc_inverse",
    "left_dual_bc_core",
    "left_dual_bc_core_all_formulas",
    "left_dual_core",
    "left_dual_pseudo_core",
    "left_dual_v_core",
    "left_invertible",
    "mixed_inverse_identities",
    "moore_penrose",
    "mp_equivalences",
    "nilpotent_decomposition",
    "pierce_blocks",
    "pierce_representation_check",
    "random_matrix_corpus",
    "rational_matrix_ring",
    "resolve_corpus",
    "right_bc_inverse",
    "ring_from_descriptor",
    "run_battery",
    "set_direct_sum",
    "solve_all",
    "strongly_left_bc_inverse",
    "theorem_tags",
    "verify",
]
