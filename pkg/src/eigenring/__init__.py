"""Exact similarity, idealizer, and eigenring computations for modules
over finite-dimensional algebras over prime fields.

Everything is computed over F_p with integer arithmetic: no floating
point, no tolerances. The main layers are fqlinalg (row-reduced linear
algebra and subspaces), algebra (structure-constant algebras, right
ideals, ring-side similarity), modules (right modules, Hom and End,
lattices, projectivity, decomposition), similarity (idealizers,
eigenrings, similarity of submodules and its transfer to End), matring
(maximal left ideals of matrix rings), corpus and suites (the standard
verification battery), and cli (the eigenring command).
"""

from .algebra import (
    Algebra,
    RightIdeal,
    Subring,
    colon_right,
    eigenring_of_ideal,
    from_structure_constants,
    idealizer_ring,
    matrix_algebra,
    product,
    quotient_algebra,
    similar_ideals,
    similarity_class_of_maximal,
    triangular_algebra,
)
from .corpus import (
    CorpusInstance,
    CorpusRing,
    algebra_from_spec,
    corpus_instances,
    default_corpus,
    instance_from_spec,
)
from .fqlinalg import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    FpMatrix,
    Subspace,
    complement_basis,
    enumerate_vectors,
    solve,
)
from .matring import (
    StoneIdeal,
    count_bounds_report,
    enumerate_maxl_matrix_ring,
    parallel_representative,
    stone_equal,
    stone_ideal,
    stone_quotient_length,
)
from .modules import (
    EndRing,
    ModuleMap,
    RightModule,
    Submodule,
    composition_factors,
    composition_series,
    cyclic_submodule,
    decompose_into_locals,
    direct_sum,
    end_ring,
    end_ring_is_local,
    generated_submodule,
    hom_into_submodule,
    hom_space,
    idempotent_module,
    is_faithfully_projective,
    is_generator,
    is_isomorphic,
    is_local_module,
    is_projective,
    length,
    maximal_submodules,
    module_from_spec,
    quotient_module,
    radical,
    regular_module,
    simple_modules,
    submodule_lattice,
)
from .similarity import (
    DichotomyResult,
    Eigenring,
    TransferReport,
    are_similar,
    colon_submodule,
    eigenring,
    eigenring_quotient_iso,
    enumerate_similar_maximals,
    idealizer_coincidence,
    idealizer_data,
    induced_quotient_isomorphism,
    max_to_max_right_ideal,
    quasi_duo_dichotomy,
    similarity_classes,
    similarity_transfer,
    similarity_witness,
)
from .suites import CheckRecord, VerificationReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "BudgetExceededError",
    "CheckRecord",
    "CorpusInstance",
    "CorpusRing",
    "DEFAULT_BUDGET",
    "DichotomyResult",
    "Eigenring",
    "EndRing",
    "FpMatrix",
    "ModuleMap",
    "RightIdeal",
    "RightModule",
    "StoneIdeal",
    "Submodule",
    "Subring",
    "Subspace",
    "TransferReport",
    "VerificationReport",
    "algebra_from_spec",
    "are_similar",
    "colon_right",
    "colon_submodule",
    "complement_basis",
    "composition_factors",
    "composition_series",
    "corpus_instances",
    "count_bounds_report",
    "cyclic_submodule",
    "decompose_into_locals",
    "default_corpus",
    "direct_sum",
    "eigenring",
    "eigenring_of_ideal",
    "eigenring_quotient_iso",
    "end_ring",
    "end_ring_is_local",
    "enumerate_maxl_matrix_ring",
    "enumerate_similar_maximals",
    "enumerate_vectors",
    "from_structure_constants",
    "generated_submodule",
    "hom_into_submodule",
    "hom_space",
    "idealizer_coincidence",
    "idealizer_data",
    "idealizer_ring",
    "idempotent_module",
    "induced_quotient_isomorphism",
    "instance_from_spec",
    "is_faithfully_projective",
    "is_generator",
    "is_isomorphic",
    "is_local_module",
    "is_projective",
    "length",
    "matrix_algebra",
    "max_to_max_right_ideal",
    "maximal_submodules",
    "module_from_spec",
    "parallel_representative",
    "product",
    "quasi_duo_dichotomy",
    "quotient_algebra",
    "quotient_module",
    "radical",
    "regular_module",
    "run_suite",
    "similar_ideals",
    "similarity_class_of_maximal",
    "similarity_classes",
    "similarity_transfer",
    "similarity_witness",
    "simple_modules",
    "solve",
    "stone_equal",
    "stone_ideal",
    "stone_quotient_length",
    "triangular_algebra",
]
