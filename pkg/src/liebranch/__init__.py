"""liebranch: exact root-system combinatorics for simple Lie algebras.

Highest-weight module dimensions and weight multiplicities, explicit
construction of small irreducible modules with their invariant forms,
derivation of the weight-space projection realizing the rank-7
exceptional subalgebra inside the rank-28 symplectic algebra, branching
of symplectic irreducibles under that embedding, and tensor product
decompositions.  All arithmetic is exact (Python integers / Fractions).
"""

from .errors import (
    EmbeddingError,
    InternalConsistencyError,
    LieError,
    NonDominantError,
    UnsupportedAlgebraError,
)
from .rootsystem import (
    AlgebraType,
    Root,
    RootSystem,
    build_root_system,
    inner_product,
    orbit_size,
    reflect,
    to_dominant_signed,
    weight_height,
    weyl_order,
)
from .reps import (
    WeightSystem,
    dominant_system_dimension,
    dominant_weight_support,
    freudenthal_multiplicities,
    irreducible_weight_system,
    orbit_expand,
    weyl_dimension,
)
from .matrix_rep import (
    RepMatrices,
    construct_rep,
    dump_rep,
    invariant_antisymmetric_form,
    verify_canonical_relations,
)
from .projection import (
    ProjectionMatrix,
    derive_projection,
    minuscule_weight_order,
    projections_equivalent,
    reference_projection,
    validate_defining_image,
)
from .branching import BranchingResult, branch, verify_branching
from .tensor import tensor_decompose, tensor_fold
from .partitions import count_partitions

__version__ = "0.1.0"

__all__ = [
    "AlgebraType",
    "BranchingResult",
    "EmbeddingError",
    "InternalConsistencyError",
    "LieError",
    "NonDominantError",
    "ProjectionMatrix",
    "RepMatrices",
    "Root",
    "RootSystem",
    "UnsupportedAlgebraError",
    "WeightSystem",
    "branch",
    "build_root_system",
    "construct_rep",
    "count_partitions",
    "derive_projection",
    "dominant_system_dimension",
    "dominant_weight_support",
    "dump_rep",
    "freudenthal_multiplicities",
    "inner_product",
    "invariant_antisymmetric_form",
    "irreducible_weight_system",
    "minuscule_weight_order",
    "orbit_expand",
    "orbit_size",
    "projections_equivalent",
    "reference_projection",
    "reflect",
    "tensor_decompose",
    "tensor_fold",
    "to_dominant_signed",
    "validate_defining_image",
    "verify_branching",
    "verify_canonical_relations",
    "weight_height",
    "weyl_dimension",
    "weyl_order",
]
