"""
Deriving the projection matrix and branching modules
====================================================

Derive the 7 x 28 weight-space projection that restricts sp(56) modules
to the rank-7 exceptional subalgebra, check it against the bundled
reference matrix, and decompose the eight smallest symplectic modules.
"""

from liebranch import (
    branch,
    derive_projection,
    projections_equivalent,
    reference_projection,
    validate_defining_image,
)
from liebranch.fixtures import load_branching_fixture
from liebranch.syntax import format_weight_spec

# The projection is derived from first principles: order the 28
# positive-height weights of the 56-dimensional module by decreasing
# height, and take partial sums.  Column k then sends the symplectic
# weight eps_k to the k-th module weight.
derived = derive_projection()
print(f"derived projection: {len(derived.matrix)} x {len(derived.matrix[0])}, "
      f"provenance {derived.provenance!r}")

# A correct projection must map the 56 defining weights of sp(56)
# bijectively onto the module weights, compatibly with negation.
report = validate_defining_image(derived)
print(f"defining-orbit image check: {'ok' if report.ok else report.reason}")

# The bundled reference matrix differs entry-by-entry (any weight-space
# basis change gives another valid projection) but produces identical
# branchings, which is the equivalence that matters.
ref = reference_projection()
same_entries = derived.matrix == ref.matrix
print(f"identical to reference entrywise: {same_entries}; "
      f"branching-equivalent: {projections_equivalent(derived, ref)}")

# Branch the eight symplectic modules of the bundled reference table:
# expand the module's weights, project them, keep the dominant ones,
# and peel off highest weights until nothing remains.
print("\nsp(56) module -> exceptional-subalgebra constituents")
for big_hw, _expected in load_branching_fixture():
    result = branch(derived, big_hw)
    pieces = " + ".join(
        (f"{mult} x " if mult > 1 else "") + format_weight_spec(hw)
        for hw, mult in result.constituents
    )
    dims = " + ".join(
        (f"{mult} x " if mult > 1 else "") + str(dim)
        for (hw, mult), dim in zip(result.constituents, result.constituent_dims)
    )
    print(f"  {format_weight_spec(big_hw):>10}  (dim {result.dimension})")
    print(f"      = {pieces}")
    print(f"      = {dims}")
