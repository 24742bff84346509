"""
Tensor product decompositions and multiplicity counting
=======================================================

Decompose tensor products of sp(56) modules exactly, fold repeated
factors, and count the combinations behind a constituent multiplicity
with the same coin-change arithmetic used for module bookkeeping.
"""

from liebranch import (
    build_root_system,
    count_partitions,
    tensor_decompose,
    tensor_fold,
    weyl_dimension,
)
from liebranch.syntax import format_weight_spec


def show(rs, factors, result):
    # result is ((highest weight, multiplicity), ...) in decreasing height.
    left = " x ".join(format_weight_spec(f) for f in factors)
    right = " + ".join(
        (f"{mult} x " if mult > 1 else "") + format_weight_spec(hw)
        for hw, mult in result
    )
    total = sum(mult * weyl_dimension(rs, hw) for hw, mult in result)
    print(f"  {left}\n      = {right}   (dim {total})")


# Products are decomposed with an exact character-theoretic recursion:
# walk the full weight system of the smaller factor, shift by the other
# highest weight, and straighten each term back into the dominant
# chamber with a sign.  Dimension conservation is asserted internally.
c28 = build_root_system("C28")
defining = (1,) + (0,) * 27

print("products of the smallest sp(56) modules:")
show(c28, (defining, defining), tensor_decompose(c28, defining, defining))

adjoint = (2,) + (0,) * 27
show(c28, (defining, adjoint), tensor_decompose(c28, defining, adjoint))

# tensor_fold chains pairwise products over any number of factors.
# The cube of the defining module is the first product with
# multiplicities above one.
print("\ncube of the defining module:")
cube = tensor_fold(c28, (defining, defining, defining))
show(c28, (defining,) * 3, cube)

# One constituent of interest is the 1596-dimensional adjoint module
# appearing in the square of the defining module.  Counting how many
# ways 1596 splits into the dimensions of the rank-7 subalgebra's small
# modules is plain coin-change counting -- exact dynamic programming.
small_dims = (56, 133, 912, 1463, 1539)
print(f"\nways to write 1596 as a sum from {small_dims}: "
      f"{count_partitions(1596, small_dims)}")
print(f"ways once singlets (dimension 1) are allowed too: "
      f"{count_partitions(1596, (1,) + small_dims)}")
