"""
Weight multiplicities and Weyl orbits
=====================================

Compute the full weight system of an irreducible module with exact
recursive multiplicities, and expand Weyl orbits with a vectorized
integer pipeline.
"""

from liebranch import (
    build_root_system,
    dominant_weight_support,
    freudenthal_multiplicities,
    irreducible_weight_system,
    orbit_size,
    weyl_dimension,
)

# Multiplicities are computed on dominant weights only; every other
# weight is Weyl-conjugate to one of those.  The recursion works down
# the dominant support by depth, dividing exactly at every step.
c2 = build_root_system("C2")
hw = (1, 1)

print(f"C2 module with highest weight {hw}:")
print("  dominant weight  multiplicity  orbit size")
mults = freudenthal_multiplicities(c2, hw)
for w, m in sorted(mults.entries.items(), reverse=True):
    print(f"  {str(w):>15}  {m:>12}  {orbit_size(c2, w):>10}")

# The multiplicity-weighted orbit sizes add up to the Weyl dimension,
# which the library asserts internally on every expansion.
total = sum(m * orbit_size(c2, w) for w, m in mults.entries.items())
print(f"  total dimension: {total} (Weyl formula: {weyl_dimension(c2, hw)})")

# Expanding the orbits gives the full weight system.
full = irreducible_weight_system(c2, hw)
print(f"  distinct weights in the full system: {len(full.entries)}")

# In the adjoint module the zero weight appears with multiplicity equal
# to the rank (the Cartan subalgebra), and every nonzero weight is a
# root with multiplicity one.
e7 = build_root_system("E7")
adjoint = (1, 0, 0, 0, 0, 0, 0)
adj = irreducible_weight_system(e7, adjoint)
print(f"\nE7 adjoint: dim {weyl_dimension(e7, adjoint)}, "
      f"zero-weight multiplicity {adj.entries[(0,) * 7]} (= rank)")

# The same machinery scales to large modules: the rank-28 symplectic
# algebra's 817740-dimensional module has only six dominant weights.
c28 = build_root_system("C28")
big_hw = (0, 2) + (0,) * 26
support = dominant_weight_support(c28, big_hw)
print(f"\nsp(56) module {list(big_hw[:3])}... of dimension "
      f"{weyl_dimension(c28, big_hw)}: {len(support)} dominant weights")
