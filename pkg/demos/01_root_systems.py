"""
Root systems and exact dimension formulas
=========================================

Build root systems for simple Lie algebras, inspect their Cartan
matrices and positive roots, and evaluate module dimensions exactly
with big-integer arithmetic.
"""

from liebranch import build_root_system, weyl_dimension, weyl_order

# A root system is built from a family letter and a rank, e.g. "C2" is
# the rank-2 symplectic algebra sp(4).  Construction is cached, so
# repeated calls share one immutable object.
c2 = build_root_system("C2")

print("C2 Cartan matrix (row i = Dynkin labels of simple root i):")
for row in c2.cartan:
    print("   ", row)

# Positive roots are enumerated by closing the simple roots under root
# strings.  Each root carries its simple-root coordinates and its
# Dynkin labels (coordinates in the fundamental-weight basis).
print("\nC2 positive roots (simple-root coords -> Dynkin labels):")
for root in c2.positive_roots:
    print(f"    {root.coeffs} -> {root.dynkin}   height {root.height}")

# Root counts and Weyl group orders for a few algebras, including the
# two that drive the embedding studied in this package: the rank-28
# symplectic algebra sp(56) and its rank-7 exceptional subalgebra.
print("\nalgebra  positive roots  |Weyl group|")
for spec in ("A2", "G2", "F4", "E6", "E7", "C28"):
    rs = build_root_system(spec)
    print(f"{spec:>7}  {len(rs.positive_roots):>14}  {weyl_order(rs.algebra):>12}")

# The Weyl dimension formula gives exact module dimensions as a ratio
# of big-integer products -- no floating point anywhere.
e7 = build_root_system("E7")
print("\nE7 fundamental module dimensions:")
for i in range(7):
    hw = tuple(1 if j == i else 0 for j in range(7))
    print(f"    highest weight {hw} -> dim {weyl_dimension(e7, hw)}")

# The smallest faithful E7 module is the 56-dimensional one sitting at
# the last fundamental weight; the adjoint (dimension 133) sits at the
# first.  Both reappear throughout the other demos.
c28 = build_root_system("C28")
defining = (1,) + (0,) * 27
print(f"\nsp(56) defining module dimension: {weyl_dimension(c28, defining)}")
