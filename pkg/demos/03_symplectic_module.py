"""
The 56-dimensional module and its symplectic form
=================================================

Construct explicit generator matrices for the smallest faithful module
of the rank-7 exceptional algebra, verify the defining commutation
relations exactly, and solve for the invariant antisymmetric form that
exhibits the algebra inside sp(56).
"""

from liebranch import (
    build_root_system,
    construct_rep,
    invariant_antisymmetric_form,
    verify_canonical_relations,
)

# The module is built top-down from the highest weight: each weight
# space is spanned by lowering-operator words, made independent with an
# exact Gram-matrix rank computation.  Entries are exact rationals.
e7 = build_root_system("E7")
hw = (0, 0, 0, 0, 0, 0, 1)
rep = construct_rep(e7, hw)
print(f"constructed module: dim {rep.dim}, "
      f"{len(rep.x)} raising + {len(rep.y)} lowering + {len(rep.h)} Cartan generators")

# Every generator matrix is sparse; the raising operator for node 1 has
# only a handful of nonzero rational entries.
print(f"nonzero entries in x1: {rep.x[0].nnz()}")

# All Chevalley-Serre commutation relations are checked exactly:
# [h_i, h_j] = 0, [x_i, y_j] = delta_ij h_i, [h_j, x_i] = C(i,j) x_i,
# [h_j, y_i] = -C(i,j) y_i.
report = verify_canonical_relations(rep)
print(f"commutation relations: {report.checked} checked, "
      f"{len(report.violations)} violations")
assert report.ok

# The basis pairs each weight with its negative: basis vector k has
# weight -(weight of basis vector dim-1-k).  That ordering makes the
# symplectic structure easy to see below.
assert all(
    rep.weights[rep.dim - 1 - k] == tuple(-v for v in rep.weights[k])
    for k in range(rep.dim)
)
print("basis is negation-paired (vector k opposite vector 55-k)")

# Solving rho(g)^T M + M rho(g) = 0 over all 21 generators leaves
# exactly one antisymmetric solution up to scale: the symplectic form
# preserved by the module.  This is what realizes the rank-7
# exceptional algebra as a subalgebra of sp(56).
form = invariant_antisymmetric_form(rep)
entries = {k: v for k, v in form.entries.items() if v}
print(f"invariant antisymmetric form: {len(entries)} nonzero entries")

# In the paired basis the form is antidiagonal with entries +-1.
assert all(i + j == rep.dim - 1 for i, j in entries)
assert all(abs(v) == 1 for v in entries.values())
signs = "".join("+" if entries[(k, rep.dim - 1 - k)] > 0 else "-"
                for k in range(rep.dim // 2))
print(f"antidiagonal sign pattern (rows 0..27): {signs}")
