"""Explicit generator matrices and the invariant antisymmetric form.

sl2 strings are small enough to check by hand; the 56-dimensional module
is pinned through its commutation relations, its weight multiset, and
the uniqueness, nondegeneracy, and pairing pattern of its form.
"""

from collections import Counter
from fractions import Fraction

import pytest

from liebranch.errors import EmbeddingError
from liebranch.linalg import rational_matrix_rank
from liebranch.matrix_rep import (
    construct_rep,
    dump_rep,
    invariant_antisymmetric_form,
    invariant_form_space,
    load_sparse_matrix,
    verify_canonical_relations,
)
from liebranch.reps import irreducible_weight_system
from liebranch.rootsystem import build_root_system


def test_sl2_defining():
    a1 = build_root_system("A1")
    rep = construct_rep(a1, (1,))
    assert rep.dim == 2
    assert rep.weights == ((1,), (-1,))
    assert verify_canonical_relations(rep).ok
    # y maps the highest vector to the lowering word with norm 1
    assert rep.y[0].entries == {(1, 0): Fraction(1)}
    assert rep.x[0].entries == {(0, 1): Fraction(1)}


def test_sl2_triplet_hand_values():
    a1 = build_root_system("A1")
    rep = construct_rep(a1, (2,))
    assert rep.dim == 3
    assert rep.weights == ((2,), (0,), (-2,))
    assert verify_canonical_relations(rep).ok
    # x y v = 2 v on the top vector: [x, y] = h
    prod = rep.x[0] @ rep.y[0]
    assert prod.entries[(0, 0)] == 2


@pytest.mark.parametrize("name,hw,dim", [
    ("A2", (1, 0), 3), ("A2", (1, 1), 8), ("C2", (1, 0), 4),
    ("C2", (0, 1), 5), ("C3", (1, 0, 0), 6), ("G2", (0, 1), 14),
])
def test_small_reps_relations_and_dims(name, hw, dim):
    rs = build_root_system(name)
    rep = construct_rep(rs, hw)
    assert rep.dim == dim
    report = verify_canonical_relations(rep)
    assert report.ok, report.violations
    assert report.checked == 4 * rs.rank * rs.rank


def test_rep56_construction(rep56, e7):
    assert rep56.dim == 56
    assert len(set(rep56.weights)) == 56  # all weight spaces one-dimensional
    assert verify_canonical_relations(rep56).ok
    assert Counter(rep56.weights) == Counter(
        dict(irreducible_weight_system(e7, (0, 0, 0, 0, 0, 0, 1)).entries))


def test_rep56_basis_is_negation_paired(rep56):
    for k in range(56):
        assert rep56.weights[55 - k] == tuple(-v for v in rep56.weights[k])


def test_rep56_form_unique_nondegenerate(rep56, form56):
    assert len(invariant_form_space(rep56)) == 1
    assert rational_matrix_rank(form56.to_dense()) == 56
    # antisymmetric, integer, primitive, leading entry positive
    assert (form56 + form56.transpose()).is_zero()
    values = [v for _, v in sorted(form56.entries.items())]
    assert all(v.denominator == 1 for v in values)
    upper = [int(form56.entries[(a, b)])
             for (a, b) in sorted(form56.entries) if a < b]
    from math import gcd
    assert gcd(*upper) == 1
    assert upper[0] > 0


def test_rep56_form_invariance_residuals(rep56, form56):
    for gen in rep56.x + rep56.y + rep56.h:
        assert (gen.transpose() @ form56 + form56 @ gen).is_zero()


def test_rep56_form_pairs_opposite_weights(rep56, form56):
    for (a, b) in form56.entries:
        assert rep56.weights[a] == tuple(-v for v in rep56.weights[b])


def test_rep56_form_deterministic(e7, rep56, form56):
    rep_again = construct_rep(e7, (0, 0, 0, 0, 0, 0, 1))
    form_again = invariant_antisymmetric_form(rep_again)
    assert rep_again.weights == rep56.weights
    assert form_again == form56


def test_symplectic_defining_has_antisymmetric_form():
    c2 = build_root_system("C2")
    rep = construct_rep(c2, (1, 0))
    form = invariant_antisymmetric_form(rep)
    assert rational_matrix_rank(form.to_dense()) == 4


def test_odd_orthogonal_module_has_no_antisymmetric_form():
    # the sl2 adjoint carries a symmetric invariant form, not antisymmetric
    a1 = build_root_system("A1")
    rep = construct_rep(a1, (2,))
    assert invariant_form_space(rep) == []
    with pytest.raises(EmbeddingError):
        invariant_antisymmetric_form(rep)


def test_dump_and_reload(tmp_path, rep56, form56):
    out = dump_rep(rep56, form56, tmp_path / "dump")
    x1 = load_sparse_matrix(str(tmp_path / "dump" / "x1.txt"))
    assert x1 == rep56.x[0]
    form_back = load_sparse_matrix(str(tmp_path / "dump" / "form.txt"))
    assert form_back == form56
    lines = (tmp_path / "dump" / "weights.txt").read_text().splitlines()
    assert len(lines) == 57  # header plus one line per basis vector
