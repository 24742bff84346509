"""Tensor product decompositions.

Oracle for small ranks: brute-force character convolution followed by
highest-weight peeling, an algorithm sharing nothing with the signed
straightening route under test.  The four reference products pin the
rank-28 behaviour.
"""

import itertools

import pytest

from liebranch.fixtures import load_tensor_fixture
from liebranch.reps import irreducible_weight_system, weyl_dimension
from liebranch.rootsystem import build_root_system, weight_height
from liebranch.tensor import _decompose, tensor_decompose, tensor_fold

PRODUCTS = load_tensor_fixture()


def _oracle_tensor(rs, lam, mu):
    """Decompose by multiplying full characters and peeling top weights."""
    ch = {}
    left = dict(irreducible_weight_system(rs, lam).entries)
    right = dict(irreducible_weight_system(rs, mu).entries)
    for w1, m1 in left.items():
        for w2, m2 in right.items():
            w = tuple(a + b for a, b in zip(w1, w2))
            ch[w] = ch.get(w, 0) + m1 * m2
    out = {}
    while any(ch.values()):
        top = max((w for w, m in ch.items() if m),
                  key=lambda w: (weight_height(rs, w), w))
        mult = ch[top]
        assert mult > 0 and all(v >= 0 for v in top)
        out[top] = mult
        for w, m in irreducible_weight_system(rs, top).entries.items():
            ch[w] -= mult * m
            assert ch[w] >= 0
    return out


@pytest.mark.parametrize("name", ["A2", "C2"])
def test_klimyk_matches_brute_force(name):
    rs = build_root_system(name)
    labels = [(a, b) for a in range(3) for b in range(3)]
    for lam, mu in itertools.combinations_with_replacement(labels, 2):
        got = dict(tensor_decompose(rs, lam, mu))
        assert got == _oracle_tensor(rs, lam, mu), (lam, mu)


def test_sl2_clebsch_gordan():
    a1 = build_root_system("A1")
    for a in range(5):
        for b in range(5):
            got = dict(tensor_decompose(a1, (a,), (b,)))
            want = {(c,): 1 for c in range(abs(a - b), a + b + 1, 2)}
            assert got == want


def test_decompose_is_symmetric():
    c2 = build_root_system("C2")
    assert _decompose(c2, (2, 1), (0, 2)) == _decompose(c2, (0, 2), (2, 1))


def test_dimension_conservation():
    c3 = build_root_system("C3")
    lam, mu = (1, 1, 0), (0, 0, 1)
    total = sum(m * weyl_dimension(c3, w) for w, m in tensor_decompose(c3, lam, mu))
    assert total == weyl_dimension(c3, lam) * weyl_dimension(c3, mu)


@pytest.mark.parametrize("factors,want", PRODUCTS,
                         ids=["56x56", "56x1539", "56x1596", "56cubed"])
def test_reference_products_exact(c28, factors, want):
    got = tensor_fold(c28, factors)
    assert sorted(got) == sorted(want)


def test_reference_product_dimensions(c28):
    # 56 x 56 = 3136, 56 x 1539 = 86184, 56 x 1596 = 89376, 56^3 = 175616
    dims = []
    for factors, want in PRODUCTS:
        total = sum(m * weyl_dimension(c28, w) for w, m in want)
        dims.append(total)
    assert dims == [3136, 86184, 89376, 175616]


def test_fold_is_associative():
    c2 = build_root_system("C2")
    a, b, c = (1, 0), (0, 1), (1, 1)
    left = dict(tensor_fold(c2, [a, b, c]))
    fold_right = {}
    for w, m in tensor_decompose(c2, b, c):
        for u, k in tensor_decompose(c2, a, w):
            fold_right[u] = fold_right.get(u, 0) + m * k
    assert left == fold_right


def test_fold_single_factor(c28):
    hw = (1,) + (0,) * 27
    assert tensor_fold(c28, [hw]) == ((hw, 1),)


def test_fold_requires_factors(c28):
    with pytest.raises(ValueError):
        tensor_fold(c28, [])
