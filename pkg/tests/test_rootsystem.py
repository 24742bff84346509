"""Root system construction, reflections, and invariant pairings.

Hand-computed oracles (C2 throughout: small enough to verify every root
by hand) pin the sign and orientation conventions; property tests check
the Weyl-group identities on random weights.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from liebranch.errors import NonDominantError, UnsupportedAlgebraError
from liebranch.rootsystem import (
    AlgebraType,
    build_root_system,
    inner_product,
    orbit_size,
    reflect,
    to_dominant_signed,
    weight_height,
    weyl_order,
)

# |positive roots| by classical count: A_n n(n+1)/2, B/C_n n^2,
# D_n n(n-1), G2 6, F4 24, E6 36, E7 63, E8 120
ROOT_COUNTS = [
    ("A1", 1), ("A2", 3), ("A3", 6), ("B2", 4), ("B3", 9), ("C2", 4),
    ("C3", 9), ("D4", 12), ("G2", 6), ("F4", 24), ("E6", 36), ("E7", 63),
    ("E8", 120), ("C28", 784),
]


def test_algebra_parse():
    assert AlgebraType.parse("C28") == AlgebraType("C", 28)
    assert AlgebraType.parse("e7") == AlgebraType("E", 7)
    assert str(AlgebraType.parse(" A1 ")) == "A1"


@pytest.mark.parametrize("bad", ["E9", "E5", "B1", "C1", "D2", "F5", "G3", "H4", "x", "7"])
def test_algebra_parse_rejects(bad):
    with pytest.raises(UnsupportedAlgebraError):
        AlgebraType.parse(bad)


def test_c2_cartan_orientation():
    # second node long: reflecting the defining weight must stay integral
    c2 = build_root_system("C2")
    assert c2.cartan == ((2, -1), (-2, 2))


def test_c28_long_root_is_last_node():
    c28 = build_root_system("C28")
    assert c28.cartan[27][26] == -2
    assert c28.cartan[26][27] == -1
    assert c28.root_norms == (1,) * 27 + (2,)
    assert c28.norm_scale == 2


def test_e7_diagram_shape():
    e7 = build_root_system("E7")
    C = e7.cartan
    bonds = {(i + 1, j + 1) for i in range(7) for j in range(7)
             if i < j and C[i][j] != 0}
    assert bonds == {(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)}
    assert all(C[i][j] == C[j][i] for i in range(7) for j in range(7))


@pytest.mark.parametrize("name,count", ROOT_COUNTS)
def test_positive_root_counts(name, count):
    rs = build_root_system(name)
    assert len(rs.positive_roots) == count


def test_c2_positive_roots_exactly():
    # closure by hand: a1, a2, a1+a2, 2a1+a2
    c2 = build_root_system("C2")
    assert {r.coeffs for r in c2.positive_roots} == {(1, 0), (0, 1), (1, 1), (2, 1)}


def test_root_invariants():
    for name in ("A3", "C3", "G2", "F4", "E6"):
        rs = build_root_system(name)
        for root in rs.positive_roots:
            assert all(c >= 0 for c in root.coeffs)
            assert root.height == sum(root.coeffs)
            dynkin = tuple(sum(c * rs.cartan[k][j] for k, c in enumerate(root.coeffs))
                           for j in range(rs.rank))
            assert root.dynkin == dynkin


def test_simple_roots_come_first():
    rs = build_root_system("C3")
    firsts = [r.coeffs for r in rs.positive_roots[:3]]
    assert firsts == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_reflect_c2_hand_values():
    c2 = build_root_system("C2")
    assert reflect(c2, (1, 0), 1) == (-1, 1)
    assert reflect(c2, (1, 0), 2) == (1, 0)
    assert reflect(c2, (0, 1), 2) == (2, -1)


def test_reflect_validates_node():
    c2 = build_root_system("C2")
    with pytest.raises(ValueError):
        reflect(c2, (1, 0), 0)
    with pytest.raises(ValueError):
        reflect(c2, (1, 0), 3)


@st.composite
def weight_and_system(draw, names=("A2", "A3", "C2", "C3", "D4")):
    name = draw(st.sampled_from(names))
    rs = build_root_system(name)
    w = tuple(draw(st.lists(st.integers(-6, 6), min_size=rs.rank, max_size=rs.rank)))
    return rs, w


@given(weight_and_system(), st.data())
@settings(max_examples=80, deadline=None)
def test_reflect_is_an_involution(rw, data):
    rs, w = rw
    node = data.draw(st.integers(1, rs.rank))
    assert reflect(rs, reflect(rs, w, node), node) == w


@given(weight_and_system(), st.data())
@settings(max_examples=80, deadline=None)
def test_reflect_fixes_iff_label_zero(rw, data):
    rs, w = rw
    node = data.draw(st.integers(1, rs.rank))
    fixed = reflect(rs, w, node) == w
    assert fixed == (w[node - 1] == 0)


def test_to_dominant_signed_on_dominant_inputs():
    c2 = build_root_system("C2")
    assert to_dominant_signed(c2, (2, 3)) == ((2, 3), 1)
    # a zero label means a reflection fixes the weight: sign collapses
    assert to_dominant_signed(c2, (1, 0)) == ((1, 0), 0)
    assert to_dominant_signed(c2, (-1, 1)) == ((1, 0), 0)


@st.composite
def chamber_walk(draw):
    name = draw(st.sampled_from(("A2", "A3", "C2", "C3")))
    rs = build_root_system(name)
    dom = tuple(draw(st.lists(st.integers(1, 4), min_size=rs.rank, max_size=rs.rank)))
    w = dom
    steps = 0
    for _ in range(draw(st.integers(0, 12))):
        choices = [i for i in range(rs.rank) if w[i] != 0]
        if not choices:
            break
        w = reflect(rs, w, draw(st.sampled_from(choices)) + 1)
        steps += 1
    return rs, dom, w, steps


@given(chamber_walk())
@settings(max_examples=120, deadline=None)
def test_to_dominant_signed_inverts_tracked_walks(walk):
    # strictly dominant start, reflections only at nonzero labels: the
    # Weyl element is then unique, so the sign must equal the walk parity
    rs, dom, w, steps = walk
    got, sign = to_dominant_signed(rs, w)
    assert got == dom
    assert sign == (-1) ** steps


def test_inner_product_c2_hand_values():
    c2 = build_root_system("C2")
    a1 = c2.positive_roots[0].dynkin
    a2 = c2.positive_roots[1].dynkin
    assert inner_product(c2, a1, a1) == 1
    assert inner_product(c2, a2, a2) == 2
    assert inner_product(c2, a1, a2) == -1


def test_root_lengths_by_family():
    e7 = build_root_system("E7")
    assert {inner_product(e7, r.dynkin, r.dynkin) for r in e7.positive_roots} == {2}
    c3 = build_root_system("C3")
    assert {inner_product(c3, r.dynkin, r.dynkin) for r in c3.positive_roots} == {1, 2}
    g2 = build_root_system("G2")
    assert {inner_product(g2, r.dynkin, r.dynkin) for r in g2.positive_roots} \
        == {Fraction(2, 3), 2}


@given(weight_and_system(), st.data())
@settings(max_examples=60, deadline=None)
def test_inner_product_weyl_invariance(rw, data):
    rs, a = rw
    b = tuple(data.draw(st.lists(st.integers(-6, 6), min_size=rs.rank, max_size=rs.rank)))
    node = data.draw(st.integers(1, rs.rank))
    assert inner_product(rs, a, b) == inner_product(
        rs, reflect(rs, a, node), reflect(rs, b, node))


def test_weight_height_of_simple_roots_is_one():
    for name in ("A3", "C3", "E7", "C28", "G2", "F4"):
        rs = build_root_system(name)
        for i in range(rs.rank):
            assert weight_height(rs, rs.cartan[i]) == 1
        for root in rs.positive_roots:
            assert weight_height(rs, root.dynkin) == root.height


def test_weyl_orders():
    assert weyl_order(AlgebraType("A", 1)) == 2
    assert weyl_order(AlgebraType("A", 2)) == 6
    assert weyl_order(AlgebraType("C", 2)) == 8
    assert weyl_order(AlgebraType("G", 2)) == 12
    assert weyl_order(AlgebraType("D", 4)) == 192
    assert weyl_order(AlgebraType("F", 4)) == 1152
    assert weyl_order(AlgebraType("E", 7)) == 2903040


def _orbit_by_closure(rs, w):
    # brute-force oracle: close under all simple reflections
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            for node in range(1, rs.rank + 1):
                v = reflect(rs, u, node)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_orbit_size_matches_closure(data):
    name = data.draw(st.sampled_from(("A2", "A3", "C2", "C3", "D4")))
    rs = build_root_system(name)
    w = tuple(data.draw(st.lists(st.integers(0, 3), min_size=rs.rank, max_size=rs.rank)))
    assert orbit_size(rs, w) == len(_orbit_by_closure(rs, w))


def test_orbit_size_spot_values(e7, c28):
    # stabilizer of the minuscule weight is the full rank-6 parabolic
    assert orbit_size(e7, (0, 0, 0, 0, 0, 0, 1)) == 56
    assert orbit_size(c28, (1,) + (0,) * 27) == 56
    assert orbit_size(c28, (0, 1) + (0,) * 26) == 2 * 28 * 27
    assert orbit_size(e7, (0,) * 7) == 1


def test_orbit_size_rejects_nondominant(c28):
    with pytest.raises(NonDominantError):
        orbit_size(c28, (-1,) + (0,) * 27)


def test_fundamental_weight_data(e7):
    # row i of the inverse Cartan expands the i-th fundamental weight
    for i in range(7):
        unit = tuple(int(j == i) for j in range(7))
        coords = e7.fundamental_weights[i]
        back = tuple(sum(coords[k] * e7.cartan[k][j] for k in range(7))
                     for j in range(7))
        assert back == unit
    assert e7.weyl_vector == (1,) * 7
