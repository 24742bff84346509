"""Shape and strictness of the shipped reference data files."""

from liebranch.fixtures import (
    load_branching_fixture,
    load_dimension_fixture,
    load_frobenius_fixture,
    load_projection_fixture,
    load_tensor_fixture,
)


def test_projection_fixture_shape():
    rows = load_projection_fixture()
    assert len(rows) == 7
    assert all(len(r) == 28 for r in rows)
    assert all(isinstance(v, int) for r in rows for v in r)


def test_dimension_fixture_contents():
    rows = load_dimension_fixture()
    assert len(rows) == 22
    by_algebra = {}
    for algebra, hw, dim in rows:
        by_algebra.setdefault(str(algebra), []).append((hw, dim))
        assert len(hw) == algebra.rank
        assert dim > 0
    assert len(by_algebra["C28"]) == 8
    assert len(by_algebra["E7"]) == 14


def test_branching_fixture_contents():
    rows = load_branching_fixture()
    assert len(rows) == 8
    for hw, constituents in rows:
        assert len(hw) == 28
        assert constituents
        assert all(len(w) == 7 and m >= 1 for w, m in constituents)


def test_tensor_fixture_contents():
    rows = load_tensor_fixture()
    assert len(rows) == 4
    assert [len(factors) for factors, _ in rows] == [2, 2, 2, 3]
    # the cube contains doubled and tripled constituents
    _, cube = rows[3]
    assert sorted(m for _, m in cube) == [1, 1, 2, 3]


def test_frobenius_fixture_contents():
    rows = load_frobenius_fixture()
    assert len(rows) == 2
    assert rows[0][0] == rows[1][0] == 1596
    assert set(rows[1][1]) - set(rows[0][1]) == {1}
