"""Derivation of the weight-space projection for the subalgebra embedding.

The rank-7 exceptional algebra sits inside the rank-28 symplectic algebra
through its 56-dimensional module: the symplectic defining weights
``+-eps_k`` must map onto the 56 weights of that module.  Matching the two
weight sets fixes a 7 x 28 integer matrix A sending symplectic Dynkin
labels to exceptional ones.

Since ``eps_k`` has Dynkin labels ``e_k - e_(k-1)``, matching eps_k to the
k-th module weight mu_k makes column k of A the partial sum
``mu_1 + ... + mu_k``.  The mu_k are ordered by decreasing height with a
lexicographic tie-break, one weight per +-pair (the pairing is free: the
matrix is linear, so the negative half matches automatically).

A fixture copy of the reference matrix ships with the package; derived
and reference matrices need not agree entrywise (any Weyl-compatible
reordering of the mu_k works), only induce identical branchings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import EmbeddingError
from .fixtures import load_projection_fixture
from .reps import weyl_orbit_array
from .rootsystem import AlgebraType, build_root_system, weight_height

BIG = AlgebraType("C", 28)
SMALL = AlgebraType("E", 7)
_MODULE_HW = (0, 0, 0, 0, 0, 0, 1)
_DEFINING_HW = (1,) + (0,) * 27


@dataclass(frozen=True)
class ProjectionMatrix:
    """A 7 x 28 integer matrix mapping big-algebra weights to small ones.

    ``provenance`` is "derived" for matrices computed here and
    "paper-fixture" for the shipped reference copy.
    """

    matrix: tuple[tuple[int, ...], ...]
    provenance: str
    big: AlgebraType = field(default=BIG)
    small: AlgebraType = field(default=SMALL)

    def __post_init__(self):
        if len(self.matrix) != self.small.rank:
            raise ValueError("projection matrix has the wrong number of rows")
        if any(len(row) != self.big.rank for row in self.matrix):
            raise ValueError("projection matrix has the wrong number of columns")

    def apply(self, w):
        """Image of a big-algebra weight, as small-algebra Dynkin labels."""
        return tuple(sum(r * v for r, v in zip(row, w)) for row in self.matrix)


def minuscule_weight_order(rs=None):
    """The 56 weights of the minuscule module, in paired order.

    Positive-height weights sorted by decreasing height (lexicographic
    tie-break), followed by their negatives in reverse, so position k and
    position 55-k are negatives of each other.  No weight sits at height
    zero: the highest weight is not in the root lattice.
    """
    rs = rs or build_root_system(SMALL)
    orbit = [tuple(int(v) for v in row) for row in weyl_orbit_array(rs, _MODULE_HW)]
    positive = [w for w in orbit if weight_height(rs, w) > 0]
    if len(positive) != len(orbit) // 2:
        raise EmbeddingError("module weights do not split into +- pairs by height")
    positive.sort(key=lambda w: (-weight_height(rs, w), w))
    return positive + [tuple(-v for v in w) for w in reversed(positive)]


def derive_projection():
    """Derive the projection matrix from the weight-set matching.

    Column k is the partial sum of the first k chosen module weights,
    because the k-th symplectic defining weight has Dynkin labels
    ``e_k - e_(k-1)``.  The result is validated against the defining
    weight system before being returned.
    """
    rs_small = build_root_system(SMALL)
    chosen = minuscule_weight_order(rs_small)[: BIG.rank]
    cols = []
    acc = (0,) * SMALL.rank
    for mu in chosen:
        acc = tuple(a + b for a, b in zip(acc, mu))
        cols.append(acc)
    matrix = tuple(tuple(col[i] for col in cols) for i in range(SMALL.rank))
    proj = ProjectionMatrix(matrix, "derived")
    report = validate_defining_image(proj)
    if not report.ok:
        raise EmbeddingError(
            "derived projection failed validation; retry with a permutation "
            f"of equal-height module weights ({report.reason})")
    return proj


def reference_projection():
    """The shipped reference projection matrix."""
    return ProjectionMatrix(load_projection_fixture(), "paper-fixture")


@dataclass(frozen=True)
class ImageReport:
    ok: bool
    reason: str = ""


def validate_defining_image(proj):
    """Check that the projection maps the defining weights onto the module.

    The images of the 56 symplectic defining weights must be exactly the
    56 minuscule module weights, bijectively and compatibly with negation.
    """
    rs_big = build_root_system(proj.big)
    rs_small = build_root_system(proj.small)
    a = np.array(proj.matrix, dtype=np.int64)
    defining = weyl_orbit_array(rs_big, _DEFINING_HW)
    images = defining @ a.T
    image_set = {tuple(int(v) for v in row) for row in images}
    if len(image_set) != len(defining):
        return ImageReport(False, "projection is not injective on the defining weights")
    module = {tuple(int(v) for v in row)
              for row in weyl_orbit_array(rs_small, _MODULE_HW)}
    if image_set != module:
        return ImageReport(False, "defining weights do not map onto the module weights")
    return ImageReport(True)


def projections_equivalent(a, b, test_weights=None):
    """Whether two projections induce identical branchings.

    Entrywise equality is *not* required; the derivation is free to pick
    any valid weight matching.  Equivalence is judged on branching output
    over ``test_weights`` (default: the defining and adjoint modules).
    """
    from .branching import branch

    if test_weights is None:
        test_weights = [_DEFINING_HW, (2,) + (0,) * 27]
    for hw in test_weights:
        if branch(a, hw).constituents != branch(b, hw).constituents:
            return False
    return True
