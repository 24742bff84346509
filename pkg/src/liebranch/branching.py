"""Branching of irreducible modules to a subalgebra along a projection.

The restriction of an irreducible module is computed entirely in
dominant-weight bookkeeping: orbit-expand the big algebra's dominant
weight table (orbit by orbit, as integer arrays), project every weight
through the matrix, and keep only images that are dominant for the small
algebra.  Iterated highest-weight subtraction then peels off
constituents: the remaining weight of maximal height must be a highest
weight, and its full dominant system is subtracted with its multiplicity.

Every subtraction must leave nonnegative residuals and the constituent
dimensions must add up to the big module's dimension; both are asserted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InternalConsistencyError
from .reps import freudenthal_multiplicities, weyl_dimension, weyl_orbit_array
from .rootsystem import Weight, build_root_system, weight_height


@dataclass(frozen=True)
class BranchingResult:
    """Decomposition of one restricted module.

    ``constituents`` holds (small-algebra highest weight, multiplicity)
    pairs in the order found (decreasing height).  ``dimension`` is the
    big module's dimension, which always equals the weighted sum of
    constituent dimensions.
    """

    big_highest_weight: Weight
    constituents: tuple[tuple[Weight, int], ...]
    dimension: int
    constituent_dims: tuple[int, ...]

    def __iter__(self):
        return iter(self.constituents)


def branch(proj, hw):
    """Restrict the big-algebra irreducible ``hw`` through ``proj``."""
    rs_big = build_root_system(proj.big)
    rs_small = build_root_system(proj.small)
    hw = rs_big.check_dominant(hw)
    a_t = np.array(proj.matrix, dtype=np.int64).T

    dominant = freudenthal_multiplicities(rs_big, hw)
    table = {}
    total = 0
    for w, m in dominant.entries.items():
        orbit = weyl_orbit_array(rs_big, w)
        total += m * len(orbit)
        if orbit.dtype == object:
            images = np.array([proj.apply(row) for row in orbit], dtype=object)
            keep = np.array([all(v >= 0 for v in img) for img in images])
            kept = images[keep]
            for img in kept:
                key = tuple(int(v) for v in img)
                table[key] = table.get(key, 0) + m
            continue
        images = orbit @ a_t
        kept = images[(images >= 0).all(axis=1)]
        if len(kept):
            uniq, counts = np.unique(kept, axis=0, return_counts=True)
            for row, c in zip(uniq, counts):
                key = tuple(int(v) for v in row)
                table[key] = table.get(key, 0) + m * int(c)

    big_dim = weyl_dimension(rs_big, hw)
    if total != big_dim:
        raise InternalConsistencyError(
            f"expanded weight count {total} != module dimension {big_dim}")

    constituents = []
    dims = []
    remaining = big_dim
    while table:
        mu = max(table, key=lambda w: (weight_height(rs_small, w), w))
        mult = table[mu]
        if mult <= 0:
            raise InternalConsistencyError(
                f"nonpositive residual multiplicity {mult} at {mu}")
        for nu, m in freudenthal_multiplicities(rs_small, mu).entries.items():
            left = table.get(nu, 0) - mult * m
            if left < 0:
                raise InternalConsistencyError(
                    f"oversubtraction at {nu} while removing {mu}")
            if left:
                table[nu] = left
            else:
                table.pop(nu, None)
        dim = weyl_dimension(rs_small, mu)
        constituents.append((mu, mult))
        dims.append(dim)
        remaining -= mult * dim
    if remaining != 0:
        raise InternalConsistencyError(
            f"constituent dimensions leave a residue of {remaining}")
    return BranchingResult(hw, tuple(constituents), big_dim, tuple(dims))


@dataclass(frozen=True)
class BranchingReport:
    """Outcome of post-hoc checks on a branching result."""

    dimension_ok: bool
    multiplicities_ok: bool
    unexpected: tuple[Weight, ...]

    @property
    def ok(self):
        return self.dimension_ok and self.multiplicities_ok and not self.unexpected


def verify_branching(result, proj, allowed=None):
    """Re-check a branching result against its defining invariants.

    ``allowed``, if given, is an iterable of small-algebra highest weights
    every constituent must belong to; violations are reported, not raised.
    """
    rs_small = build_root_system(proj.small)
    dim_sum = sum(m * d for (_, m), d in zip(result.constituents, result.constituent_dims))
    dimension_ok = dim_sum == result.dimension
    multiplicities_ok = all(m >= 1 and rs_small.is_dominant(w)
                            for w, m in result.constituents)
    unexpected = ()
    if allowed is not None:
        allowed = {tuple(w) for w in allowed}
        unexpected = tuple(w for w, _ in result.constituents if w not in allowed)
    return BranchingReport(dimension_ok, multiplicities_ok, unexpected)
