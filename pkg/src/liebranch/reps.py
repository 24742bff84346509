"""Weight systems of irreducible highest-weight modules.

The expensive objects are the *dominant* weight tables: Freudenthal's
recursion runs over dominant weights only, and full weight systems are
recovered on demand by expanding Weyl orbits.  That split is what makes
rank-28 computations tractable; the symplectic Weyl group has order
2^28 * 28! and can never be enumerated.

All multiplicity arithmetic is exact.  The recursion works with pairings
scaled by ``norm_scale`` so everything stays in Python integers, and each
division asserts exactness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InternalConsistencyError
from .rootsystem import RootSystem, Weight, orbit_size

# int64 stays exact below this; reflections add at most a few label-sized
# terms per step, so intermediates keep a wide margin before overflow
_INT64_SAFE = 2**40


@dataclass(frozen=True)
class WeightSystem:
    """Weights of one module with positive integer multiplicities."""

    root_system: RootSystem
    entries: dict[Weight, int]

    def __post_init__(self):
        if any(m <= 0 for m in self.entries.values()):
            raise InternalConsistencyError("weight system with nonpositive multiplicity")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries.items())

    def multiplicity(self, w):
        return self.entries.get(tuple(w), 0)

    def total_multiplicity(self):
        return sum(self.entries.values())


def weyl_dimension(rs, hw):
    """Dimension of the irreducible module with highest weight ``hw``.

    Product over positive roots of <hw + rho, a> / <rho, a>, carried out
    as one big integer numerator and denominator; the final division must
    be exact.
    """
    hw = rs.check_dominant(hw)
    shifted = [v + 1 for v in hw]
    num = 1
    den = 1
    for root in rs.positive_roots:
        w = root.weighted
        num *= sum(s * c for s, c in zip(shifted, w) if c)
        den *= sum(w)
    dim, rem = divmod(num, den)
    if rem:
        raise InternalConsistencyError("Weyl dimension product did not divide")
    return dim


def _dominant_support(rs, hw):
    """Dominant weights below ``hw`` with their depth coefficient vectors.

    Pairs (w, k) with hw - w = sum_i k[i] alpha_i, found by closing the set
    downward: subtracting single positive roots from dominant members
    reaches every dominant weight of the module.  Sorted by increasing
    depth so Freudenthal can fill the table in one pass.
    """
    zero = (0,) * rs.rank
    seen = {hw: zero}
    queue = [hw]
    while queue:
        nxt = []
        for w in queue:
            kvec = seen[w]
            for root in rs.positive_roots:
                cand = tuple(a - b for a, b in zip(w, root.dynkin))
                if min(cand) < 0 or cand in seen:
                    continue
                seen[cand] = tuple(a + b for a, b in zip(kvec, root.coeffs))
                nxt.append(cand)
        queue = nxt
    return sorted(seen.items(), key=lambda item: (sum(item[1]), item[0]))


def dominant_weight_support(rs, hw):
    """Just the dominant weights of the module, ordered by depth then labels."""
    hw = rs.check_dominant(hw)
    return [w for w, _ in _dominant_support(rs, hw)]


def _dominant_conjugate(rs, w):
    """Dominant Weyl-orbit representative, by reflecting up negatives."""
    labels = list(w)
    rank = rs.rank
    cartan = rs.cartan
    moved = True
    while moved:
        moved = False
        for i in range(rank):
            v = labels[i]
            if v < 0:
                row = cartan[i]
                for j in range(rank):
                    labels[j] -= v * row[j]
                moved = True
                break
    return tuple(labels)


def _freudenthal_dominant(rs, hw):
    """Multiplicities of all dominant weights of the module, exactly.

    Freudenthal's recursion, restricted to dominant weights: multiplicities
    at non-dominant points are looked up through their dominant conjugates
    (Weyl invariance of the character).  The depth bookkeeping prunes the
    k-string loops: mu + k*alpha can only be a weight while the coefficient
    vector of hw - mu - k*alpha stays nonnegative.
    """
    support = _dominant_support(rs, hw)
    norms = rs.root_norms
    mult = {}
    for mu, kvec in support:
        if not any(kvec):
            mult[mu] = 1
            continue
        acc = 0
        for root in rs.positive_roots:
            ca = root.coeffs
            da = root.dynkin
            wa = root.weighted
            k = 1
            while True:
                if any(kv < k * c for kv, c in zip(kvec, ca)):
                    break
                nu = tuple(m + k * d for m, d in zip(mu, da))
                m = mult.get(_dominant_conjugate(rs, nu), 0)
                if m == 0:
                    # the alpha-string through mu is unbroken, so the first
                    # non-weight above mu ends the string
                    break
                acc += m * sum(v * c for v, c in zip(nu, wa) if c)
                k += 1
        den = sum(kv * (h + m + 2) * d
                  for kv, h, m, d in zip(kvec, hw, mu, norms) if kv)
        val, rem = divmod(2 * acc, den)
        if rem or val <= 0:
            raise InternalConsistencyError(
                f"multiplicity recursion failed at {mu} (got {2 * acc}/{den})")
        mult[mu] = val
    return mult


_dominant_system_cache: dict = {}


def freudenthal_multiplicities(rs, hw):
    """Dominant weight system of the irreducible module, memoized per (type, hw)."""
    hw = rs.check_dominant(hw)
    key = (rs.algebra, hw)
    cached = _dominant_system_cache.get(key)
    if cached is None:
        cached = WeightSystem(rs, _freudenthal_dominant(rs, hw))
        _dominant_system_cache[key] = cached
    return cached


def _weyl_orbit_naive(rs, w):
    """Reflection closure of one weight; exact fallback, no numpy."""
    seen = {tuple(w)}
    frontier = [tuple(w)]
    cartan = rs.cartan
    while frontier:
        nxt = []
        for u in frontier:
            for i in range(rs.rank):
                c = u[i]
                if c == 0:
                    continue
                row = cartan[i]
                v = tuple(u[j] - c * row[j] for j in range(rs.rank))
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return sorted(seen)


def weyl_orbit_array(rs, w):
    """Weyl orbit of a dominant weight, as an (N, rank) int64 array.

    Level BFS from the dominant vertex: reflect at node i only where the
    label is positive and all labels after i stay nonnegative afterwards,
    which reaches each orbit element exactly once (per level duplicates
    are removed defensively).  The resulting cardinality is asserted
    against the exact parabolic index |W| / |W_J|.
    """
    w = rs.check_dominant(w)
    expected = orbit_size(rs, w)
    cartan = np.array(rs.cartan, dtype=np.int64)
    level = np.array([w], dtype=np.int64)
    chunks = [level]
    total = 1
    overflow = False
    while True:
        nxt = []
        for i in range(rs.rank):
            mask = level[:, i] > 0
            if not mask.any():
                continue
            sel = level[mask]
            refl = sel - np.outer(sel[:, i], cartan[i])
            ok = (refl[:, i + 1:] >= 0).all(axis=1)
            if ok.any():
                nxt.append(refl[ok])
        if not nxt:
            break
        level = np.unique(np.vstack(nxt), axis=0)
        if np.abs(level).max() > _INT64_SAFE:
            overflow = True
            break
        chunks.append(level)
        total += len(level)
    if overflow:
        # unreachable for the label sizes this package meets, but the
        # exactness contract needs a lossless escape hatch
        orbit = np.array(_weyl_orbit_naive(rs, w), dtype=object)
        total = len(orbit)
    else:
        orbit = np.vstack(chunks)
    if total != expected:
        raise InternalConsistencyError(
            f"orbit of {w} has {total} elements, parabolic index gives {expected}")
    return orbit


def orbit_expand(rs, system):
    """Full weight system from a dominant one, orbit by orbit."""
    out = {}
    for w, m in system.entries.items():
        for row in weyl_orbit_array(rs, w):
            out[tuple(int(v) for v in row)] = m
    return WeightSystem(rs, out)


def dominant_system_dimension(rs, system):
    """Total module dimension of a dominant weight table, without expansion."""
    return sum(m * orbit_size(rs, w) for w, m in system.entries.items())


def irreducible_weight_system(rs, hw):
    """Full (orbit-expanded) weight system of the irreducible module."""
    return orbit_expand(rs, freudenthal_multiplicities(rs, hw))

