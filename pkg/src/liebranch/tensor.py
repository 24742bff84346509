"""Tensor product decomposition by the rho-shifted orbit method.

For irreducibles V(lam) (x) V(mu), iterate over the full weight system of
the *smaller* factor: each weight nu with multiplicity m contributes
sign(w) * m at the dominant straightening of lam + rho + nu, where w is
the Weyl walk taking it to the dominant chamber and weights landing on a
chamber wall contribute nothing.  Exactness of the signed bookkeeping is
checked by a final dimension count.
"""

from __future__ import annotations

from .errors import InternalConsistencyError
from .reps import freudenthal_multiplicities, weyl_dimension, weyl_orbit_array
from .rootsystem import to_dominant_signed, weight_height

_pair_cache: dict = {}


def tensor_decompose(rs, lam, mu):
    """Constituents of V(lam) (x) V(mu) as ((highest weight, mult), ...)."""
    lam = rs.check_dominant(lam)
    mu = rs.check_dominant(mu)
    key = (rs.algebra, *sorted((lam, mu)))
    cached = _pair_cache.get(key)
    if cached is None:
        cached = _decompose(rs, lam, mu)
        _pair_cache[key] = cached
    return cached


def _decompose(rs, lam, mu):
    dim_l = weyl_dimension(rs, lam)
    dim_m = weyl_dimension(rs, mu)
    if dim_m > dim_l:
        lam, mu = mu, lam
        dim_l, dim_m = dim_m, dim_l
    shifted = tuple(v + 1 for v in lam)
    acc = {}
    for w, m in freudenthal_multiplicities(rs, mu).entries.items():
        for row in weyl_orbit_array(rs, w):
            cand = tuple(s + int(v) for s, v in zip(shifted, row))
            dom, sign = to_dominant_signed(rs, cand)
            if sign:
                hw = tuple(v - 1 for v in dom)
                acc[hw] = acc.get(hw, 0) + sign * m
    out = []
    count = 0
    for hw in sorted(acc, key=lambda w: (-weight_height(rs, w), w)):
        mult = acc[hw]
        if mult == 0:
            continue
        if mult < 0:
            raise InternalConsistencyError(
                f"negative multiplicity {mult} at {hw} in tensor decomposition")
        out.append((hw, mult))
        count += mult * weyl_dimension(rs, hw)
    if count != dim_l * dim_m:
        raise InternalConsistencyError(
            f"tensor constituents sum to {count}, factors give {dim_l * dim_m}")
    return tuple(out)


def tensor_fold(rs, factors):
    """Left fold of :func:`tensor_decompose` over a sequence of factors."""
    factors = [rs.check_dominant(f) for f in factors]
    if not factors:
        raise ValueError("tensor_fold needs at least one factor")
    acc = {factors[0]: 1}
    for f in factors[1:]:
        nxt = {}
        for hw, mult in acc.items():
            for w, m in tensor_decompose(rs, hw, f):
                nxt[w] = nxt.get(w, 0) + mult * m
        acc = nxt
    return tuple((w, acc[w]) for w in sorted(acc, key=lambda w: (-weight_height(rs, w), w)))
