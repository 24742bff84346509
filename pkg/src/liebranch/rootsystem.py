"""Root systems for the simple Lie algebras, in the Dynkin-label basis.

Conventions, fixed once and used everywhere downstream:

* The Cartan matrix row ``i`` holds the Dynkin labels of the simple root
  ``alpha_i``, i.e. ``C[i][j] = <alpha_i, alpha_j^vee>``.  Chevalley
  generators then satisfy ``[h_j, x_i] = C[i][j] x_i``.
* Long roots have squared length 2.  The half squared lengths ``d_i``
  of the simple roots are stored as integers ``root_norms[i]`` over a
  common denominator ``norm_scale``, so every invariant pairing used by
  the multiplicity machinery stays in exact integer arithmetic.
* Weights are plain tuples of integer Dynkin labels.  The simple
  reflection acts by ``s_i(w) = w - w[i] * C[i]``.
* Node numbering follows the standard labelling of each diagram; for the
  symplectic series the unique long simple root is the *last* node, so
  ``C[n-1][n-2] = -2``.  The tests pin this orientation through rep
  dimensions (the sp(2n) defining module is ``[1, 0, ...]`` of dim 2n).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import InternalConsistencyError, NonDominantError, UnsupportedAlgebraError
from .linalg import invert_rational_matrix

Weight = tuple[int, ...]

_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


class AlgebraType(NamedTuple):
    """A simple Lie algebra named by family letter and rank, e.g. C28."""

    family: str
    rank: int

    @classmethod
    def parse(cls, spec):
        if isinstance(spec, AlgebraType):
            return spec
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", str(spec))
        if not m:
            raise UnsupportedAlgebraError(f"cannot parse algebra spec {spec!r}")
        return cls(m.group(1).upper(), int(m.group(2))).validated()

    def validated(self):
        family, rank = self
        if family in _EXCEPTIONAL_RANKS:
            if rank not in _EXCEPTIONAL_RANKS[family]:
                raise UnsupportedAlgebraError(f"no simple algebra {family}{rank}")
        elif family in _MIN_RANK:
            if rank < _MIN_RANK[family]:
                raise UnsupportedAlgebraError(
                    f"{family}{rank} is not supported; need rank >= {_MIN_RANK[family]}")
        else:
            raise UnsupportedAlgebraError(f"unknown family {family!r}")
        return self

    def __str__(self):
        return f"{self.family}{self.rank}"


class Root(NamedTuple):
    """A positive root: simple-root coefficients plus derived data.

    ``coeffs``    expansion over the simple roots (all entries >= 0)
    ``dynkin``    Dynkin labels, i.e. coeffs times the Cartan matrix
    ``height``    sum of coeffs
    ``weighted``  coeffs[i] * root_norms[i], so <w, root> in units of
                  1/norm_scale is the dot of w with this vector
    """

    coeffs: tuple[int, ...]
    dynkin: tuple[int, ...]
    height: int
    weighted: tuple[int, ...]


class RootSystem:
    """Immutable container for one simple root system.

    Construct through :func:`build_root_system`, which caches one instance
    per algebra type so the memoized weight-system tables stay coherent.
    """

    def __init__(self, algebra, cartan, positive_roots, root_norms, norm_scale):
        self.algebra = algebra
        self.rank = algebra.rank
        self.cartan = cartan
        self.positive_roots = positive_roots
        self.root_norms = root_norms
        self.norm_scale = norm_scale
        self.cartan_inverse = invert_rational_matrix(cartan)
        # fundamental weight i expanded over the simple roots = row i of C^-1
        self.fundamental_weights = self.cartan_inverse
        self.weyl_vector = (1,) * self.rank
        # height(w) = <w, rho^vee> = sum of w in the simple-root basis
        self._height_vec = tuple(sum(row) for row in self.cartan_inverse)
        # symmetric form on weights: Q[i][j] = (C^-1)[i][j] * d_j
        scale = Fraction(1, norm_scale)
        self._weight_form = tuple(
            tuple(self.cartan_inverse[i][j] * root_norms[j] * scale
                  for j in range(self.rank))
            for i in range(self.rank))

    def __repr__(self):
        return f"RootSystem({self.algebra})"

    def is_dominant(self, w):
        return all(v >= 0 for v in w)

    def check_weight(self, w):
        if len(w) != self.rank or not all(isinstance(v, int) for v in w):
            raise ValueError(f"expected {self.rank} integer Dynkin labels, got {w!r}")
        return tuple(w)

    def check_dominant(self, w):
        w = self.check_weight(w)
        if not self.is_dominant(w):
            raise NonDominantError(f"weight {w} has a negative Dynkin label")
        return w


def _cartan_matrix(algebra):
    family, n = algebra
    C = [[2 * int(i == j) for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):
        C[i][j] = cij
        C[j][i] = cji

    if family in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if family == "B" and n >= 2:
            # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            bond(n - 2, n - 1, -2, -1)
        if family == "C" and n >= 2:
            # alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
            bond(n - 2, n - 1, -1, -2)
    elif family == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif family == "E":
        # chain 1-3-4-5-..., node 2 hangs off node 4
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a - 1, b - 1)
        bond(2 - 1, 4 - 1)
    elif family == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)  # alpha_2 long, alpha_3 short
        bond(2, 3)
    elif family == "G":
        bond(0, 1, -1, -3)  # alpha_1 short, alpha_2 long
    return tuple(tuple(row) for row in C)


def _simple_root_norms(cartan):
    """Half squared lengths d_i, scaled to integers; long roots get d = 1.

    Uses d_i * C[j][i] = d_j * C[i][j] along each bond of the diagram.
    """
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                todo.append(j)
    if any(v is None for v in d):
        raise InternalConsistencyError("Dynkin diagram is disconnected")
    top = max(d)
    d = [v / top for v in d]
    scale = math.lcm(*(v.denominator for v in d))
    return tuple(int(v * scale) for v in d), scale


def _positive_roots(cartan, root_norms):
    """All positive roots by closure from the simple roots.

    A candidate beta + alpha_i is a root iff the alpha_i-string through
    beta satisfies p - <beta, alpha_i^vee> > 0, where p counts how far the
    string extends downward.  BFS by height keeps every lower root known
    before it is needed.
    """
    n = len(cartan)
    def dynkin(coeffs):
        return tuple(sum(coeffs[k] * cartan[k][j] for k in range(n)) for j in range(n))

    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    known = set(simple)
    level = list(simple)
    ordered = list(simple)
    while level:
        nxt = []
        for beta in level:
            labels = dynkin(beta)
            for i in range(n):
                p = 0
                down = list(beta)
                down[i] -= 1
                while tuple(down) in known:
                    p += 1
                    down[i] -= 1
                if p - labels[i] > 0:
                    up = list(beta)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in known:
                        known.add(cand)
                        nxt.append(cand)
        nxt.sort()
        ordered.extend(nxt)
        level = nxt
    roots = []
    for coeffs in ordered:
        weighted = tuple(c * root_norms[i] for i, c in enumerate(coeffs))
        roots.append(Root(coeffs, dynkin(coeffs), sum(coeffs), weighted))
    return tuple(roots)


@lru_cache(maxsize=None)
def _build_cached(algebra):
    cartan = _cartan_matrix(algebra)
    root_norms, norm_scale = _simple_root_norms(cartan)
    positive = _positive_roots(cartan, root_norms)
    return RootSystem(algebra, cartan, positive, root_norms, norm_scale)


def build_root_system(spec):
    """Return the (cached, shared) root system for an algebra spec like "C28"."""
    return _build_cached(AlgebraType.parse(spec))


def reflect(rs, w, node):
    """Apply the simple reflection at ``node`` (1-based) to a weight."""
    if not 1 <= node <= rs.rank:
        raise ValueError(f"node index {node} outside 1..{rs.rank}")
    w = rs.check_weight(w)
    i = node - 1
    c = w[i]
    if c == 0:
        return w
    row = rs.cartan[i]
    return tuple(w[j] - c * row[j] for j in range(rs.rank))


def to_dominant_signed(rs, w):
    """Dominant Weyl-chamber representative of ``w`` with the walk's sign.

    Repeatedly reflects at the first negative label; each step raises the
    height, so the walk terminates.  The sign is (-1)^steps, except that
    any weight on a chamber wall (a zero label in the dominant
    representative) reports sign 0, since some reflection fixes it.
    """
    w = rs.check_weight(w)
    labels = list(w)
    sign = 1
    moved = True
    while moved:
        moved = False
        for i, v in enumerate(labels):
            if v < 0:
                row = rs.cartan[i]
                for j in range(rs.rank):
                    labels[j] -= v * row[j]
                sign = -sign
                moved = True
                break
    if 0 in labels:
        sign = 0
    return tuple(labels), sign


def weight_height(rs, w):
    """<w, rho^vee>: the sum of w's coordinates in the simple-root basis."""
    return sum(v * h for v, h in zip(w, rs._height_vec))


def inner_product(rs, a, b):
    """Weyl-invariant symmetric form on weights, normalized to long roots^2 = 2."""
    a = rs.check_weight(a)
    b = rs.check_weight(b)
    total = Fraction(0)
    for i, ai in enumerate(a):
        if ai:
            row = rs._weight_form[i]
            total += ai * sum(bj * row[j] for j, bj in enumerate(b) if bj)
    return total


def weyl_order(algebra):
    """Order of the Weyl group of a simple algebra type."""
    family, n = algebra
    if family == "A":
        return math.factorial(n + 1)
    if family in ("B", "C"):
        return 2**n * math.factorial(n)
    if family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(family, n)]


def _diagram_components(cartan, nodes):
    nodes = set(nodes)
    comps = []
    while nodes:
        seed = min(nodes)
        comp = {seed}
        todo = [seed]
        while todo:
            i = todo.pop()
            for j in tuple(nodes - comp):
                if cartan[i][j] != 0:
                    comp.add(j)
                    todo.append(j)
        nodes -= comp
        comps.append(sorted(comp))
    return comps


def _classify_subdiagram(cartan, nodes):
    """Algebra type of a connected induced subdiagram of a simple diagram."""
    n = len(nodes)
    if n == 1:
        return AlgebraType("A", 1)
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            i, j = nodes[a], nodes[b]
            if cartan[i][j] != 0:
                edges.append((i, j, cartan[i][j] * cartan[j][i]))
    degree = {i: 0 for i in nodes}
    for i, j, _ in edges:
        degree[i] += 1
        degree[j] += 1
    if any(m == 3 for _, _, m in edges):
        return AlgebraType("G", 2)
    branch = [i for i in nodes if degree[i] == 3]
    doubles = [(i, j) for i, j, m in edges if m == 2]
    if not branch:
        if not doubles:
            return AlgebraType("A", n)
        (i, j), = doubles
        if degree[i] == 1 or degree[j] == 1:
            # B and C have equal Weyl group orders, so the side of the
            # arrow is irrelevant here
            return AlgebraType("C", n) if n >= 2 else AlgebraType("A", 1)
        return AlgebraType("F", 4)
    (b,) = branch
    arms = []
    for start in (i for i in nodes if degree[i] == 1):
        length = 0
        prev, cur = None, start
        while cur != b:
            length += 1
            nxt = next(j for j in nodes
                       if j != prev and j != cur and cartan[cur][j] != 0)
            prev, cur = cur, nxt
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return AlgebraType("D", n)
    if arms == [1, 2, 2]:
        return AlgebraType("E", 6)
    if arms == [1, 2, 3]:
        return AlgebraType("E", 7)
    if arms == [1, 2, 4]:
        return AlgebraType("E", 8)
    raise InternalConsistencyError(f"unrecognized subdiagram with arms {arms}")


def orbit_size(rs, w):
    """Cardinality of the Weyl orbit of a dominant weight.

    Computed as |W| / |W_J| where J is the set of nodes whose label
    vanishes; the stabilizer of a dominant weight is the parabolic
    subgroup generated by those reflections.
    """
    w = rs.check_dominant(w)
    zero_nodes = [i for i, v in enumerate(w) if v == 0]
    stab = 1
    for comp in _diagram_components(rs.cartan, zero_nodes):
        stab *= weyl_order(_classify_subdiagram(rs.cartan, comp))
    total = weyl_order(rs.algebra)
    size, rem = divmod(total, stab)
    if rem:
        raise InternalConsistencyError("parabolic order does not divide |W|")
    return size
