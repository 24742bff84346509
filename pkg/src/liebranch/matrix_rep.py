"""Explicit Chevalley-generator matrices for small irreducible modules.

The construction walks the weight diagram top down.  Vectors at weight mu
are lowering words applied to the highest weight vector: candidates are
``y_i (basis of mu + alpha_i)``, enumerated by generator index then parent
index.  Their Gram matrix under the contravariant form (the symmetric
form with <y_i u, v> = <u, x_i v>) is computed recursively from the
levels above, and a maximal independent subset is selected by exact
rational elimination.  The form is positive definite on each weight
space, so greedy selection by rank growth is sound.

This yields, in one pass, a basis of the module, the Gram matrices of
the contravariant form, and the expansions needed to assemble the
generator matrices exactly.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import EmbeddingError, InternalConsistencyError
from .linalg import (
    RationalMatrix,
    SparseIntegerEliminator,
    commutator,
    primitive_integer_vector,
    rational_matrix_rank,
    solve_rational_system,
)
from .rootsystem import RootSystem, Weight, weight_height


@dataclass(frozen=True)
class RepMatrices:
    """One irreducible module as explicit sparse matrices.

    ``x[i]``, ``y[i]``, ``h[i]`` are the images of the Chevalley
    generators for node i+1; ``weights[k]`` is the weight of basis
    vector k.  Matrices act on column vectors indexed like ``weights``.
    """

    root_system: RootSystem
    highest_weight: Weight
    dim: int
    weights: tuple[Weight, ...]
    x: tuple[RationalMatrix, ...]
    y: tuple[RationalMatrix, ...]
    h: tuple[RationalMatrix, ...]


class _Space:
    __slots__ = ("weight", "dim", "gram", "xup", "ydown")

    def __init__(self, weight):
        self.weight = weight
        self.dim = 0
        self.gram = []   # dense Fraction Gram of the chosen basis
        self.xup = {}    # i0 -> per basis vector, coeffs over basis(weight + alpha_i)
        self.ydown = {}  # i0 -> per basis vector of (weight + alpha_i), coeffs here


def _weight_add(w, row):
    return tuple(a + b for a, b in zip(w, row))


def _candidate_gram(rs, spaces, mu, cands):
    """Gram matrix of the candidate vectors y_i a at weight mu."""
    n = len(cands)
    gram = [[Fraction(0)] * n for _ in range(n)]
    for r, (i0, nu_i, a) in enumerate(cands):
        for c in range(r, n):
            j0, nu_j, b = cands[c]
            tau = _weight_add(nu_j, rs.cartan[i0])
            space_tau = spaces.get(tau)
            val = Fraction(0)
            if space_tau is not None and space_tau.dim:
                xi_b = spaces[nu_j].xup.get(i0)
                xj_a = spaces[nu_i].xup.get(j0)
                if xi_b is not None and xj_a is not None:
                    gt = space_tau.gram
                    left = xj_a[a]
                    right = xi_b[b]
                    for e, le in enumerate(left):
                        if le:
                            val += le * sum(gt[e][f] * right[f]
                                            for f in range(space_tau.dim) if right[f])
            if i0 == j0:
                val += nu_i[i0] * spaces[nu_i].gram[a][b]
            gram[r][c] = val
            gram[c][r] = val
    return gram


def construct_rep(rs, hw):
    """Build the irreducible module with highest weight ``hw`` explicitly.

    Suitable for modules of moderate dimension (the weight diagram is
    materialized).  Raises InternalConsistencyError if any exactness or
    independence check fails.
    """
    hw = rs.check_dominant(hw)
    rank = rs.rank
    top = _Space(hw)
    top.dim = 1
    top.gram = [[Fraction(1)]]
    spaces = {hw: top}
    frontier = [hw]
    while frontier:
        cand_weights = set()
        for w in frontier:
            for i0 in range(rank):
                cand_weights.add(tuple(a - b for a, b in zip(w, rs.cartan[i0])))
        frontier = []
        for mu in sorted(cand_weights):
            cands = []
            for i0 in range(rank):
                nu = _weight_add(mu, rs.cartan[i0])
                space = spaces.get(nu)
                if space is not None:
                    cands.extend((i0, nu, a) for a in range(space.dim))
            if not cands:
                continue
            gram = _candidate_gram(rs, spaces, mu, cands)
            chosen = []
            for c in range(len(cands)):
                tryset = chosen + [c]
                sub = [[gram[r][s] for s in tryset] for r in tryset]
                if rational_matrix_rank(sub) == len(tryset):
                    chosen.append(c)
            if not chosen:
                continue
            space = _Space(mu)
            space.dim = len(chosen)
            space.gram = [[gram[r][c] for c in chosen] for r in chosen]
            # x_j expansions of the chosen vectors, over the space above
            cand_pos = {(i0, a): k for k, (i0, _, a) in enumerate(cands)}
            for j0 in range(rank):
                target = spaces.get(_weight_add(mu, rs.cartan[j0]))
                if target is None or not target.dim:
                    continue
                exps = []
                for c in chosen:
                    rhs = [gram[cand_pos[(j0, t)]][c] for t in range(target.dim)]
                    exps.append(solve_rational_system(target.gram, rhs))
                space.xup[j0] = exps
            # y_i action from each space above, expanded in the chosen basis
            for i0 in range(rank):
                nu = _weight_add(mu, rs.cartan[i0])
                parent = spaces.get(nu)
                if parent is None:
                    continue
                exps = []
                for a in range(parent.dim):
                    rhs = [gram[r][cand_pos[(i0, a)]] for r in chosen]
                    exps.append(solve_rational_system(space.gram, rhs))
                space.ydown[i0] = exps
            spaces[mu] = space
            frontier.append(mu)

    order = _basis_weight_order(rs, spaces)
    offsets = {}
    weights = []
    for w in order:
        offsets[w] = len(weights)
        weights.extend([w] * spaces[w].dim)
    dim = len(weights)

    xs, ys, hs = [], [], []
    for i0 in range(rank):
        xe, ye = {}, {}
        for w in order:
            space = spaces[w]
            up = _weight_add(w, rs.cartan[i0])
            target = spaces.get(up)
            if target is None or not target.dim:
                continue
            for a, coeffs in enumerate(space.xup.get(i0, ())):
                for e, v in enumerate(coeffs):
                    if v:
                        xe[(offsets[up] + e, offsets[w] + a)] = v
            for a, coeffs in enumerate(space.ydown.get(i0, ())):
                for t, v in enumerate(coeffs):
                    if v:
                        ye[(offsets[w] + t, offsets[up] + a)] = v
        xs.append(RationalMatrix(dim, dim, xe))
        ys.append(RationalMatrix(dim, dim, ye))
        hs.append(RationalMatrix.diagonal([Fraction(w[i0]) for w in weights]))

    return RepMatrices(rs, hw, dim, tuple(weights), tuple(xs), tuple(ys), tuple(hs))


def _basis_weight_order(rs, spaces):
    """Order weight spaces for the global basis.

    When the weight multiset is symmetric under negation with all spaces
    one-dimensional and nothing at height zero (the minuscule situation),
    the order pairs index k with index dim-1-k under negation: positive
    heights by decreasing height first, then their negatives reversed.
    Otherwise: decreasing height with lexicographic tie-break.
    """
    ws = [w for w, s in spaces.items() if s.dim]
    heights = {w: weight_height(rs, w) for w in ws}
    paired = (all(spaces[w].dim == 1 for w in ws)
              and all(heights[w] != 0 for w in ws)
              and all(tuple(-v for v in w) in spaces for w in ws))
    if paired:
        pos = sorted((w for w in ws if heights[w] > 0),
                     key=lambda w: (-heights[w], w))
        return pos + [tuple(-v for v in w) for w in reversed(pos)]
    return sorted(ws, key=lambda w: (-heights[w], w))


@dataclass(frozen=True)
class RelationReport:
    """Outcome of checking the Chevalley-Serre commutation relations."""

    checked: int
    violations: tuple[str, ...]

    @property
    def ok(self):
        return not self.violations


def verify_canonical_relations(rep):
    """Check all defining commutators of the generator matrices, exactly."""
    rs = rep.root_system
    rank = rs.rank
    checked = 0
    bad = []
    for i in range(rank):
        for j in range(rank):
            checked += 1
            if not commutator(rep.h[i], rep.h[j]).is_zero():
                bad.append(f"[h{i + 1}, h{j + 1}] != 0")
            checked += 1
            want = rep.h[i] if i == j else None
            got = commutator(rep.x[i], rep.y[j])
            if want is None:
                if not got.is_zero():
                    bad.append(f"[x{i + 1}, y{j + 1}] != 0")
            elif got != want:
                bad.append(f"[x{i + 1}, y{i + 1}] != h{i + 1}")
            checked += 1
            c = rs.cartan[i][j]
            if commutator(rep.h[j], rep.x[i]) != rep.x[i].scaled(c):
                bad.append(f"[h{j + 1}, x{i + 1}] != {c} x{i + 1}")
            checked += 1
            if commutator(rep.h[j], rep.y[i]) != rep.y[i].scaled(-c):
                bad.append(f"[h{j + 1}, y{i + 1}] != {-c} y{i + 1}")
    return RelationReport(checked, tuple(bad))


def _pair_index(dim):
    idx = {}
    pairs = []
    for a in range(dim):
        for b in range(a + 1, dim):
            idx[(a, b)] = len(pairs)
            pairs.append((a, b))
    return idx, pairs


def _signed_unknown(idx, a, b):
    if a == b:
        return None, 0
    if a < b:
        return idx[(a, b)], 1
    return idx[(b, a)], -1


def invariant_form_space(rep):
    """Basis of the space of invariant antisymmetric bilinear forms.

    Solves rho(g)^T M + M rho(g) = 0 for all generators g, over the
    antisymmetric unknowns M[a][b] (a < b), by fraction-free integer
    elimination.  Returns a list of primitive integer solutions as
    RationalMatrix objects.
    """
    dim = rep.dim
    idx, pairs = _pair_index(dim)
    elim = SparseIntegerEliminator(len(pairs))
    for gen in rep.x + rep.y + rep.h:
        eqs = {}
        for (c, p), v in gen.entries.items():
            # (rho^T M)_{pq} picks up rho_{cp} M_{cq}
            for q in range(dim):
                u, s = _signed_unknown(idx, c, q)
                if u is not None:
                    row = eqs.setdefault((p, q), {})
                    row[u] = row.get(u, 0) + s * v
            # (M rho)_{pq} picks up M_{pc} rho_{cq}; here (c, q) = (p', q')
            cc, qq = c, p
            for p2 in range(dim):
                u, s = _signed_unknown(idx, p2, cc)
                if u is not None:
                    row = eqs.setdefault((p2, qq), {})
                    row[u] = row.get(u, 0) + s * v
        for row in eqs.values():
            scale = math.lcm(*(v.denominator for v in row.values()))
            elim.add_row({u: int(v * scale) for u, v in row.items()})
    basis = []
    for vec in elim.nullspace():
        prim = primitive_integer_vector(vec, len(pairs))
        entries = {}
        for u, v in prim.items():
            a, b = pairs[u]
            entries[(a, b)] = Fraction(v)
            entries[(b, a)] = Fraction(-v)
        basis.append(RationalMatrix(dim, dim, entries))
    return basis


def invariant_antisymmetric_form(rep):
    """The invariant antisymmetric form, unique up to scale, normalized.

    Raises EmbeddingError unless the solution space is exactly
    one-dimensional and the form is nondegenerate.  The result has
    primitive integer entries with the first nonzero entry (in row-major
    order restricted to a < b) positive, so it is bit-reproducible.
    """
    basis = invariant_form_space(rep)
    if len(basis) != 1:
        raise EmbeddingError(
            f"invariant antisymmetric form space has dimension {len(basis)}, expected 1")
    form = basis[0]
    for gen in rep.x + rep.y + rep.h:
        if not (gen.transpose() @ form + form @ gen).is_zero():
            raise EmbeddingError("invariance residual is nonzero")
    if rational_matrix_rank(form.to_dense()) != rep.dim:
        raise EmbeddingError("invariant form is degenerate")
    return form


def dump_rep(rep, form, directory):
    """Write the generator matrices and form as sparse rational triples.

    One file per matrix (x1.txt ... y1.txt ... h1.txt ..., form.txt) plus
    weights.txt.  Entry lines are ``row col numerator denominator`` with
    zero-based indices; a leading comment records the shape.
    """
    os.makedirs(directory, exist_ok=True)
    named = [(f"x{i + 1}", m) for i, m in enumerate(rep.x)]
    named += [(f"y{i + 1}", m) for i, m in enumerate(rep.y)]
    named += [(f"h{i + 1}", m) for i, m in enumerate(rep.h)]
    named.append(("form", form))
    for name, mat in named:
        path = os.path.join(directory, f"{name}.txt")
        with open(path, "w", encoding="ascii") as fh:
            fh.write(f"# sparse {mat.nrows} {mat.ncols}\n")
            for (i, j) in sorted(mat.entries):
                v = mat.entries[(i, j)]
                fh.write(f"{i} {j} {v.numerator} {v.denominator}\n")
    with open(os.path.join(directory, "weights.txt"), "w", encoding="ascii") as fh:
        fh.write(f"# weights {rep.dim} {rep.root_system.rank}\n")
        for w in rep.weights:
            fh.write(" ".join(str(v) for v in w) + "\n")
    return directory


def load_sparse_matrix(path):
    """Read back a matrix written by :func:`dump_rep`."""
    entries = {}
    with open(path, encoding="ascii") as fh:
        header = fh.readline().split()
        if header[:2] != ["#", "sparse"]:
            raise ValueError(f"{path} is not a sparse matrix dump")
        nrows, ncols = int(header[2]), int(header[3])
        for line in fh:
            i, j, num, den = line.split()
            entries[(int(i), int(j))] = Fraction(int(num), int(den))
    return RationalMatrix(nrows, ncols, entries)
