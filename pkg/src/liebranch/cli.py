"""Command line interface.

Subcommands:

* ``dim ALGEBRA HW``            dimension of one irreducible module
* ``branch HW``                 restrict a symplectic irreducible to the
                                exceptional subalgebra
* ``tensor --factors ...``      symplectic tensor product decomposition
* ``project-matrix``            print the projection matrix
* ``partitions``                count nonnegative integer combinations
* ``verify-embedding``          build the embedding and run all checks
* ``reproduce-paper``           recompute every reference table and diff

Exit codes: 0 success, 1 usage error, 2 verification mismatch,
3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .branching import branch
from .errors import LieError, NonDominantError, UnsupportedAlgebraError
from .fixtures import (
    load_branching_fixture,
    load_dimension_fixture,
    load_frobenius_fixture,
    load_tensor_fixture,
)
from .matrix_rep import (
    construct_rep,
    dump_rep,
    invariant_antisymmetric_form,
    verify_canonical_relations,
)
from .partitions import count_partitions
from .projection import (
    SMALL,
    derive_projection,
    reference_projection,
    validate_defining_image,
)
from .reps import weyl_dimension
from .rootsystem import build_root_system
from .syntax import WeightSyntaxError, format_weight_spec, parse_weight_spec
from .tensor import tensor_fold

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems through our exit code."""

    def error(self, message):
        raise UsageError(message)


def _build_parser():
    parser = _Parser(prog="liebranch", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="dimension of an irreducible module")
    p.add_argument("algebra", help="algebra type, e.g. C28 or E7")
    p.add_argument("hw", help="highest weight, e.g. 2,0^27")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("branch", help="restrict a symplectic irreducible")
    p.add_argument("hw", nargs="?", help="symplectic highest weight")
    p.add_argument("--hw", dest="hw_opt", help="alternative to the positional form")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("tensor", help="symplectic tensor product decomposition")
    p.add_argument("--factors", nargs="+", required=True, metavar="HW|x",
                   help="weights separated by literal x, e.g. 1,0^27 x 1,0^27")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("project-matrix", help="print the 7 x 28 projection matrix")
    source = p.add_mutually_exclusive_group()
    source.add_argument("--derived", action="store_true",
                        help="derive the matrix from the weight matching (default)")
    source.add_argument("--paper", action="store_true",
                        help="print the shipped reference fixture instead")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("partitions", help="count nonnegative integer combinations")
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--parts", required=True, help="comma-separated positive integers")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-embedding",
                       help="construct the 56-dim module and check the embedding")
    p.add_argument("--dump", metavar="DIR",
                   help="write generator matrices and form as sparse text files")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("reproduce-paper",
                       help="recompute all reference tables and diff against fixtures")
    p.add_argument("--json", action="store_true")
    return parser


def _parse_weight(text, rank):
    try:
        return parse_weight_spec(text, rank)
    except WeightSyntaxError as exc:
        raise UsageError(str(exc)) from None


def _constituent_doc(rs, pairs):
    return [{"hw": format_weight_spec(w), "dim": weyl_dimension(rs, w), "mult": m}
            for w, m in pairs]


def _print_constituents(rs, pairs):
    for w, m in pairs:
        mult = f"  x {m}" if m != 1 else ""
        print(f"  {format_weight_spec(w):<14} {weyl_dimension(rs, w)}{mult}")


def _cmd_dim(args):
    rs = build_root_system(args.algebra)
    hw = _parse_weight(args.hw, rs.rank)
    dim = weyl_dimension(rs, hw)
    if args.json:
        print(json.dumps({"algebra": str(rs.algebra),
                          "highest_weight": format_weight_spec(hw),
                          "dimension": dim}))
    else:
        print(dim)
    return EXIT_OK


def _cmd_branch(args):
    if bool(args.hw) == bool(args.hw_opt):
        raise UsageError("give the highest weight once, positionally or via --hw")
    rs_big = build_root_system("C28")
    rs_small = build_root_system("E7")
    hw = _parse_weight(args.hw or args.hw_opt, rs_big.rank)
    proj = derive_projection()
    result = branch(proj, hw)
    if args.json:
        print(json.dumps({"highest_weight": format_weight_spec(hw),
                          "dimension": result.dimension,
                          "constituents": _constituent_doc(rs_small, result.constituents)}))
    else:
        print(f"C28 {format_weight_spec(hw)}  (dim {result.dimension})  ->  E7")
        _print_constituents(rs_small, result.constituents)
    return EXIT_OK


def _split_factors(tokens, rank):
    factors = []
    expect_weight = True
    for token in tokens:
        if token == "x":
            if expect_weight:
                raise UsageError("misplaced factor separator 'x'")
            expect_weight = True
            continue
        if not expect_weight:
            raise UsageError("factors must be separated by a literal x")
        factors.append(_parse_weight(token, rank))
        expect_weight = False
    if expect_weight or not factors:
        raise UsageError("expected weights separated by x, e.g. 1,0^27 x 1,0^27")
    return factors


def _cmd_tensor(args):
    rs = build_root_system("C28")
    factors = _split_factors(args.factors, rs.rank)
    result = tensor_fold(rs, factors)
    dim = 1
    for f in factors:
        dim *= weyl_dimension(rs, f)
    if args.json:
        print(json.dumps({"factors": [format_weight_spec(f) for f in factors],
                          "dimension": dim,
                          "constituents": _constituent_doc(rs, result)}))
    else:
        label = " x ".join(format_weight_spec(f) for f in factors)
        print(f"C28 {label}  (dim {dim})")
        _print_constituents(rs, result)
    return EXIT_OK


def _cmd_project_matrix(args):
    proj = reference_projection() if args.paper else derive_projection()
    if args.json:
        print(json.dumps({"provenance": proj.provenance,
                          "matrix": [list(row) for row in proj.matrix]}))
    else:
        print(proj.provenance)
        for row in proj.matrix:
            print(" ".join(str(v) for v in row))
    return EXIT_OK


def _cmd_partitions(args):
    try:
        parts = [int(p) for p in args.parts.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse parts {args.parts!r}") from None
    try:
        count = count_partitions(args.target, parts)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(json.dumps({"target": args.target, "parts": sorted(parts), "count": count}))
    else:
        print(count)
    return EXIT_OK


def _cmd_verify_embedding(args):
    checks = []

    def record(name, ok, detail=""):
        checks.append({"name": name, "ok": bool(ok), "detail": detail})

    rs = build_root_system(SMALL)
    rep = construct_rep(rs, (0, 0, 0, 0, 0, 0, 1))
    record("module dimension is 56", rep.dim == 56, f"got {rep.dim}")

    relations = verify_canonical_relations(rep)
    record(f"canonical relations ({relations.checked} commutators)",
           relations.ok, "; ".join(relations.violations[:3]))

    from .reps import irreducible_weight_system
    expected = irreducible_weight_system(rs, rep.highest_weight)
    got = {}
    for w in rep.weights:
        got[w] = got.get(w, 0) + 1
    record("weights match the orbit-expanded system", got == dict(expected.entries))

    try:
        form = invariant_antisymmetric_form(rep)
        record("invariant antisymmetric form: unique and nondegenerate", True)
    except LieError as exc:
        record("invariant antisymmetric form: unique and nondegenerate", False, str(exc))
        form = None

    if form is not None:
        pairing_ok = all(rep.weights[a] == tuple(-v for v in rep.weights[b])
                         for (a, b) in form.entries)
        record("form pairs opposite weights only", pairing_ok)

    proj = derive_projection()
    record("derived projection maps defining weights onto the module",
           validate_defining_image(proj).ok)

    if args.dump and form is not None:
        dump_rep(rep, form, args.dump)
        record(f"matrices written to {args.dump}", True)

    ok = all(c["ok"] for c in checks)
    if args.json:
        print(json.dumps({"ok": ok, "checks": checks}))
    else:
        for c in checks:
            flag = "PASS" if c["ok"] else "FAIL"
            detail = f"  ({c['detail']})" if c["detail"] and not c["ok"] else ""
            print(f"{flag}  {c['name']}{detail}")
    return EXIT_OK if ok else EXIT_INTERNAL


def _cmd_reproduce_paper(args):
    rs_big = build_root_system("C28")
    rs_small = build_root_system("E7")
    proj = derive_projection()
    doc = {"branchings": [], "tensor_products": [], "dimensions": [],
           "combination_counts": []}
    mismatches = []

    for algebra, hw, want in load_dimension_fixture():
        got = weyl_dimension(build_root_system(algebra), hw)
        doc["dimensions"].append({"algebra": str(algebra),
                                  "hw": format_weight_spec(hw),
                                  "dim": got, "reference": want})
        if got != want:
            mismatches.append(f"dim {algebra} {format_weight_spec(hw)}: "
                              f"{got} != {want}")

    for hw, want in load_branching_fixture():
        result = branch(proj, hw)
        got = result.constituents
        doc["branchings"].append({
            "highest_weight": format_weight_spec(hw),
            "dimension": result.dimension,
            "constituents": _constituent_doc(rs_small, got),
            "matches_reference": sorted(got) == sorted(want)})
        if sorted(got) != sorted(want):
            mismatches.append(f"branch {format_weight_spec(hw)}")

    for factors, want in load_tensor_fixture():
        got = tensor_fold(rs_big, factors)
        label = " x ".join(format_weight_spec(f) for f in factors)
        doc["tensor_products"].append({
            "factors": [format_weight_spec(f) for f in factors],
            "constituents": _constituent_doc(rs_big, got),
            "matches_reference": sorted(got) == sorted(want)})
        if sorted(got) != sorted(want):
            mismatches.append(f"tensor {label}")

    for target, parts, want in load_frobenius_fixture():
        got = count_partitions(target, list(parts))
        doc["combination_counts"].append({"target": target, "parts": list(parts),
                                          "count": got, "reference": want})
        if got != want:
            mismatches.append(f"partitions {target} over {parts}: {got} != {want}")

    doc["ok"] = not mismatches
    if args.json:
        print(json.dumps(doc))
    else:
        print(f"dimensions checked: {len(doc['dimensions'])}")
        for row in doc["branchings"]:
            flag = "ok" if row["matches_reference"] else "MISMATCH"
            parts = " + ".join(
                (f"{c['mult']}({c['dim']})" if c["mult"] != 1 else f"({c['dim']})")
                for c in row["constituents"])
            print(f"branch {row['highest_weight']:<12} dim {row['dimension']:<8}"
                  f" -> {parts}  [{flag}]")
        for row in doc["tensor_products"]:
            flag = "ok" if row["matches_reference"] else "MISMATCH"
            label = " x ".join(row["factors"])
            print(f"tensor {label}  [{flag}]")
        for row in doc["combination_counts"]:
            flag = "ok" if row["count"] == row["reference"] else "MISMATCH"
            print(f"combinations of {row['target']}: {row['count']}  [{flag}]")
        verdict = "all tables reproduced" if doc["ok"] else "MISMATCHES FOUND"
        print(verdict)
    return EXIT_OK if doc["ok"] else EXIT_MISMATCH


_COMMANDS = {
    "dim": _cmd_dim,
    "branch": _cmd_branch,
    "tensor": _cmd_tensor,
    "project-matrix": _cmd_project_matrix,
    "partitions": _cmd_partitions,
    "verify-embedding": _cmd_verify_embedding,
    "reproduce-paper": _cmd_reproduce_paper,
}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedAlgebraError, NonDominantError, WeightSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LieError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
