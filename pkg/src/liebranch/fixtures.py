"""Loaders for the versioned reference fixtures shipped under ``data/``.

The fixtures are plain text so they can be diffed and audited: the
reference projection matrix, the reference branching and tensor tables,
and the reference dimension list.  Formats are documented in the file
headers; parsing here is strict so silent fixture corruption cannot pass.
"""

from __future__ import annotations

from importlib.resources import files

from .rootsystem import AlgebraType
from .syntax import parse_weight_spec

_DATA = files("liebranch.data")


def _data_lines(name):
    text = (_DATA / name).read_text(encoding="ascii")
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


def load_projection_fixture():
    """The reference 7 x 28 projection matrix, as a tuple of int rows."""
    rows = [tuple(int(v) for v in line.split()) for line in _data_lines("projection_e7_c28.txt")]
    if len(rows) != 7 or any(len(r) != 28 for r in rows):
        raise ValueError("projection fixture must be 7 rows of 28 integers")
    return tuple(rows)


def load_dimension_fixture():
    """List of (AlgebraType, highest weight, dimension) reference triples."""
    out = []
    for line in _data_lines("dimensions.txt"):
        alg, hw, dim = line.split()
        algebra = AlgebraType.parse(alg)
        out.append((algebra, parse_weight_spec(hw, algebra.rank), int(dim)))
    if not out:
        raise ValueError("dimension fixture is empty")
    return out


def _parse_constituents(text, rank):
    out = []
    for item in text.split():
        if ":" in item:
            hw, mult = item.split(":")
            mult = int(mult)
        else:
            hw, mult = item, 1
        if mult < 1:
            raise ValueError(f"bad multiplicity in fixture item {item!r}")
        out.append((parse_weight_spec(hw, rank), mult))
    return tuple(out)


def load_branching_fixture():
    """Reference branchings: list of (big hw, ((small hw, mult), ...))."""
    out = []
    for line in _data_lines("branching_c28_e7.txt"):
        left, right = line.split("|")
        out.append((parse_weight_spec(left.strip(), 28), _parse_constituents(right, 7)))
    if len(out) != 8:
        raise ValueError("branching fixture must list exactly 8 rows")
    return out


def load_tensor_fixture():
    """Reference products: list of ((factor hws, ...), ((hw, mult), ...))."""
    out = []
    for line in _data_lines("tensor_products_c28.txt"):
        left, right = line.split("|")
        factors = tuple(parse_weight_spec(f.strip(), 28) for f in left.split(" x "))
        out.append((factors, _parse_constituents(right, 28)))
    if len(out) != 4:
        raise ValueError("tensor fixture must list exactly 4 products")
    return out


def load_frobenius_fixture():
    """Reference combination counts: list of (target, parts tuple, count)."""
    out = []
    for line in _data_lines("frobenius.txt"):
        target, parts, count = line.split("|")
        out.append((int(target), tuple(int(p) for p in parts.split(",")), int(count)))
    if not out:
        raise ValueError("frobenius fixture is empty")
    return out
