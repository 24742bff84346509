"""Compact text syntax for Dynkin-label vectors.

A weight is written as comma-separated labels with run-length shorthand:
``1,0^27`` means a 1 followed by twenty-seven 0s, ``0^6,1`` six 0s then a
1.  Exponents apply to the single label before them.  The same syntax is
used by the command line, the data fixtures, and all human-readable
output.
"""

from __future__ import annotations

import re

from .errors import LieError

_TOKEN = re.compile(r"\s*(-?\d+)\s*(?:\^\s*(\d+)\s*)?$")


class WeightSyntaxError(LieError, ValueError):
    """A weight string failed to parse or had the wrong rank."""


def parse_weight_spec(text, rank=None):
    """Parse ``"1,0^27"`` style text into a tuple of integer labels."""
    labels = []
    for token in str(text).split(","):
        m = _TOKEN.match(token)
        if not m:
            raise WeightSyntaxError(f"bad weight token {token!r} in {text!r}")
        value = int(m.group(1))
        count = int(m.group(2)) if m.group(2) else 1
        if m.group(2) is not None and count == 0:
            raise WeightSyntaxError(f"zero repeat in {text!r}")
        labels.extend([value] * count)
    if rank is not None and len(labels) != rank:
        raise WeightSyntaxError(
            f"weight {text!r} has {len(labels)} labels, expected {rank}")
    return tuple(labels)


def format_weight_spec(labels):
    """Run-length form of a label tuple; inverse of :func:`parse_weight_spec`."""
    out = []
    i = 0
    labels = list(labels)
    while i < len(labels):
        j = i
        while j < len(labels) and labels[j] == labels[i]:
            j += 1
        n = j - i
        out.append(f"{labels[i]}^{n}" if n > 1 else f"{labels[i]}")
        i = j
    return ",".join(out)
