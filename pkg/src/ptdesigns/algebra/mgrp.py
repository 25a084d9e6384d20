"""Reader and writer for ``.mgrp`` matrix-group files.

::

    # comment
    label Alt(7) < GL(4,2)
    field 2 1
    dim 4
    expect-order 2520
    matrix 1000 0100 0010 0001

A ``matrix`` line holds one generator: ``dim`` rows of packed digits, or
``dim * dim`` space-separated entries in row-major order when q > 10. The
order is checked on the action on vectors.
"""

from __future__ import annotations

import os

from ..errors import FormatError
from .field import GF
from .linear import FqMatrix, MatrixGroup


def parse_mgrp(text: str, path=None) -> MatrixGroup:
    field = dim = expect = None
    label = ""
    mats = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if key == "field":
                p, e = (int(t) for t in rest.split())
                field = GF(p, e)
            elif key == "dim":
                dim = int(rest)
            elif key == "label":
                label = rest
            elif key == "expect-order":
                expect = int(rest)
            elif key == "matrix":
                mats.append((lineno, rest.split()))
            else:
                raise FormatError(f"unknown directive {key!r}", path, lineno)
        except FormatError:
            raise
        except ValueError as exc:
            raise FormatError(f"malformed {key} line: {exc}", path, lineno) from None
    if field is None or dim is None:
        raise FormatError("missing 'field' or 'dim' header", path)
    gens = []
    for lineno, toks in mats:
        if len(toks) == dim:
            rows = [[int(c) for c in t] for t in toks]
        elif len(toks) == dim * dim:
            rows = [[int(t) for t in toks[i * dim:(i + 1) * dim]] for i in range(dim)]
        else:
            raise FormatError(f"matrix needs {dim} packed rows or {dim * dim} entries", path, lineno)
        if any(len(r) != dim for r in rows):
            raise FormatError(f"matrix row length differs from dim {dim}", path, lineno)
        try:
            A = FqMatrix(field, rows)
        except ValueError as exc:
            raise FormatError(str(exc), path, lineno) from None
        if not A.is_invertible():
            raise FormatError("matrix is singular", path, lineno)
        gens.append(A)
    group = MatrixGroup(field, dim, gens, label)
    if expect is not None and group.order() != expect:
        raise FormatError(f"group order {group.order()} != expect-order {expect}", path)
    return group


def load_mgrp(path) -> MatrixGroup:
    with open(path) as fh:
        return parse_mgrp(fh.read(), os.fspath(path))


def format_mgrp(group: MatrixGroup, expect_order: bool = True, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    if group.label:
        lines.append(f"label {group.label}")
    lines += [f"field {group.field.p} {group.field.e}", f"dim {group.dim}"]
    if expect_order:
        lines.append(f"expect-order {group.order()}")
    packed = group.field.q <= 10
    for A in group.generators:
        if packed:
            lines.append("matrix " + " ".join("".join(str(int(x)) for x in row) for row in A.entries))
        else:
            lines.append("matrix " + " ".join(str(int(x)) for x in A.entries.ravel()))
    return "\n".join(lines) + "\n"
