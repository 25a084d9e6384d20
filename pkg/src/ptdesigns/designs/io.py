"""Reader and writer for the ``.dsg`` design format.

::

    # comment
    label AG(3,2)
    points 8
    expect k 4
    expect lambda 3
    block 0 1 2 3
"""

from __future__ import annotations

import os

from ..errors import FormatError
from .design import Design, parameters


def parse_dsg(text: str, path=None) -> Design:
    v = None
    label = ""
    expects: dict[str, tuple[int, int]] = {}
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if key == "points":
                if v is not None:
                    raise FormatError("duplicate points line", path, lineno)
                v = int(rest)
            elif key == "label":
                label = rest
            elif key == "expect":
                what, _, val = rest.partition(" ")
                if what not in ("k", "lambda"):
                    raise FormatError(f"unknown expectation {what!r}", path, lineno)
                expects[what] = (int(val), lineno)
            elif key == "block":
                blocks.append((lineno, [int(t) for t in rest.split()]))
            else:
                raise FormatError(f"unknown directive {key!r}", path, lineno)
        except FormatError:
            raise
        except ValueError:
            raise FormatError(f"malformed {key} line", path, lineno) from None
    if v is None:
        raise FormatError("missing 'points V' header", path)
    for lineno, blk in blocks:
        if not blk:
            raise FormatError("empty block", path, lineno)
        if any(x < 0 or x >= v for x in blk):
            raise FormatError(f"block point outside 0..{v - 1}", path, lineno)
        if len(set(blk)) != len(blk):
            raise FormatError("block repeats a point", path, lineno)
    design = Design(v, [b for _, b in blocks], label)
    if expects:
        if not blocks:
            raise FormatError("expectations given for a design with no blocks", path)
        p = parameters(design)
        if "k" in expects and p.k != expects["k"][0]:
            raise FormatError(f"block size {p.k} != expected k {expects['k'][0]}", path, expects["k"][1])
        if "lambda" in expects and p.lam != expects["lambda"][0]:
            raise FormatError(f"lambda {p.lam} != expected lambda {expects['lambda'][0]}", path,
                              expects["lambda"][1])
    return design


def load_dsg(path) -> Design:
    with open(path) as fh:
        return parse_dsg(fh.read(), os.fspath(path))


def format_dsg(design: Design, expect: bool = False, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    if design.label:
        lines.append(f"label {design.label}")
    lines.append(f"points {design.v}")
    if expect:
        p = parameters(design)
        if p.k is not None:
            lines.append(f"expect k {p.k}")
        if p.lam is not None:
            lines.append(f"expect lambda {p.lam}")
    lines += ["block " + " ".join(map(str, b)) for b in design.blocks]
    return "\n".join(lines) + "\n"


def save_dsg(design: Design, path, expect: bool = True) -> None:
    with open(path, "w") as fh:
        fh.write(format_dsg(design, expect))
