"""Reader and writer for the line-oriented ``.grp`` group format.

::

    # comment
    label M11 on 12 points
    degree 12
    expect-order 7920
    perm 1 2 0 3 ...

Images are 0-based. When ``expect-order`` is present the loader computes
the order with a stabilizer chain and refuses the file on mismatch.
"""

from __future__ import annotations

import os

from ..errors import FormatError
from .group import GeneratedGroup
from .perm import Permutation


def parse_grp(text: str, path=None) -> GeneratedGroup:
    degree = None
    label = ""
    expect = None
    gens: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "degree":
            if degree is not None:
                raise FormatError("duplicate degree line", path, lineno)
            try:
                degree = int(rest)
            except ValueError:
                raise FormatError(f"bad degree {rest!r}", path, lineno) from None
            if degree < 0:
                raise FormatError("negative degree", path, lineno)
        elif key == "label":
            label = rest
        elif key == "expect-order":
            try:
                expect = int(rest)
            except ValueError:
                raise FormatError(f"bad expect-order {rest!r}", path, lineno) from None
        elif key == "perm":
            try:
                gens.append((lineno, [int(t) for t in rest.split()]))
            except ValueError:
                raise FormatError("non-integer image in perm line", path, lineno) from None
        else:
            raise FormatError(f"unknown directive {key!r}", path, lineno)
    if degree is None:
        raise FormatError("missing 'degree N' header", path)
    perms = []
    for lineno, images in gens:
        if len(images) != degree:
            raise FormatError(f"perm has {len(images)} images, expected {degree}", path, lineno)
        try:
            perms.append(Permutation(images))
        except ValueError as exc:
            raise FormatError(str(exc), path, lineno) from None
    group = GeneratedGroup(degree, perms, label)
    if expect is not None and group.order() != expect:
        raise FormatError(f"group order {group.order()} != expect-order {expect}", path)
    return group


def load_grp(path) -> GeneratedGroup:
    with open(path) as fh:
        return parse_grp(fh.read(), os.fspath(path))


def format_grp(group: GeneratedGroup, expect_order: bool = True, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    if group.label:
        lines.append(f"label {group.label}")
    lines.append(f"degree {group.degree}")
    if expect_order:
        lines.append(f"expect-order {group.order()}")
    for g in group.generators:
        lines.append("perm " + " ".join(map(str, g.images)))
    return "\n".join(lines) + "\n"


def save_grp(group: GeneratedGroup, path, **kw) -> None:
    with open(path, "w") as fh:
        fh.write(format_grp(group, **kw))
