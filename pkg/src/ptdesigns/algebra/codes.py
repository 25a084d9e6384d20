"""Linear codes and the bundled Golay codes.

``.code`` files are line oriented::

    # provenance comments
    field 2 1
    length 24
    dim 12
    row 100000000000110001110101
    ...

Each ``row`` is one generator-matrix row written as n base-p digits
(separated by spaces when p > 10 would need it; digits may also be packed).
"""

from __future__ import annotations

import os
from collections import Counter
from functools import cached_property, lru_cache

import numpy as np

from .._data import data_path
from ..errors import FormatError
from .field import GF, FiniteField
from .linear import all_vectors, rank, vecs_times_matrix


class LinearCode:
    """A linear [n, k] code given by a full-rank generator matrix."""

    def __init__(self, field: FiniteField, generator, label: str = ""):
        G = np.asarray(generator, dtype=np.int64)
        if G.ndim != 2:
            raise ValueError("generator matrix must be two-dimensional")
        if rank(field, G) != G.shape[0]:
            raise ValueError("generator matrix is not of full rank")
        self.field = field
        self.generator = G
        self.label = label

    @property
    def length(self) -> int:
        return self.generator.shape[1]

    @property
    def dimension(self) -> int:
        return self.generator.shape[0]

    @cached_property
    def codewords(self) -> np.ndarray:
        msgs = all_vectors(self.field, self.dimension)
        words = vecs_times_matrix(self.field, msgs, self.generator)
        words.setflags(write=False)
        return words

    @cached_property
    def weight_enumerator(self) -> dict[int, int]:
        w = (self.codewords != 0).sum(axis=1)
        return dict(sorted(Counter(int(x) for x in w).items()))

    @property
    def minimum_weight(self) -> int:
        return min(w for w in self.weight_enumerator if w > 0)

    def words_of_weight(self, w: int) -> np.ndarray:
        return self.codewords[(self.codewords != 0).sum(axis=1) == w]

    def supports_of_weight(self, w: int) -> list[tuple[int, ...]]:
        return sorted(tuple(int(i) for i in np.flatnonzero(row)) for row in self.words_of_weight(w))

    def __repr__(self) -> str:
        return f"<LinearCode {self.label!r} [{self.length},{self.dimension}] over {self.field}>"


def cyclic_generator(field: FiniteField, n: int, poly) -> np.ndarray:
    """Generator matrix of the cyclic code of length n with generator polynomial ``poly``.

    ``poly`` lists coefficients from the constant term upward; row i is the
    coefficient vector of x^i g(x).
    """
    deg = len(poly) - 1
    k = n - deg
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i:i + deg + 1] = poly
    return G % field.p


def extend_by_check(field: FiniteField, G: np.ndarray) -> np.ndarray:
    """Append a coordinate making every row (hence every word) sum to zero."""
    s = G.sum(axis=1) % field.p
    return np.concatenate([G, ((-s) % field.p)[:, None]], axis=1)


def parse_code(text: str, path=None) -> tuple[LinearCode, dict]:
    header: dict = {}
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if key == "field":
                p, e = (int(t) for t in rest.split())
                header["field"] = (p, e)
            elif key in ("length", "dim"):
                header[key] = int(rest)
            elif key == "label":
                header["label"] = rest
            elif key == "row":
                toks = rest.split()
                digits = [int(c) for c in toks[0]] if len(toks) == 1 else [int(t) for t in toks]
                rows.append((lineno, digits))
            else:
                raise FormatError(f"unknown directive {key!r}", path, lineno)
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"malformed {key} line", path, lineno) from None
    for key in ("field", "length", "dim"):
        if key not in header:
            raise FormatError(f"missing '{key}' header", path)
    n = header["length"]
    for lineno, digits in rows:
        if len(digits) != n:
            raise FormatError(f"row has {len(digits)} entries, expected {n}", path, lineno)
    if len(rows) != header["dim"]:
        raise FormatError(f"{len(rows)} rows, expected dim {header['dim']}", path)
    F = GF(*header["field"])
    G = np.asarray([d for _, d in rows], dtype=np.int64)
    if G.size and G.max() >= F.q:
        raise FormatError("entry outside the field", path)
    try:
        code = LinearCode(F, G, header.get("label", ""))
    except ValueError as exc:
        raise FormatError(str(exc), path) from None
    return code, header


def format_code(code: LinearCode, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    if code.label:
        lines.append(f"label {code.label}")
    lines += [f"field {code.field.p} {code.field.e}", f"length {code.length}", f"dim {code.dimension}"]
    sep = "" if code.field.q <= 10 else " "
    lines += ["row " + sep.join(str(int(x)) for x in row) for row in code.generator]
    return "\n".join(lines) + "\n"


def load_code(path) -> LinearCode:
    with open(path) as fh:
        return parse_code(fh.read(), os.fspath(path))[0]


# load-time invariants: (length, dimension, minimum weight, {weight: count})
GOLAY_CHECKS = {
    "binary": (24, 12, 8, {8: 759}),
    "ternary": (12, 6, 6, {12: 24}),
}


@lru_cache(maxsize=None)
def golay_code(kind: str = "binary") -> LinearCode:
    """The extended binary [24,12,8] or ternary [12,6,6] Golay code from the data files."""
    if kind not in GOLAY_CHECKS:
        raise ValueError(f"kind must be 'binary' or 'ternary', not {kind!r}")
    path = data_path(f"golay{24 if kind == 'binary' else 12}.code")
    code = load_code(path)
    n, k, d, counts = GOLAY_CHECKS[kind]
    wt = code.weight_enumerator
    bad = (code.length != n or code.dimension != k or code.minimum_weight != d
           or any(wt.get(w, 0) != c for w, c in counts.items()))
    if bad:
        raise FormatError(f"{kind} Golay code fails its invariants (weights {wt})", os.fspath(path))
    return code
