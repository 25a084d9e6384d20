"""Loaders for the bundled sporadic and small group data."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .._data import data_path
from ..algebra import MatrixGroup, load_mgrp
from ..errors import FormatError
from ..permgroup import GeneratedGroup, is_k_transitive, load_grp


@dataclass(frozen=True)
class SporadicGroupData:
    label: str
    degree: int
    group: GeneratedGroup
    expected_order: int
    transitivity: int
    provenance: str

    @property
    def generators(self):
        return self.group.generators


# name -> (file, degree, order, claimed transitivity degree)
REGISTRY = {
    "M11_12": ("m11_12.grp", 12, 7920, 3),
    "M11_11": ("m11_11.grp", 11, 7920, 4),
    "M24": ("m24.grp", 24, 244823040, 5),
    "PSL27_8": ("psl27_8.grp", 8, 168, 2),
    "HS176": ("hs176.grp", 176, 44352000, 2),
}


def _provenance(path) -> str:
    with open(path) as fh:
        return " ".join(line[1:].strip() for line in fh if line.startswith("#"))


@lru_cache(maxsize=None)
def load_sporadic(name: str) -> SporadicGroupData:
    """Load a registered group; order and transitivity degree are checked."""
    if name not in REGISTRY:
        raise KeyError(f"unknown group {name!r}; known: {sorted(REGISTRY)}")
    fname, degree, order, trans = REGISTRY[name]
    path = data_path(fname)
    group = load_grp(path)
    if group.degree != degree or group.order() != order:
        raise FormatError(f"{name}: degree {group.degree}, order {group.order()}; "
                          f"expected {degree}, {order}", str(path))
    if not is_k_transitive(group, trans):
        raise FormatError(f"{name}: not {trans}-transitive as claimed", str(path))
    return SporadicGroupData(group.label or name, degree, group, order, trans, _provenance(path))


def has_data(name: str) -> bool:
    return data_path(REGISTRY[name][0]).exists()


@lru_cache(maxsize=None)
def alt7_matrices() -> MatrixGroup:
    """Alt(7) < GL(4,2) from ``alt7_gl42.mgrp`` (order checked on load)."""
    G = load_mgrp(data_path("alt7_gl42.mgrp"))
    if G.order() != 2520:
        raise FormatError("alt7_gl42.mgrp does not generate a group of order 2520")
    return G
