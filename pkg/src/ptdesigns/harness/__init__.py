"""Command-line harness, catalog certification and the small-degree search."""

from .certify import CONSTRUCTION_ONLY, CertificateBundle, RowCertificate, certify_all, certify_row
from .search import SearchResult, bundled_small_groups, search_small, subset_orbits, table_match

__all__ = [
    "CONSTRUCTION_ONLY", "CertificateBundle", "RowCertificate", "SearchResult", "bundled_small_groups",
    "certify_all", "certify_row", "search_small", "subset_orbits", "table_match",
]
