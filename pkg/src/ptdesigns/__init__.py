"""Pairwise transitive 2-designs: constructions, groups and verification."""

__version__ = "0.1.0"
