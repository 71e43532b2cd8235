"""
Classical orthogonal families and their recurrence data.
"""

from .base import ClassicalFamily, FamilySpec
from .registry import FamilyRegistry, describe_families, family, list_families, parse_basis

__all__ = [
    "ClassicalFamily",
    "FamilyRegistry",
    "FamilySpec",
    "describe_families",
    "family",
    "list_families",
    "parse_basis",
]
