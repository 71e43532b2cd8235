"""
Family registry: resolves basis strings such as ``jacobi:alpha,1/2`` to a FamilySpec.
"""

import importlib
from typing import Dict, List, Optional, Sequence, Tuple
import logging

from ..exceptions import FamilyError, ParseError
from ..utils.constants import FamilyName
from .base import ClassicalFamily, FamilySpec

logger = logging.getLogger(__name__)


def parse_basis(text: str) -> Tuple[str, List[str]]:
    """
    Split ``name`` or ``name:arg1,arg2`` into the family name and its arguments.

    Raises:
        ParseError: On an empty name or an empty argument
    """
    name, _, rest = text.strip().partition(":")
    name = name.strip().lower()
    if not name:
        raise ParseError(f"Empty basis name in {text!r}", text=text)
    if not rest.strip():
        return name, []
    arguments = [a.strip() for a in rest.split(",")]
    if any(not a for a in arguments):
        raise ParseError(f"Empty parameter in basis {text!r}", text=text)
    return name, arguments


class FamilyRegistry:
    """Discovers and caches the classical family modules of this package."""

    def __init__(self, package: str = __package__):
        self.package = package
        self._families_cache: Dict[str, ClassicalFamily] = {}

    def discover_families(self, force_reload: bool = False) -> Dict[str, ClassicalFamily]:
        """
        Load every family module.

        Returns:
            Dictionary mapping family names to instances
        """
        if not force_reload and self._families_cache:
            return self._families_cache

        families: Dict[str, ClassicalFamily] = {}
        for member in FamilyName:
            family = self._load_family(member.value)
            if family is not None:
                families[family.name] = family
                logger.debug(f"Loaded family: {family.name}")

        self._families_cache = families
        return families

    def _load_family(self, name: str) -> Optional[ClassicalFamily]:
        module_name = f"{self.package}.{name}"
        try:
            module = importlib.import_module(module_name)
        except ImportError as e:
            logger.warning(f"Failed to import family module {module_name}: {e}")
            return None

        family_class = getattr(module, "Family", None)
        if family_class is None or not issubclass(family_class, ClassicalFamily):
            logger.warning(f"No ClassicalFamily subclass named Family in {module_name}")
            return None
        return family_class()

    def get_family(self, name: str) -> ClassicalFamily:
        """
        Raises:
            FamilyError: If the family is unknown
        """
        families = self.discover_families()
        family = families.get(name.lower())
        if family is None:
            raise FamilyError(
                f"Unknown family {name!r}; available: {', '.join(sorted(families))}",
                family=name,
                subtype="unknown_family",
            )
        return family

    def list_families(self) -> List[str]:
        return sorted(self.discover_families())

    def load(self, basis: str, extra_params: Sequence[str] = ()) -> FamilySpec:
        """
        Build the FamilySpec for a basis string.

        Args:
            basis: ``name`` or ``name:arg1,...``; numerals specialize, identifiers stay symbolic
            extra_params: Symbols of the differential operator that must share the domain
        """
        name, arguments = parse_basis(basis)
        family = self.get_family(name)
        return family.build(arguments, extra_params, label=basis.strip())

    def clear_cache(self) -> None:
        self._families_cache.clear()


_default_registry = FamilyRegistry()


def family(basis: str, extra_params: Sequence[str] = ()) -> FamilySpec:
    """Build a FamilySpec with the shared registry."""
    return _default_registry.load(basis, extra_params)


def list_families() -> List[str]:
    return _default_registry.list_families()


def describe_families() -> List[Dict[str, str]]:
    return [_default_registry.get_family(name).describe() for name in list_families()]
