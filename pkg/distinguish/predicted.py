"""Distinguishing numbers predicted by the classification of simple permutation groups"""
from typing import Optional

from groups.catalog import NamedGroupCatalog, alternating_distinguishing_number, default_catalog
from models.group_models import CatalogEntry

FAMILY_VALUES = {"exceptional4": 4, "exceptional3": 3, "generic": 2, "trivial": 1}


def predicted_distinguishing_number(family: str, n: Optional[int] = None, k: int = 1) -> int:
    """Predicted D for a classified group.

    ``alternating`` is A_n^(k) with n >= 5: the least d with d^k >= n-1.
    ``exceptional4`` covers L3(2), M11 and M12; ``exceptional3`` the groups
    with D = 3; every other simple group without fixed points is ``generic``.
    ``symmetric`` (S_n, D = n) is accepted for comparison runs.
    """
    if family == "alternating":
        if n is None or n < 5:
            raise ValueError("alternating prediction needs n >= 5")
        return alternating_distinguishing_number(n, k)
    if family == "symmetric":
        if n is None:
            raise ValueError("symmetric prediction needs n")
        return n
    if family in FAMILY_VALUES:
        return FAMILY_VALUES[family]
    raise ValueError(f"unclassified group family: {family!r}")


def predicted_for_entry(entry: CatalogEntry) -> int:
    return predicted_distinguishing_number(entry.family or "generic",
                                           entry.params.get("n"), entry.params.get("k", 1))


def predicted_for_name(name: str, catalog: Optional[NamedGroupCatalog] = None) -> int:
    catalog = catalog or default_catalog()
    return predicted_for_entry(catalog.entry(name))
