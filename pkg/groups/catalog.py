"""Named permutation group catalog backed by config/group_catalog.yaml"""
import logging
import re
import threading
from math import factorial
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import yaml

from groups.constructions import coset_action, parallel_multiple, parallel_sum, trivial_group
from groups.families import (
    alternating_group, projective_line_group, projective_linear_group, symmetric_group,
)
from groups.permutation import Permutation
from groups.perm_group import PermutationGroup
from groups.subgroups import subgroup_to_group, subgroups_of_order
from models.group_models import CatalogEntry, IsomorphismSpec
from utils.errors import CatalogError, ConstructionError

logger = logging.getLogger(__name__)

CATALOG_PATH = Path(__file__).resolve().parent.parent / "config" / "group_catalog.yaml"

PARAMETRIC_RE = re.compile(r"^(A|S|I)_?(\d+)(?:\^\(?(\d+)\)?)?$")


def exceptional_automorphism_a6() -> Tuple[IsomorphismSpec, Permutation]:
    """The outer automorphism of A6 that is not induced by relabelling points.

    A6 has two classes of subgroups A5: point stabilizers and a class acting
    transitively on the six points. The action on the cosets of a transitive
    A5 is again A6 on six points, and the induced isomorphism swaps 3-cycles
    with products of two 3-cycles. Returns the isomorphism and a 3-cycle
    whose image has a different cycle type.
    """
    A6 = alternating_group(6)
    transitive = None
    for subgroup in subgroups_of_order(A6, 60).subgroups:
        H = subgroup_to_group(A6, subgroup)
        if H.is_transitive():
            transitive = H
            break
    if transitive is None:
        raise ConstructionError("no transitive A5 found inside A6")
    target = coset_action(A6, transitive)
    target.name = "A_6"
    spec = IsomorphismSpec(source=A6, target=target, generator_images=target.generators)
    witness = A6.generators[0]
    image = target.generators[0]
    if witness.cycle_type() == image.cycle_type():
        raise ConstructionError("coset action did not change the cycle type of a 3-cycle")
    logger.info("Exceptional automorphism: %s -> %s", witness.cycle_string(), image.cycle_string())
    return spec, witness


def alternating_distinguishing_number(n: int, k: int = 1) -> int:
    """Smallest d with d^k >= n - 1"""
    d = 1
    while d ** k < n - 1:
        d += 1
    return d


class NamedGroupCatalog:
    """Named groups from the data file plus parametric S_n, A_n, I_n and A_n^(k)"""

    def __init__(self, entries: Dict[str, CatalogEntry]):
        self.entries = entries
        self._groups: Dict[str, PermutationGroup] = {}
        self._lock = threading.RLock()

    @classmethod
    def load(cls, path: Optional[Path] = None) -> "NamedGroupCatalog":
        path = Path(path) if path else CATALOG_PATH
        with open(path, 'r') as f:
            data = yaml.safe_load(f) or {}
        entries = {}
        for raw in data.get("groups", []):
            entry = CatalogEntry(**raw)
            if entry.orbit_size is None:
                entry.orbit_size = entry.degree
            if entry.d_value is None:
                entry.d_value = {"exceptional4": 4, "exceptional3": 3}.get(entry.family, 2)
            entries[entry.name] = entry
        logger.info("Loaded %d catalog entries from %s", len(entries), path)
        return cls(entries)

    def names(self) -> List[str]:
        return list(self.entries)

    def entry(self, name: str) -> CatalogEntry:
        if name in self.entries:
            return self.entries[name]
        match = PARAMETRIC_RE.match(name)
        if not match:
            raise CatalogError(f"Unknown catalog group: {name}")
        kind, n, k = match.group(1), int(match.group(2)), int(match.group(3) or 1)
        if n < 1 or k < 1:
            raise CatalogError(f"Invalid parameters in catalog name: {name}")
        if kind == "S":
            order = factorial(n)
            return CatalogEntry(name=name, degree=n * k, order=order, construction="symmetric",
                                params={"n": n, "k": k}, simple=n == 2, family="symmetric",
                                d_value=n, orbit_size=n)
        if kind == "A":
            order = factorial(n) // 2 if n >= 2 else 1
            simple = n >= 5 or n == 3
            return CatalogEntry(name=name, degree=n * k, order=order, construction="alternating",
                                params={"n": n, "k": k}, simple=simple, family="alternating",
                                d_value=alternating_distinguishing_number(n, k) if n >= 5 else None,
                                orbit_size=n)
        return CatalogEntry(name=name, degree=n, order=1, construction="trivial",
                            params={"n": n}, simple=False, family="trivial", d_value=1, orbit_size=1)

    def group(self, name: str) -> PermutationGroup:
        """Build (once) the group for ``name``"""
        with self._lock:
            if name not in self._groups:
                self._groups[name] = self._build(self.entry(name))
            return self._groups[name]

    def _build(self, entry: CatalogEntry) -> PermutationGroup:
        kind, params = entry.construction, entry.params
        if kind in ("symmetric", "alternating"):
            family = symmetric_group if kind == "symmetric" else alternating_group
            G = family(params["n"])
            k = params.get("k", 1)
            if k > 1:
                G = parallel_multiple(G, k)
        elif kind == "trivial":
            G = trivial_group(params["n"])
        elif kind == "projective_line":
            G = projective_line_group(params["q"])
        elif kind == "projective_linear":
            G = projective_linear_group(params["n"], params["p"])
        elif kind == "generators":
            G = PermutationGroup([Permutation.parse(text, entry.degree) for text in entry.generators],
                                 degree=entry.degree)
        elif kind == "coset":
            base = self.group(entry.base)
            found = subgroups_of_order(base, params["subgroup_order"], first_only=True)
            if not found.subgroups:
                raise ConstructionError(f"{entry.base} has no subgroup of order {params['subgroup_order']}")
            G = coset_action(base, subgroup_to_group(base, found.subgroups[0]))
        elif kind == "exceptional_parallel":
            spec, _ = exceptional_automorphism_a6()
            G = parallel_sum(spec)
        else:
            raise CatalogError(f"Unknown construction {kind!r} for {entry.name}")
        G.name = entry.name
        if not entry.d_verified:
            G.unverified = True
        return G

    def verify_orders(self, max_order: Optional[int] = None) -> Dict[str, bool]:
        """Compare documented and computed orders; entries above ``max_order`` are skipped"""
        results = {}
        for name, entry in self.entries.items():
            if max_order is not None and entry.order > max_order:
                continue
            G = self.group(name)
            results[name] = G.order() == entry.order and G.degree == entry.degree
            if not results[name]:
                logger.error("Catalog mismatch for %s: order %d, degree %d", name, G.order(), G.degree)
        return results


_default_catalog: Optional[NamedGroupCatalog] = None
_default_lock = threading.Lock()


def default_catalog() -> NamedGroupCatalog:
    global _default_catalog
    with _default_lock:
        if _default_catalog is None:
            _default_catalog = NamedGroupCatalog.load()
        return _default_catalog
