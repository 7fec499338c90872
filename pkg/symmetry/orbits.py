"""Vertex orbits, edge-orbits and orbitals"""
import itertools
from collections import deque
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from groups.perm_group import PermutationGroup
from models.graph_models import Graph
from models.symmetry_models import OrbitStructure, UniformityReport
from symmetry.automorphisms import automorphism_group

Pair = Tuple[int, int]


def pair_orbits(G: PermutationGroup, pairs: Iterable[Pair]) -> List[List[Pair]]:
    """Orbits of G on a G-invariant set of unordered pairs"""
    gens = [g.images for g in G.nontrivial_generators()]
    remaining = sorted(set(pairs))
    seen: Set[Pair] = set()
    orbits = []
    for start in remaining:
        if start in seen:
            continue
        orbit = {start}
        queue = deque([start])
        while queue:
            u, v = queue.popleft()
            for g in gens:
                a, b = g[u], g[v]
                image = (min(a, b), max(a, b))
                if image not in orbit:
                    orbit.add(image)
                    queue.append(image)
        seen |= orbit
        orbits.append(sorted(orbit))
    return orbits


def group_orbit_structure(G: PermutationGroup, edges: Sequence[Pair] = ()) -> OrbitStructure:
    vertex_orbits = G.orbits()
    all_pairs = itertools.combinations(range(G.degree), 2)
    return OrbitStructure(
        vertex_orbits=vertex_orbits,
        edge_orbits=pair_orbits(G, edges),
        orbitals=pair_orbits(G, all_pairs),
        fixed_vertices=[o[0] for o in vertex_orbits if len(o) == 1],
    )


def orbit_structure(graph: Graph, aut: Optional[PermutationGroup] = None) -> OrbitStructure:
    aut = aut or automorphism_group(graph)
    return group_orbit_structure(aut, graph.edges)


def _uniform_size(structure: OrbitStructure, exempt: Set[Pair]) -> Optional[int]:
    sizes = {len(o) for o in structure.nontrivial_orbits}
    if len(sizes) != 1:
        return None
    n = sizes.pop()
    if n <= 2:
        return None
    for orbit in structure.edge_orbits:
        if len(orbit) == 1 and orbit[0] in exempt:
            continue
        if len(orbit) != n:
            return None
    return n


def uniformity(graph: Graph, aut: Optional[PermutationGroup] = None) -> UniformityReport:
    structure = orbit_structure(graph, aut)
    fixed = set(structure.fixed_vertices)
    fixed_edges = [e for e in graph.edges if e[0] in fixed and e[1] in fixed]
    return UniformityReport(
        strict=_uniform_size(structure, set()),
        essential=_uniform_size(structure, set(fixed_edges)),
        fixed_edges=fixed_edges,
    )


def is_n_uniform(graph: Graph, exempt_fixed_edges: bool = False,
                 aut: Optional[PermutationGroup] = None) -> Optional[int]:
    """n when every nontrivial orbit and every edge-orbit has size n > 2, else None.

    With ``exempt_fixed_edges`` the edges joining two fixed vertices are
    ignored.
    """
    report = uniformity(graph, aut)
    return report.essential if exempt_fixed_edges else report.strict
