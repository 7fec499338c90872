"""Decomposition of the automorphism group of a uniform graph"""
import logging
from typing import List, Optional

import networkx as nx
from networkx.utils import UnionFind

from groups.constructions import same_group
from groups.permutation import Permutation
from groups.perm_group import PermutationGroup
from models.graph_models import Graph
from models.symmetry_models import UniformDecomposition
from symmetry.automorphisms import automorphism_group
from symmetry.orbits import orbit_structure, uniformity

logger = logging.getLogger(__name__)


def restrict_to_orbit(G: PermutationGroup, orbit: List[int]) -> PermutationGroup:
    index = {v: i for i, v in enumerate(orbit)}
    gens = [Permutation([index[g.images[v]] for v in orbit], check=False)
            for g in G.nontrivial_generators()]
    return PermutationGroup(gens, degree=len(orbit))


def _components(count: int, links: List[tuple]) -> List[List[int]]:
    blocks = UnionFind(range(count))
    for a, b in links:
        blocks.union(a, b)
    return sorted(sorted(block) for block in blocks.to_sets())


def _matched_rows(orbits: List[List[int]], essential: nx.Graph) -> Optional[List[List[int]]]:
    """Rows of corresponding vertices, one per vertex of the first orbit.

    None unless essential-edge reachability matches each orbit of the
    component one-to-one with the first.
    """
    where = {v: k for k, orbit in enumerate(orbits) for v in orbit}
    rows = []
    used = [set() for _ in orbits]
    for v in orbits[0]:
        reached = nx.node_connected_component(essential, v) if v in essential else {v}
        row = []
        for k in range(len(orbits)):
            hits = [w for w in reached if where.get(w) == k]
            if len(hits) != 1 or hits[0] in used[k]:
                return None
            used[k].add(hits[0])
            row.append(hits[0])
        rows.append(row)
    return rows


def predicted_group(degree: int, rows_by_component: List[List[List[int]]]) -> PermutationGroup:
    """S_n acting simultaneously on the matched rows of every component"""
    gens = []
    for rows in rows_by_component:
        n = len(rows)
        for shift in ({0: 1, 1: 0}, {t: (t + 1) % n for t in range(n)}):
            images = list(range(degree))
            for t, row in enumerate(rows):
                target = rows[shift.get(t, t)]
                for v, w in zip(row, target):
                    images[v] = w
            gens.append(Permutation(images, check=False))
    return PermutationGroup(gens, degree=degree)


def uniform_decomposition(graph: Graph, aut: Optional[PermutationGroup] = None,
                          exempt_fixed_edges: bool = True) -> UniformDecomposition:
    """Split Aut of an n-uniform graph into parallel multiples of S_n plus fixed points.

    Fixed points are dropped, the nontrivial orbits are grouped by the
    essential edges (those joining two different nontrivial orbits), and the
    group predicted from that grouping is compared with the computed one.
    """
    aut = aut or automorphism_group(graph)
    report = uniformity(graph, aut)
    n = report.essential if exempt_fixed_edges else report.strict
    if n is None:
        return UniformDecomposition(applicable=False, reason="graph is not n-uniform",
                                    group_order=aut.order())
    structure = orbit_structure(graph, aut)
    orbits = structure.nontrivial_orbits
    for orbit in orbits:
        if not restrict_to_orbit(aut, orbit).is_2_transitive():
            return UniformDecomposition(applicable=False, n=n, group_order=aut.order(),
                                        reason=f"not 2-transitive on orbit starting at {orbit[0]}")

    where = {v: k for k, orbit in enumerate(orbits) for v in orbit}
    essential = nx.Graph()
    links = []
    for u, v in graph.edges:
        if u in where and v in where and where[u] != where[v]:
            essential.add_edge(u, v)
            links.append((where[u], where[v]))

    components = _components(len(orbits), links)
    rows_by_component = []
    for component in components:
        rows = _matched_rows([orbits[k] for k in component], essential)
        if rows is None:
            return UniformDecomposition(applicable=False, n=n, group_order=aut.order(),
                                        reason="essential edges do not match orbits one-to-one")
        rows_by_component.append(rows)

    predicted = predicted_group(graph.vertex_count, rows_by_component)
    matches = same_group(aut, predicted)
    if not matches:
        logger.warning("Computed group (order %d) differs from predicted (order %d)",
                       aut.order(), predicted.order())
    return UniformDecomposition(
        applicable=True, n=n,
        multiplicities=sorted((len(c) for c in components), reverse=True),
        fixed_count=len(structure.fixed_vertices),
        components=[[orbits[k] for k in c] for c in components],
        bijections_ok=True, matches_prediction=matches, group_order=aut.order(),
    )
