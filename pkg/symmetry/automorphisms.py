"""Graph automorphism groups by partition refinement and individualization"""
import itertools
import logging
from collections import Counter, deque
from typing import List, Optional, Sequence, Set, Tuple

from graphs.graph import is_permutation_of_edges
from groups.permutation import Permutation
from groups.perm_group import PermutationGroup
from models.graph_models import Graph
from utils.errors import BudgetExceededError, ConstructionError

logger = logging.getLogger(__name__)

DEFAULT_MAX_VERTICES = 64
BRUTE_FORCE_MAX_VERTICES = 8

Partition = List[List[int]]
Invariant = Tuple[Tuple[int, ...], ...]


def refine(adj: Sequence[Set[int]], cells: Partition) -> Partition:
    """Coarsest equitable refinement of an ordered partition.

    A cell splits by the number of neighbours each vertex has in every cell;
    the parts replace the cell in the order of their signatures, so the
    result depends only on the ordered partition up to relabelling.
    """
    cells = [list(c) for c in cells]
    while True:
        cell_of = {}
        for i, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = i
        refined: Partition = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                signature = tuple(sorted(Counter(cell_of[w] for w in adj[v]).items()))
                groups.setdefault(signature, []).append(v)
            if len(groups) > 1:
                split = True
            for signature in sorted(groups):
                refined.append(sorted(groups[signature]))
        cells = refined
        if not split:
            return cells


def individualize(cells: Partition, v: int) -> Partition:
    out = []
    for cell in cells:
        if v in cell and len(cell) > 1:
            out.append([v])
            out.append([u for u in cell if u != v])
        else:
            out.append(cell)
    return out


def quotient_invariant(adj: Sequence[Set[int]], cells: Partition) -> Invariant:
    """Cell sizes and the quotient matrix of an equitable partition"""
    cell_of = {v: i for i, cell in enumerate(cells) for v in cell}
    rows = []
    for cell in cells:
        counts = Counter(cell_of[w] for w in adj[cell[0]])
        rows.append((len(cell),) + tuple(sorted(counts.items())))
    return tuple(rows)


def _first_nontrivial(cells: Partition) -> Optional[int]:
    for i, cell in enumerate(cells):
        if len(cell) > 1:
            return i
    return None


def _orbit(point: int, generators: List[Tuple[int, ...]]) -> Set[int]:
    seen = {point}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = g[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


class AutomorphismSearch:
    """Individualization-refinement search for generators of Aut(graph).

    The first path individualizes the first vertex of the first nontrivial
    cell until the partition is discrete. Working upwards from the deepest
    level, every vertex of the target cell outside the known orbit of the
    path vertex is tried; a subtree either yields one automorphism mapping
    the path vertex there or is exhausted. The generators found form a
    strong generating set relative to the path vertices.
    """

    def __init__(self, graph: Graph, initial: Optional[Partition] = None):
        self.graph = graph
        self.adj = graph.adjacency()
        self.n = graph.vertex_count
        self.nodes = 0
        start = initial if initial is not None else [list(range(self.n))]
        self.root = refine(self.adj, start)

    def _first_path(self):
        partitions = [self.root]
        invariants = [quotient_invariant(self.adj, self.root)]
        path: List[int] = []
        cells = self.root
        while True:
            i = _first_nontrivial(cells)
            if i is None:
                break
            v = cells[i][0]
            path.append(v)
            cells = refine(self.adj, individualize(cells, v))
            partitions.append(cells)
            invariants.append(quotient_invariant(self.adj, cells))
        return path, partitions, invariants

    def _leaf_permutation(self, leaf: Partition) -> Optional[Tuple[int, ...]]:
        images = [0] * self.n
        for source, target in zip(self.first_leaf, leaf):
            images[source[0]] = target[0]
        images = tuple(images)
        return images if is_permutation_of_edges(self.graph, images) else None

    def _search(self, cells: Partition, depth: int) -> Optional[Tuple[int, ...]]:
        self.nodes += 1
        if quotient_invariant(self.adj, cells) != self.invariants[depth]:
            return None
        i = _first_nontrivial(cells)
        if i is None:
            return self._leaf_permutation(cells)
        for u in cells[i]:
            found = self._search(refine(self.adj, individualize(cells, u)), depth + 1)
            if found is not None:
                return found
        return None

    def run(self) -> List[Tuple[int, ...]]:
        path, partitions, self.invariants = self._first_path()
        self.first_leaf = partitions[-1]
        generators: List[Tuple[int, ...]] = []
        for level in range(len(path) - 1, -1, -1):
            cells = partitions[level]
            v = path[level]
            target_cell = next(c for c in cells if v in c)
            orbit = _orbit(v, generators)
            for w in target_cell:
                if w in orbit:
                    continue
                found = self._search(refine(self.adj, individualize(cells, w)), level + 1)
                if found is not None:
                    generators.append(found)
                    orbit = _orbit(v, generators)
        logger.debug("Automorphism search: %d generators, %d nodes", len(generators), self.nodes)
        return generators


def automorphism_group(graph: Graph, max_vertices: int = DEFAULT_MAX_VERTICES,
                       initial: Optional[Partition] = None) -> PermutationGroup:
    """Aut(graph) as a permutation group on the vertices"""
    if graph.vertex_count < 1:
        raise ConstructionError("automorphism group needs at least one vertex")
    if graph.vertex_count > max_vertices:
        raise BudgetExceededError(
            f"graph has {graph.vertex_count} vertices, limit is {max_vertices}",
            {"vertices": graph.vertex_count, "limit": max_vertices},
        )
    generators = AutomorphismSearch(graph, initial).run()
    return PermutationGroup([Permutation(g, check=False) for g in generators],
                            degree=graph.vertex_count, name="Aut")


def brute_force_automorphisms(graph: Graph,
                              max_vertices: int = BRUTE_FORCE_MAX_VERTICES) -> List[Tuple[int, ...]]:
    """Every edge-preserving vertex permutation, by trying all n! of them"""
    if graph.vertex_count > max_vertices:
        raise BudgetExceededError(f"brute force limited to {max_vertices} vertices",
                                  {"vertices": graph.vertex_count})
    return [p for p in itertools.permutations(range(graph.vertex_count))
            if is_permutation_of_edges(graph, p)]

