"""Exact distinguishing numbers of permutation groups and graphs"""
import itertools
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

from distinguish.coloring import (
    growth_prefixes, is_distinguishing, preserving_element, restricted_growth_strings,
)
from groups.perm_group import ChainLevel, PermutationGroup
from models.config_models import BudgetConfig
from models.distinguish_models import Coloring, DistinguishingVerdict, MinimalityProof
from models.graph_models import Graph
from symmetry.automorphisms import automorphism_group
from symmetry.edge_action import edge_action
from utils.errors import BudgetExceededError, ConstructionError

logger = logging.getLogger(__name__)

# Fixed so witnesses never depend on caller-side seeds or scheduling
RANDOM_PHASE_SEED = 20_201
PREFIX_LENGTH = 4


def _search_chunk(chain: List[ChainLevel], degree: int, d: int,
                  prefix: Tuple[int, ...], limit: int) -> Tuple[Optional[Tuple[int, ...]], int, bool]:
    """First distinguishing coloring extending ``prefix``: (classes or None, nodes, complete)"""
    nodes = 0
    for classes in restricted_growth_strings(degree, d, prefix):
        nodes += 1
        if preserving_element(chain, degree, classes) is None:
            return classes, nodes, True
        if nodes >= limit:
            return None, nodes, False
    return None, nodes, True


class DistinguishingSearch:
    """Search for the least number of colors that breaks every symmetry of G.

    Level d first tries seeded random colorings, then enumerates colorings
    up to renaming of colors. The enumeration is cut into chunks by the
    colors of the first points; with several workers the chunks run in a
    process pool, and the first chunk in order that holds a witness wins,
    so results do not depend on the worker count.
    """

    def __init__(self, G: PermutationGroup, budget: Optional[BudgetConfig] = None, workers: int = 1):
        self.G = G
        self.budget = budget or BudgetConfig()
        self.workers = max(1, workers)
        self.nodes = 0

    def _random_phase(self, d: int) -> Optional[Tuple[int, ...]]:
        rng = random.Random(RANDOM_PHASE_SEED * 1000 + d)
        chain = self.G.stabilizer_chain()
        for _ in range(self.budget.random_attempts):
            classes = tuple(rng.randrange(d) for _ in range(self.G.degree))
            self.nodes += 1
            if preserving_element(chain, self.G.degree, classes) is None:
                return classes
        return None

    def _exhaustive_phase(self, d: int) -> Tuple[Optional[Tuple[int, ...]], bool]:
        chain = self.G.stabilizer_chain()
        degree = self.G.degree
        prefixes = growth_prefixes(degree, d, PREFIX_LENGTH)
        limit = max(1, self.budget.max_colorings // len(prefixes))
        complete = True
        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                for start in range(0, len(prefixes), self.workers):
                    batch = prefixes[start:start + self.workers]
                    results = list(pool.map(_search_chunk, [chain] * len(batch), [degree] * len(batch),
                                            [d] * len(batch), batch, [limit] * len(batch)))
                    for found, nodes, chunk_complete in results:
                        self.nodes += nodes
                        complete = complete and chunk_complete
                        if found is not None:
                            return found, complete
            return None, complete
        for prefix in prefixes:
            found, nodes, chunk_complete = _search_chunk(chain, degree, d, prefix, limit)
            self.nodes += nodes
            complete = complete and chunk_complete
            if found is not None:
                return found, complete
        return None, complete

    def level(self, d: int, exhaustive_only: bool = False) -> Tuple[Optional[Tuple[int, ...]], bool]:
        """A distinguishing d-coloring if one is found, and whether the search was complete"""
        if not exhaustive_only and d ** self.G.degree > 4 * self.budget.random_attempts:
            found = self._random_phase(d)
            if found is not None:
                return found, True
        return self._exhaustive_phase(d)

    def run(self) -> DistinguishingVerdict:
        G = self.G
        started = time.monotonic()
        verdict = DistinguishingVerdict(degree=G.degree, group_order=G.order())
        if G.is_trivial():
            verdict.value = verdict.upper_bound = 1
            verdict.witness = Coloring(colors=(1,) * G.degree, d=1)
        else:
            exhausted_below = True
            lower = 2
            for d in range(2, G.degree + 1):
                found, complete = self.level(d)
                if found is not None:
                    verdict.witness = Coloring.from_classes(found, d)
                    verdict.upper_bound = d
                    if exhausted_below:
                        verdict.value = d
                    else:
                        verdict.proof_of_minimality = MinimalityProof.BUDGET_EXCEEDED
                        verdict.notes.append(f"levels below {d} not exhausted")
                        logger.warning("Distinguishing search for %r hit its budget; %d <= D <= %d",
                                       G, lower, d)
                    break
                if complete and exhausted_below:
                    lower = d + 1
                else:
                    exhausted_below = False
            if verdict.witness is None:
                verdict.witness = Coloring.from_classes(range(G.degree), G.degree)
                verdict.upper_bound = G.degree
                verdict.proof_of_minimality = MinimalityProof.BUDGET_EXCEEDED
            verdict.lower_bound = lower
        if verdict.witness is not None:
            verdict.certificate_checked = is_distinguishing(G, verdict.witness)
        verdict.lower_bound = verdict.value or verdict.lower_bound
        verdict.nodes_expanded = self.nodes
        verdict.elapsed_seconds = round(time.monotonic() - started, 3)
        return verdict


def distinguishing_number(G: PermutationGroup, budget: Optional[BudgetConfig] = None,
                          workers: int = 1) -> DistinguishingVerdict:
    return DistinguishingSearch(G, budget, workers).run()


def distinguishing_number_oracle(G: PermutationGroup, max_degree: int = 8,
                                 max_order: int = 5040) -> int:
    """D(G) by trying every coloring against every group element"""
    if G.degree > max_degree or G.order() > max_order:
        raise BudgetExceededError(f"oracle limited to degree {max_degree} and order {max_order}",
                                  {"degree": G.degree, "order": G.order()})
    points = range(G.degree)
    moving = [g for g in G.elements() if any(g[x] != x for x in points)]
    for d in itertools.count(1):
        for colors in itertools.product(range(d), repeat=G.degree):
            if not any(all(colors[g[x]] == colors[x] for x in points) for g in moving):
                return d


def graph_distinguishing_number(graph: Graph, budget: Optional[BudgetConfig] = None,
                                workers: int = 1,
                                aut: Optional[PermutationGroup] = None) -> DistinguishingVerdict:
    """D(graph): the distinguishing number of Aut(graph) on the vertices"""
    budget = budget or BudgetConfig()
    aut = aut or automorphism_group(graph, budget.max_vertices)
    verdict = distinguishing_number(aut, budget, workers)
    verdict.action = "vertex"
    return verdict


def graph_distinguishing_index(graph: Graph, budget: Optional[BudgetConfig] = None,
                               workers: int = 1,
                               aut: Optional[PermutationGroup] = None) -> DistinguishingVerdict:
    """D'(graph): the distinguishing number of Aut(graph) acting on the edges.

    Automorphisms that fix every edge form the kernel of that action; the
    value is the one for the image group and the kernel order is reported.
    """
    if graph.edge_count == 0:
        raise ConstructionError("distinguishing index needs at least one edge")
    budget = budget or BudgetConfig()
    aut = aut or automorphism_group(graph, budget.max_vertices)
    action = edge_action(graph, aut)
    verdict = distinguishing_number(action.group, budget, workers)
    verdict.action = "edge"
    verdict.kernel_order = action.kernel_order
    if action.kernel_order > 1:
        verdict.notes.append(f"edge action has a kernel of order {action.kernel_order}")
    if graph.edge_count == 1:
        verdict.notes.append("graph of size 1")
    return verdict
