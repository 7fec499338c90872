"""The action of a graph's automorphism group on its edges"""
import logging
from typing import List, Optional, Tuple

from groups.permutation import Permutation
from groups.perm_group import PermutationGroup
from models.graph_models import Graph
from models.symmetry_models import EdgeAction
from symmetry.automorphisms import automorphism_group
from utils.errors import ConstructionError

logger = logging.getLogger(__name__)


def induced_edge_permutation(graph: Graph, images: Tuple[int, ...]) -> Permutation:
    index = graph.edge_index()
    out = []
    for u, v in graph.edges:
        a, b = images[u], images[v]
        out.append(index[(min(a, b), max(a, b))])
    return Permutation(out, check=False)


def edge_action(graph: Graph, aut: Optional[PermutationGroup] = None) -> EdgeAction:
    """Image of Aut(graph) in Sym(E), with the order of the kernel.

    Edges are labelled in lexicographic order of their endpoint pairs.
    """
    if graph.edge_count == 0:
        raise ConstructionError("edge action needs at least one edge")
    aut = aut or automorphism_group(graph)
    gens = [induced_edge_permutation(graph, g.images) for g in aut.generators]
    image = PermutationGroup(gens, degree=graph.edge_count, name="Aut|E")
    kernel_order = aut.order() // image.order()
    if kernel_order > 1:
        logger.info("Edge action has a kernel of order %d", kernel_order)
    return EdgeAction(group=image, kernel_order=kernel_order,
                      vertex_group_order=aut.order(), edge_index=list(graph.edges))
