"""Witness graphs: asymmetric graphs, unions of asymmetric copies, the uniform example"""
import logging
from typing import List

from graphs.graph import disjoint_union
from models.graph_models import Graph
from utils.errors import ConstructionError

logger = logging.getLogger(__name__)


def asymmetric_witness(m: int) -> Graph:
    """A connected graph on m vertices with no nontrivial automorphism.

    For m >= 6 this is the path 0 - 1 - ... - (m-2) with an extra vertex
    m-1 joined to 1 and 2. The triangle {1, 2, m-1} carries pendant paths of
    lengths 1, m-4 and 0, which differ, so every automorphism fixes the
    triangle pointwise and then the whole graph. There are no asymmetric
    graphs on 2 to 5 vertices.

    The graph is fixed by this formula rather than picked as the first hit
    of a search over all graphs of order m. For m = 6 it is one of the eight
    asymmetric graphs of that order, not necessarily the first one in any
    enumeration; every caller only needs some connected asymmetric graph.
    """
    if m == 1:
        return Graph(vertex_count=1)
    if m < 6:
        raise ConstructionError(f"no asymmetric graph on {m} vertices (need m = 1 or m >= 6)")
    edges = [(i, i + 1) for i in range(m - 2)] + [(1, m - 1), (2, m - 1)]
    return Graph(vertex_count=m, edges=edges)


def construct_example1(r: int, m: int) -> Graph:
    """r disjoint copies of asymmetric_witness(m); every automorphism permutes whole copies"""
    if r < 2:
        raise ConstructionError("example needs r >= 2 components")
    component = asymmetric_witness(m)
    return disjoint_union([component] * r).graph


def construct_figure1(n: int, with_xy_edge: bool = True) -> Graph:
    """n-uniform graph with automorphism group S_n^(3) + S_n + I_2.

    Vertices a_i = i, b_i = n+i, c_i = 2n+i, d_i = 3n+i, x = 4n, y = 4n+1.
    Each a_i b_i c_i is a triangle, x is joined to every c_i and d_i, y to
    every b_i, and optionally x to y.
    """
    if n < 5:
        raise ConstructionError("construction needs n >= 5")
    a, b, c, d = 0, n, 2 * n, 3 * n
    x, y = 4 * n, 4 * n + 1
    edges = []
    for i in range(n):
        edges += [(a + i, b + i), (b + i, c + i), (a + i, c + i)]
        edges += [(c + i, x), (d + i, x), (b + i, y)]
    if with_xy_edge:
        edges.append((x, y))
    logger.debug("figure1(n=%d, xy=%s): %d edges", n, with_xy_edge, len(edges))
    return Graph(vertex_count=4 * n + 2, edges=edges)


def figure1_labels(n: int) -> List[str]:
    labels = []
    for prefix in "abcd":
        labels += [f"{prefix}{i}" for i in range(n)]
    return labels + ["x", "y"]


def matched_orbit_graph(n: int, component_sizes: List[int]) -> Graph:
    """Blocks of n vertices whose group is S_n^(r_1) + ... + S_n^(r_s) + I_m.

    Blocks of one component are chained by aligned perfect matchings. Block
    k gets its own hub joined to all of it, and the hub carries a pendant
    path of k+2 vertices so that no two blocks can be exchanged.
    """
    if n < 3:
        raise ConstructionError("blocks need n >= 3")
    if not component_sizes or min(component_sizes) < 1:
        raise ConstructionError("component sizes must be positive")
    edges = []
    blocks: List[List[int]] = []
    vertex = 0
    for size in component_sizes:
        component = []
        for _ in range(size):
            component.append(list(range(vertex, vertex + n)))
            vertex += n
        for left, right in zip(component, component[1:]):
            edges += [(left[i], right[i]) for i in range(n)]
        blocks.extend(component)
    for k, block in enumerate(blocks):
        hub = vertex
        vertex += 1
        edges += [(hub, v) for v in block]
        previous = hub
        for _ in range(k + 2):
            edges.append((previous, vertex))
            previous = vertex
            vertex += 1
    return Graph(vertex_count=vertex, edges=edges)
