"""Basic graph operations: complement, disjoint union, relabelling, components"""
import itertools
from typing import Iterable, List, Sequence

import networkx as nx

from models.graph_models import Graph, GraphUnion


def complement(graph: Graph) -> Graph:
    present = graph.edge_set()
    edges = [e for e in itertools.combinations(range(graph.vertex_count), 2) if e not in present]
    return Graph(vertex_count=graph.vertex_count, edges=edges)


def disjoint_union(graphs: Sequence[Graph]) -> GraphUnion:
    """Place the graphs side by side; component i starts at ``offsets[i]``"""
    edges, offsets, sizes = [], [], []
    offset = 0
    for g in graphs:
        offsets.append(offset)
        sizes.append(g.vertex_count)
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.vertex_count
    return GraphUnion(graph=Graph(vertex_count=offset, edges=edges),
                      offsets=tuple(offsets), sizes=tuple(sizes))


def relabel(graph: Graph, mapping: Sequence[int]) -> Graph:
    """Image of the graph under the vertex bijection ``v -> mapping[v]``"""
    return Graph(vertex_count=graph.vertex_count,
                 edges=[(mapping[u], mapping[v]) for u, v in graph.edges])


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on ``vertices``, renumbered in increasing order"""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in graph.edges if u in index and v in index]
    return Graph(vertex_count=len(keep), edges=edges)


def connected_components(graph: Graph) -> List[List[int]]:
    """Components as sorted vertex lists, ordered by their smallest vertex"""
    return sorted(sorted(c) for c in nx.connected_components(to_networkx(graph)))


def is_connected(graph: Graph) -> bool:
    return graph.vertex_count <= 1 or len(connected_components(graph)) == 1


def is_permutation_of_edges(graph: Graph, images: Sequence[int]) -> bool:
    """Does the vertex permutation map edges onto edges?"""
    present = graph.edge_set()
    for u, v in graph.edges:
        a, b = images[u], images[v]
        if (min(a, b), max(a, b)) not in present:
            return False
    return True


def to_networkx(graph: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(graph.vertex_count))
    G.add_edges_from(graph.edges)
    return G


def from_networkx(G: nx.Graph) -> Graph:
    """Relabel nodes 0..n-1 in sorted order"""
    nodes = sorted(G.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph(vertex_count=len(nodes), edges=[(index[u], index[v]) for u, v in G.edges()])
