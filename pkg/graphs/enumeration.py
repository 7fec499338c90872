"""Enumeration of small graphs, labeled or one per isomorphism class"""
import itertools
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

import networkx as nx

from graphs.graph import to_networkx
from models.graph_models import Graph
from utils.errors import ConstructionError

logger = logging.getLogger(__name__)

DEFAULT_MAX_VERTICES = 7


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) graphs on vertices 0..n-1, by edge bitmask over lexicographic pairs"""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(vertex_count=n, edges=[p for i, p in enumerate(pairs) if mask >> i & 1])


@lru_cache(maxsize=None)
def isomorphism_class_representatives(n: int) -> Tuple[Graph, ...]:
    """One graph per isomorphism class on n vertices.

    Every graph on n vertices arises from one on n-1 vertices by adding a
    vertex joined to some subset, so extending the representatives for n-1
    reaches every class. Candidates are bucketed by Weisfeiler-Lehman hash
    and compared with a full isomorphism test inside a bucket.
    """
    if n == 0:
        return (Graph(vertex_count=0),)
    buckets: Dict[str, List[nx.Graph]] = {}
    reps: List[Graph] = []
    for base in isomorphism_class_representatives(n - 1):
        for size in range(n):
            for subset in itertools.combinations(range(n - 1), size):
                candidate = Graph(vertex_count=n,
                                  edges=list(base.edges) + [(v, n - 1) for v in subset])
                G = to_networkx(candidate)
                key = nx.weisfeiler_lehman_graph_hash(G, iterations=3)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(G, H) for H in bucket):
                    continue
                bucket.append(G)
                reps.append(candidate)
    logger.info("%d isomorphism classes of graphs on %d vertices", len(reps), n)
    return tuple(reps)


def enumerate_all_graphs(n: int, deduplicate: bool = False,
                         max_vertices: int = DEFAULT_MAX_VERTICES) -> Iterator[Graph]:
    if n < 0:
        raise ConstructionError("vertex count must be non-negative")
    if n > max_vertices:
        raise ConstructionError(f"refusing to enumerate graphs on {n} > {max_vertices} vertices")
    if deduplicate:
        yield from isomorphism_class_representatives(n)
    else:
        yield from enumerate_labeled_graphs(n)


def graph_corpus(max_vertices: int = DEFAULT_MAX_VERTICES, min_vertices: int = 1) -> Iterator[Tuple[str, Graph]]:
    """Isomorphism-class representatives for every order, with stable ids ``n<k>-<i>``"""
    for n in range(min_vertices, max_vertices + 1):
        for i, g in enumerate(enumerate_all_graphs(n, deduplicate=True, max_vertices=max_vertices)):
            yield f"n{n}-{i:05d}", g
