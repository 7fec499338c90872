"""Standard graph families"""
import itertools

from models.graph_models import Graph
from utils.errors import ConstructionError


def _check(n: int, minimum: int = 1):
    if n < minimum:
        raise ConstructionError(f"need n >= {minimum}, got {n}")


def empty_graph(n: int) -> Graph:
    _check(n, 0)
    return Graph(vertex_count=n)


def complete_graph(n: int) -> Graph:
    _check(n)
    return Graph(vertex_count=n, edges=list(itertools.combinations(range(n), 2)))


def star_graph(n: int) -> Graph:
    """K_{1,n}: centre 0 joined to leaves 1..n"""
    _check(n)
    return Graph(vertex_count=n + 1, edges=[(0, i) for i in range(1, n + 1)])


def path_graph(n: int) -> Graph:
    _check(n)
    return Graph(vertex_count=n, edges=[(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    _check(n, 3)
    return Graph(vertex_count=n, edges=[(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
