from pydantic import BaseModel, Field, ConfigDict, ValidationError, model_validator
from typing import Any, Dict, List, Set, Tuple

from utils.errors import GraphFormatError

Edge = Tuple[int, int]


class Graph(BaseModel):
    """Simple undirected graph on vertices 0..vertex_count-1.

    Edges are stored as ``(u, v)`` with ``u < v`` in lexicographic order,
    which is also the edge labeling used for the edge action.
    """
    model_config = ConfigDict(frozen=True)

    vertex_count: int = Field(..., ge=0)
    edges: Tuple[Edge, ...] = ()

    def __init__(self, **data: Any):
        try:
            super().__init__(**data)
        except ValidationError as e:
            raise GraphFormatError("; ".join(err["msg"] for err in e.errors())) from e

    @model_validator(mode="before")
    @classmethod
    def normalize_edges(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        n = data.get("vertex_count", 0)
        seen = set()
        for edge in data.get("edges", ()):
            u, v = edge
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) outside 0..{n - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"duplicate edge {key}")
            seen.add(key)
        return {**data, "edges": tuple(sorted(seen))}

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_set(self) -> Set[Edge]:
        return set(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set()

    def adjacency(self) -> List[Set[int]]:
        adj: List[Set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.adjacency()]

    def edge_index(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}


class GraphUnion(BaseModel):
    """A disjoint union together with where each component starts"""
    model_config = ConfigDict(frozen=True)

    graph: Graph
    offsets: Tuple[int, ...] = ()
    sizes: Tuple[int, ...] = ()


class WitnessRecord(BaseModel):
    """JSON form of a constructed witness graph"""
    name: str
    params: Dict[str, int] = {}
    vertex_count: int
    edges: List[Edge]
    labels: List[str] = []
    graph6: str
