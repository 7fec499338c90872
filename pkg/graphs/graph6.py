"""graph6 encoding through networkx"""
import logging
from pathlib import Path
from typing import Iterator, List, Union

import networkx as nx

from graphs.graph import from_networkx, to_networkx
from models.graph_models import Graph
from utils.errors import GraphFormatError

logger = logging.getLogger(__name__)

MAX_GRAPH6_VERTICES = 62


def to_graph6(graph: Graph) -> str:
    """Canonical graph6 line (no header, no newline)"""
    if graph.vertex_count > MAX_GRAPH6_VERTICES:
        raise GraphFormatError(f"graph6 here supports at most {MAX_GRAPH6_VERTICES} vertices")
    data = nx.to_graph6_bytes(to_networkx(graph), nodes=list(range(graph.vertex_count)), header=False)
    return data.decode("ascii").strip()


def from_graph6(line: Union[str, bytes]) -> Graph:
    if isinstance(line, str):
        line = line.encode("ascii")
    line = line.strip()
    if line.startswith(b">>graph6<<"):
        line = line[len(b">>graph6<<"):]
    if not line:
        raise GraphFormatError("empty graph6 line")
    if any(ch < 63 or ch > 126 for ch in line):
        raise GraphFormatError(f"invalid graph6 characters in {line!r}")
    try:
        G = nx.from_graph6_bytes(line)
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise GraphFormatError(f"malformed graph6 line {line!r}: {e}") from e
    return from_networkx(G)


def iter_graph6_file(path: Union[str, Path]) -> Iterator[Graph]:
    """One graph per non-empty line"""
    with open(path, 'r') as f:
        for number, line in enumerate(f, 1):
            if not line.strip():
                continue
            try:
                yield from_graph6(line)
            except GraphFormatError as e:
                raise GraphFormatError(f"{path}:{number}: {e}") from e


def write_graph6_file(path: Union[str, Path], graphs: List[Graph]):
    with open(path, 'w') as f:
        for g in graphs:
            f.write(to_graph6(g) + "\n")
    logger.info("Wrote %d graphs to %s", len(graphs), path)
