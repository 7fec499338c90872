"""Edge-list files and witness JSON"""
import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from graphs.graph6 import to_graph6
from models.graph_models import Graph, WitnessRecord
from utils.errors import GraphFormatError

logger = logging.getLogger(__name__)


def parse_edge_list(text: str) -> Graph:
    """``n=<count>`` header, then one ``u v`` pair per line; ``#`` starts a comment"""
    vertex_count: Optional[int] = None
    edges = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            if vertex_count is not None:
                raise GraphFormatError(f"line {number}: repeated n= header")
            try:
                vertex_count = int(line[2:])
            except ValueError:
                raise GraphFormatError(f"line {number}: bad vertex count {line!r}")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {number}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"line {number}: non-integer vertex in {line!r}")
    if vertex_count is None:
        raise GraphFormatError("missing n= header")
    return Graph(vertex_count=vertex_count, edges=edges)


def format_edge_list(graph: Graph) -> str:
    lines = [f"n={graph.vertex_count}"] + [f"{u} {v}" for u, v in graph.edges]
    return "\n".join(lines) + "\n"


def read_edge_list(path: Union[str, Path]) -> Graph:
    with open(path, 'r') as f:
        return parse_edge_list(f.read())


def write_edge_list(path: Union[str, Path], graph: Graph):
    with open(path, 'w') as f:
        f.write(format_edge_list(graph))


def witness_record(name: str, graph: Graph, params: Optional[Dict[str, int]] = None,
                   labels: Optional[List[str]] = None) -> WitnessRecord:
    return WitnessRecord(name=name, params=params or {}, vertex_count=graph.vertex_count,
                         edges=list(graph.edges), labels=labels or [], graph6=to_graph6(graph))


def save_witness(path: Union[str, Path], record: WitnessRecord):
    with open(path, 'w') as f:
        json.dump(record.model_dump(), f, indent=2)
    logger.info("Saved witness %s to %s", record.name, path)
